"""Generic morphism detection over any enumerable category.

All operations run on the common contract (objects / hom / compose /
identity) and therefore apply both to table categories and to module
categories.  Module categories get structure-aware fast paths whose
agreement with the generic definitions is covered by the oracle tests.
"""

from __future__ import annotations

from .errors import CapExceededError, default_bound
from .modcat import ModuleCategory
from .modules import (ModMorphism, identity as mod_identity,
                      is_epi_matrix, is_mono_matrix, solve_hom)


def _dom(cat, f):
    return f.dom


def _cod(cat, f):
    return f.cod


def is_mono(cat, f, bound: int | None = None, method: str = "auto") -> bool:
    """Left cancellation: f∘u = f∘v forces u = v for enumerable pairs."""
    if bound is None:
        bound = default_bound()
    if method == "auto" and isinstance(cat, ModuleCategory):
        return is_mono_matrix(f)
    seen_budget = 0
    for s in cat.objects():
        pairs = {}
        for u in cat.hom(s, f.dom, bound):
            seen_budget += 1
            if seen_budget > bound:
                raise CapExceededError("is_mono sweep exceeded the cap",
                                       needed=seen_budget, bound=bound)
            key = cat.compose(f, u)
            if key in pairs and pairs[key] != u:
                return False
            pairs[key] = u
    return True


def is_epi(cat, f, bound: int | None = None, method: str = "auto") -> bool:
    """Right cancellation, dual to is_mono."""
    if bound is None:
        bound = default_bound()
    if method == "auto" and isinstance(cat, ModuleCategory):
        return is_epi_matrix(f)
    seen_budget = 0
    for s in cat.objects():
        pairs = {}
        for u in cat.hom(f.cod, s, bound):
            seen_budget += 1
            if seen_budget > bound:
                raise CapExceededError("is_epi sweep exceeded the cap",
                                       needed=seen_budget, bound=bound)
            key = cat.compose(u, f)
            if key in pairs and pairs[key] != u:
                return False
            pairs[key] = u
    return True


def find_retraction(cat, m, bound: int | None = None):
    """First s (canonical hom order) with s∘m = id(dom m), else None."""
    if isinstance(cat, ModuleCategory) and isinstance(m, ModMorphism):
        ident = mod_identity(m.dom)
        return solve_hom(m.cod, m.dom, right=[(m, ident)], lex=True)
    ident = cat.identity(m.dom)
    for s in cat.hom(m.cod, m.dom, bound):
        if cat.compose(s, m) == ident:
            return s
    return None


def find_section(cat, p, bound: int | None = None):
    """First s with p∘s = id(cod p), else None."""
    if isinstance(cat, ModuleCategory) and isinstance(p, ModMorphism):
        ident = mod_identity(p.cod)
        return solve_hom(p.cod, p.dom, left=[(p, ident)], lex=True)
    ident = cat.identity(p.cod)
    for s in cat.hom(p.cod, p.dom, bound):
        if cat.compose(p, s) == ident:
            return s
    return None


def has_retraction(cat, m, bound: int | None = None) -> bool:
    """Existence-only split-mono test (no canonical-witness guarantee)."""
    if isinstance(cat, ModuleCategory) and isinstance(m, ModMorphism):
        return solve_hom(m.cod, m.dom,
                         right=[(m, mod_identity(m.dom))]) is not None
    return find_retraction(cat, m, bound) is not None


def has_section(cat, p, bound: int | None = None) -> bool:
    if isinstance(cat, ModuleCategory) and isinstance(p, ModMorphism):
        return solve_hom(p.cod, p.dom,
                         left=[(p, mod_identity(p.cod))]) is not None
    return find_section(cat, p, bound) is not None
