"""Enumerable categories of finite modules.

Three flavours share one class:

* ``fin_vect(p, max_dim)`` — F_p-vector spaces; the dim bound only limits
  enumeration, constructions may create larger objects (they exist in the
  ambient category).
* ``fin_mod(m, max_size)`` — Z/m-modules in invariant-factor form, same
  reading of the bound.
* ``capped_category(p, n)`` — spaces of dim <= n with *all* linear maps.
  Here the bound is a hard existence cap: there simply is no larger
  object, which kills biproducts and many (co)limits.
"""

from __future__ import annotations

import json

from .errors import FormatError, PreconditionError
from .modules import (ModObject, ModMorphism, compose, hom_count,
                      hom_enumerate, identity, zero_object)


def _divisor_chains(m: int, max_size: int):
    """All invariant-factor chains over Z/m of size <= max_size."""
    divisors = [d for d in range(2, m + 1) if m % d == 0]
    out = []

    def go(chain, size, last):
        out.append(tuple(chain))
        for d in divisors:
            if d % last == 0 and size * d <= max_size:
                chain.append(d)
                go(chain, size * d, d)
                chain.pop()

    go([], 1, 1)
    return out


class ModuleCategory:
    """EnumerableCategory of finite Z/m-modules."""

    def __init__(self, m: int, max_size: int, *, vector_only: bool = False,
                 hard_cap: bool = False, name: str | None = None,
                 descriptor: dict | None = None):
        if m < 2:
            raise PreconditionError("modulus must be >= 2")
        self.m = m
        self.max_size = max_size
        self.vector_only = vector_only
        self.hard_cap = hard_cap
        self.name = name or f"FinMod(Z/{m})<= {max_size}"
        self.descriptor = descriptor or {"kind": "finmod", "m": m,
                                         "max_size": max_size}

    @property
    def additive_closed(self) -> bool:
        """Whether biproduct/quotient constructions may leave the bound."""
        return not self.hard_cap

    def objects(self):
        if self.vector_only:
            chains = []
            d = 1
            dim = 0
            while d <= self.max_size:
                chains.append((self.m,) * dim)
                d *= self.m
                dim += 1
        else:
            chains = _divisor_chains(self.m, self.max_size)
        objs = [ModObject(self.m, c) for c in chains]
        objs.sort(key=lambda o: (o.size, o.factors))
        return objs

    def has_object(self, ob: ModObject) -> bool:
        if ob.m != self.m:
            return False
        if self.vector_only and any(d != self.m for d in ob.factors):
            return False
        return ob.size <= self.max_size

    def admits_object(self, ob: ModObject) -> bool:
        """Whether `ob` exists in the ambient category (not just the bound)."""
        if ob.m != self.m:
            return False
        if self.vector_only and any(d != self.m for d in ob.factors):
            return False
        return (not self.hard_cap) or ob.size <= self.max_size

    def obj_size(self, a: ModObject) -> int:
        return a.size

    def hom(self, a: ModObject, b: ModObject, bound=None):
        return list(hom_enumerate(a, b, bound))

    def hom_count(self, a, b) -> int:
        return hom_count(a, b)

    def identity(self, a) -> ModMorphism:
        return identity(a)

    def compose(self, g, f) -> ModMorphism:
        return compose(g, f)

    def zero(self) -> ModObject:
        return zero_object(self.m)

    def morphisms(self, bound=None):
        for a in self.objects():
            for b in self.objects():
                yield from self.hom(a, b, bound)

    def __repr__(self):
        return self.name


def fin_vect(p: int, max_dim: int) -> ModuleCategory:
    return ModuleCategory(p, p ** max_dim, vector_only=True,
                          name=f"FinVect(F_{p})<=dim {max_dim}",
                          descriptor={"kind": "finvect", "p": p,
                                      "max_dim": max_dim})


def fin_mod(m: int, max_size: int) -> ModuleCategory:
    return ModuleCategory(m, max_size)


def capped_category(p: int, n: int) -> ModuleCategory:
    if n < 1:
        raise PreconditionError("dimension cap must be >= 1")
    return ModuleCategory(p, p ** n, vector_only=True, hard_cap=True,
                          name=f"CappedVect(F_{p},{n})",
                          descriptor={"kind": "capped", "p": p, "n": n})


# --------------------------------------------------------------------------
# JSON descriptors and morphism literals

def category_from_descriptor(data) -> ModuleCategory:
    if isinstance(data, str):
        data = json.loads(data)
    kind = data.get("kind")
    try:
        if kind == "finvect":
            return fin_vect(int(data["p"]), int(data["max_dim"]))
        if kind == "capped":
            return capped_category(int(data["p"]), int(data["n"]))
        if kind == "finmod":
            return fin_mod(int(data["m"]), int(data["max_size"]))
    except KeyError as exc:
        raise FormatError(f"category descriptor missing field {exc}") from exc
    raise FormatError(f"unknown category kind {kind!r}")


def morphism_from_literal(cat: ModuleCategory, data) -> ModMorphism:
    """Parse {"dom":[2],"cod":[4],"mat":[[2]]} against a module category."""
    if isinstance(data, str):
        data = json.loads(data)
    for key in ("dom", "cod", "mat"):
        if key not in data:
            raise FormatError(f"morphism literal missing key {key!r}")
    try:
        dom = ModObject(cat.m, tuple(int(d) for d in data["dom"]))
        cod = ModObject(cat.m, tuple(int(d) for d in data["cod"]))
        return ModMorphism(dom, cod, data["mat"])
    except PreconditionError as exc:
        raise FormatError(f"bad morphism literal: {exc}") from exc


def morphism_to_literal(f: ModMorphism) -> dict:
    return {"dom": list(f.dom.factors), "cod": list(f.cod.factors),
            "mat": [list(r) for r in f.mat]}


def object_to_literal(ob: ModObject) -> list:
    return list(ob.factors)
