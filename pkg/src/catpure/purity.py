"""Purity of monos/epis relative to a finite test suite.

A morphism is *pure* relative to a TestSuite when every lifting problem
drawn from the suite is solvable; it is *strongly pure* when every such
square moreover factorizes through a split morphism.  In biproduct-closed
module categories the factorization is constructed explicitly (through a
product apex for monos, a coproduct apex for epis) and every produced
witness is re-verified equation by equation.  Also hosts regularity
checks against (co)kernel pairs and the pushout/pullback stability
sweeps.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import (CapExceededError, MissingLimitError, PreconditionError,
                     default_bound)
from .modcat import ModuleCategory, morphism_to_literal
from . import modules as mods
from . import colimits as cl


# --------------------------------------------------------------------------
# test suites

class TestSuite:
    """All objects of `cat` up to `bound` in size, with all morphisms
    among them, plus caches shared across purity sweeps.

    The cached "lift set" for a test morphism t : S -> T and an object X
    is { e o t : e in hom(T, X) }, i.e. the morphisms S -> X that lift
    along t.  Purity of m : C -> D reduces to set membership: a failing
    square exists iff some c : S -> C has m o c in the lift set at D but
    c itself not in the lift set at C.
    """

    def __init__(self, cat, bound: int):
        if bound < 0:
            raise PreconditionError("suite bound must be non-negative")
        self.cat = cat
        self.bound = bound
        objs = [o for o in cat.objects() if cat.obj_size(o) <= bound]
        objs.sort(key=lambda o: (cat.obj_size(o), repr(o)))
        self.objects = objs
        self._hom: dict = {}
        self._lift: dict = {}
        self._mono_reports: dict = {}
        self._epi_reports: dict = {}

    def hom(self, a, b):
        key = (a, b)
        got = self._hom.get(key)
        if got is None:
            got = self._hom[key] = self.cat.hom(a, b)
        return got

    def test_morphisms(self):
        """All suite morphisms, source and target in ascending size."""
        for s in self.objects:
            for t_ob in self.objects:
                for t in self.hom(s, t_ob):
                    yield t

    def lift_set(self, t, x) -> frozenset:
        return frozenset(self.lift_map(t, x))

    def lift_map(self, t, x) -> dict:
        """composite e o t -> first such e, for e in hom(cod t, x)."""
        key = (t, x)
        got = self._lift.get(key)
        if got is None:
            comp = self.cat.compose
            got = {}
            for e in self.hom(t.cod, x):
                got.setdefault(comp(e, t), e)
            self._lift[key] = got
        return got

    def colift_map(self, p, s) -> dict:
        """composite p o l -> first such l, for l in hom(s, dom p)."""
        key = ("colift", p, s)
        got = self._lift.get(key)
        if got is None:
            comp = self.cat.compose
            got = {}
            for l in self.hom(s, p.dom):
                got.setdefault(comp(p, l), l)
            self._lift[key] = got
        return got


@dataclass(frozen=True)
class SquareInto:
    """Commuting square m o c = d o t over a target morphism m."""
    t: object
    c: object
    d: object
    m: object

    def validate(self, cat):
        if cat.compose(self.m, self.c) != cat.compose(self.d, self.t):
            raise PreconditionError("square does not commute: m o c != d o t")

    def to_json(self) -> dict:
        return {k: _enc(getattr(self, k)) for k in ("t", "c", "d", "m")}


@dataclass(frozen=True)
class PurityReport:
    morphism: object
    pure: bool
    witness: object  # SquareInto | dict | None
    suite_bound: int
    squares_checked: int

    def __bool__(self) -> bool:
        return self.pure

    def to_json(self) -> dict:
        w = self.witness
        if isinstance(w, SquareInto):
            w = w.to_json()
        elif isinstance(w, dict):
            w = {k: _enc(v) for k, v in w.items()}
        return {"morphism": _enc(self.morphism), "pure": self.pure,
                "witness": w, "suite_bound": self.suite_bound,
                "squares_checked": self.squares_checked}


def _enc(x):
    if isinstance(x, mods.ModMorphism):
        return morphism_to_literal(x)
    return repr(x)


# --------------------------------------------------------------------------
# purity sweeps

def is_pure_mono(m, tests: TestSuite) -> PurityReport:
    """Every suite square into m admits a diagonal lift.

    The counterexample square, when one exists, is the first failure in
    ascending test-object size, so it is minimal for that order.
    """
    cached = tests._mono_reports.get(m)
    if cached is not None:
        return cached
    cat = tests.cat
    # When m is itself mono, a square over t fails iff the induced square
    # over the mono part of t = (image inclusion) o (coimage quotient)
    # fails: the quotient part lifts automatically since m cancels it.
    # So the sweep may restrict to mono test morphisms.
    mono_only = (isinstance(cat, ModuleCategory)
                 and mods.is_mono_matrix(m))
    checked = 0
    report = None
    for t in tests.test_morphisms():
        if mono_only and not mods.is_mono_matrix(t):
            continue
        lifts_c = tests.lift_set(t, m.dom)
        lifts_d = tests.lift_set(t, m.cod)
        for c in tests.hom(t.dom, m.dom):
            checked += 1
            if c in lifts_c:
                continue
            mc = cat.compose(m, c)
            if mc not in lifts_d:
                continue  # no commuting square over this (t, c)
            d = next(d0 for d0 in tests.hom(t.cod, m.cod)
                     if cat.compose(d0, t) == mc)
            report = PurityReport(m, False, SquareInto(t, c, d, m),
                                  tests.bound, checked)
            break
        if report is not None:
            break
    if report is None:
        report = PurityReport(m, True, None, tests.bound, checked)
    tests._mono_reports[m] = report
    return report


def is_pure_epi(p, tests: TestSuite) -> PurityReport:
    """Every suite morphism into cod(p) lifts through p."""
    cached = tests._epi_reports.get(p)
    if cached is not None:
        return cached
    cat = tests.cat
    checked = 0
    report = None
    for s in tests.objects:
        onto = tests.colift_map(p, s)
        for e in tests.hom(s, p.cod):
            checked += 1
            if e not in onto:
                report = PurityReport(p, False, {"object": s, "e": e},
                                      tests.bound, checked)
                break
        if report is not None:
            break
    if report is None:
        report = PurityReport(p, True, None, tests.bound, checked)
    tests._epi_reports[p] = report
    return report


def _squares_into(m, tests: TestSuite, all_d: bool = True):
    """Suite squares (t, c, d) with m o c = d o t, size-ascending.

    With all_d=False only the first commuting d per (t, c) is emitted.
    """
    cat = tests.cat
    for t in tests.test_morphisms():
        for c in tests.hom(t.dom, m.dom):
            mc = cat.compose(m, c)
            for d in tests.hom(t.cod, m.cod):
                if cat.compose(d, t) == mc:
                    yield SquareInto(t, c, d, m)
                    if not all_d:
                        break


def _squares_onto(p, tests: TestSuite, all_d: bool = True):
    """Suite squares (t : T -> S, d : T -> dom p, e : S -> cod p)
    with p o d = e o t, size-ascending."""
    cat = tests.cat
    for t in tests.test_morphisms():
        for e in tests.hom(t.cod, p.cod):
            et = cat.compose(e, t)
            for d in tests.hom(t.dom, p.dom):
                if cat.compose(p, d) == et:
                    yield t, d, e
                    if not all_d:
                        break


# --------------------------------------------------------------------------
# factorization through split morphisms

@dataclass(frozen=True)
class FactorizationWitness:
    u: object            # the split middle morphism
    splitting: object    # retraction of u (mono case) or section (epi case)
    first: tuple         # legs of the square from the test morphism to u
    second: tuple        # legs of the square from u to the target
    equations: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"u": _enc(self.u), "splitting": _enc(self.splitting),
                "first": [_enc(x) for x in self.first],
                "second": [_enc(x) for x in self.second],
                "equations": dict(self.equations)}


def factor_square_through_split_mono(cat, m, square: SquareInto,
                                     bound=None, lift=None) -> FactorizationWitness:
    """Factor a square into a pure mono through a split mono.

    Procedure: lift e with e o t = c; set b1 := m o e and b2 := d (both
    into cod(m)); form the very weak cokernel pair of t over (b1, b2)
    via the product construction; the first component k1 is the split
    middle morphism.  All five output equations are re-verified.
    """
    square.validate(cat)
    t, c, d = square.t, square.c, square.d
    e = lift if lift is not None else _first_lift(cat, t, c)
    if e is None:
        raise PreconditionError(
            "square does not lift: m is not pure against it")
    b1 = cat.compose(m, e)
    b2 = d
    res = cl.vwck_construct_via_product(cat, t, b1, b2, bound=bound)
    u, k2, z, s = res.k1, res.k2, res.l, res.s
    eqs = {
        "u o t = k2 o t": cat.compose(u, t) == cat.compose(k2, t),
        "m o e = z o u": cat.compose(m, e) == cat.compose(z, u),
        "e o t = c": cat.compose(e, t) == c,
        "z o k2 = d": cat.compose(z, k2) == d,
        "s o u = id": cat.compose(s, u) == cat.identity(u.dom),
    }
    if not all(eqs.values()):
        raise PreconditionError(f"factorization equations failed: {eqs}")
    return FactorizationWitness(u, s, (t, k2), (e, z), eqs)


def factor_square_through_split_epi(cat, p, t, d, e,
                                    bound=None, lift=None) -> FactorizationWitness:
    """Factor a square (t : T -> S, d : T -> dom p, e : S -> cod p) with
    p o d = e o t onto a pure epi p through a split epi.

    Procedure: lift l with p o l = e; form the very weak split pullback
    of (p, e) split by l, over the square (d, t), via the coproduct
    construction (apex T + S); its leg onto S is the split middle
    morphism.  All five output equations are re-verified.
    """
    if cat.compose(p, d) != cat.compose(e, t):
        raise PreconditionError("square does not commute: p o d != e o t")
    l = lift if lift is not None else _first_colift(cat, p, e)
    if l is None:
        raise PreconditionError(
            "square does not lift: p is not pure against it")
    res = cl.vwsp_construct_via_coproduct(cat, p, e, l, d, t, bound=bound)
    u, p_b, r, s = res.p_c, res.p_b, res.r, res.s
    eqs = {
        "u o r = t": cat.compose(u, r) == t,
        "p o p_b = e o u": cat.compose(p, p_b) == cat.compose(e, u),
        "p o l = e": cat.compose(p, l) == e,
        "p_b o r = d": cat.compose(p_b, r) == d,
        "u o s = id": cat.compose(u, s) == cat.identity(u.cod),
    }
    if not all(eqs.values()):
        raise PreconditionError(f"factorization equations failed: {eqs}")
    return FactorizationWitness(u, s, (r, t), (p_b, e), eqs)


def _first_lift(cat, t, c):
    """First e (canonical order) with e o t = c, or None."""
    if isinstance(cat, ModuleCategory):
        return mods.solve_right_factor(t, c)
    return next((e for e in cat.hom(t.cod, c.cod)
                 if cat.compose(e, t) == c), None)


def _first_colift(cat, p, e):
    """First l (canonical order) with p o l = e, or None."""
    if isinstance(cat, ModuleCategory):
        return mods.solve_left_factor(p, e)
    return next((l for l in cat.hom(e.dom, p.dom)
                 if cat.compose(p, l) == e), None)


# --------------------------------------------------------------------------
# strong purity

def is_strongly_pure_mono(m, tests: TestSuite, bound=None) -> bool:
    """Every suite square into m factors through a split mono.

    In biproduct-closed module categories the factorization is built
    constructively square by square (each witness re-verified); in table
    categories split middles are searched among suite morphisms.
    """
    if not is_pure_mono(m, tests).pure:
        return False
    cat = tests.cat
    if isinstance(cat, ModuleCategory) and cat.additive_closed:
        # One representative d per (t, c) suffices here: the construction
        # depends on d only through the leg k2 = <id, d>, and its
        # equations hold for every commuting d once the lift e exists.
        for sq in _squares_into(m, tests, all_d=False):
            lift = tests.lift_map(sq.t, m.dom).get(sq.c)
            factor_square_through_split_mono(cat, m, sq, bound=bound,
                                             lift=lift)
        return True
    for sq in _squares_into(m, tests):
        if not _search_split_mono_factor(cat, m, sq, tests):
            return False
    return True


def is_strongly_pure_epi(p, tests: TestSuite, bound=None) -> bool:
    if not is_pure_epi(p, tests).pure:
        return False
    cat = tests.cat
    if isinstance(cat, ModuleCategory) and cat.additive_closed:
        for t, d, e in _squares_onto(p, tests, all_d=False):
            lift = tests.colift_map(p, e.dom).get(e)
            factor_square_through_split_epi(cat, p, t, d, e, bound=bound,
                                            lift=lift)
        return True
    for t, d, e in _squares_onto(p, tests):
        if not _search_split_epi_factor(cat, p, t, d, e, tests):
            return False
    return True


def _search_split_mono_factor(cat, m, sq: SquareInto, tests) -> bool:
    """Some suite split mono u splits the square (t, c, d) into two
    commuting squares t -> u -> m composing back to the input."""
    t, c, d = sq.t, sq.c, sq.d
    for u in tests.test_morphisms():
        if not any(cat.compose(s, u) == cat.identity(u.dom)
                   for s in tests.hom(u.cod, u.dom)):
            continue
        for a1 in tests.hom(t.dom, u.dom):
            ua1 = cat.compose(u, a1)
            for b1 in tests.hom(t.cod, u.cod):
                if cat.compose(b1, t) != ua1:
                    continue
                for a2 in cat.hom(u.dom, m.dom):
                    if cat.compose(a2, a1) != c:
                        continue
                    ma2 = cat.compose(m, a2)
                    for b2 in cat.hom(u.cod, m.cod):
                        if (cat.compose(b2, u) == ma2
                                and cat.compose(b2, b1) == d):
                            return True
    return False


def _search_split_epi_factor(cat, p, t, d, e, tests) -> bool:
    """Dual search: some suite split epi u splits the square (t, d, e)
    onto p through two commuting squares composing back to the input."""
    for u in tests.test_morphisms():
        if not any(cat.compose(u, s) == cat.identity(u.cod)
                   for s in tests.hom(u.cod, u.dom)):
            continue
        for b1 in tests.hom(t.cod, u.cod):
            for a1 in tests.hom(t.dom, u.dom):
                if cat.compose(u, a1) != cat.compose(b1, t):
                    continue
                for a2 in cat.hom(u.dom, p.dom):
                    if cat.compose(a2, a1) != d:
                        continue
                    pa2 = cat.compose(p, a2)
                    for b2 in cat.hom(u.cod, p.cod):
                        if (cat.compose(b2, u) == pa2
                                and cat.compose(b2, b1) == e):
                            return True
    return False


# --------------------------------------------------------------------------
# regularity

def check_regular_mono(cat, m, bound=None) -> bool:
    """m is the equalizer of its own cokernel pair (up to iso under cod m).

    A missing cokernel pair or equalizer raises MissingLimitError rather
    than returning False.
    """
    ck = cl.cokernel_pair(cat, m, bound=bound)
    if not ck.found:
        raise MissingLimitError("cokernel pair does not exist")
    eq = cl.equalizer(cat, ck.legs[0], ck.legs[1], bound=bound)
    if not eq.found:
        raise MissingLimitError("equalizer of the cokernel pair does not exist")
    return _iso_under(cat, m, eq.legs[0])


def check_regular_epi(cat, p, bound=None) -> bool:
    """p is the coequalizer of its own kernel pair (up to iso under dom p)."""
    kp = cl.kernel_pair(cat, p, bound=bound)
    if not kp.found:
        raise MissingLimitError("kernel pair does not exist")
    cq = cl.coequalizer(cat, kp.legs[0], kp.legs[1], bound=bound)
    if not cq.found:
        raise MissingLimitError("coequalizer of the kernel pair does not exist")
    return _iso_over(cat, p, cq.legs[0])


def _iso_under(cat, m, incl) -> bool:
    """Some isomorphism h with incl o h = m (same codomain)."""
    if m.cod != incl.cod:
        return False
    for h in cat.hom(m.dom, incl.dom):
        if cat.compose(incl, h) != m:
            continue
        if any(cat.compose(k, h) == cat.identity(m.dom)
               and cat.compose(h, k) == cat.identity(incl.dom)
               for k in cat.hom(incl.dom, m.dom)):
            return True
    return False


def _iso_over(cat, p, proj) -> bool:
    """Some isomorphism h with h o proj = p (same domain)."""
    if p.dom != proj.dom:
        return False
    for h in cat.hom(proj.cod, p.cod):
        if cat.compose(h, proj) != p:
            continue
        if any(cat.compose(k, h) == cat.identity(proj.cod)
               and cat.compose(h, k) == cat.identity(p.cod)
               for k in cat.hom(p.cod, proj.cod)):
            return True
    return False


# --------------------------------------------------------------------------
# stability sweeps

@dataclass(frozen=True)
class StabilityReport:
    kind: str
    spans_checked: int
    violations: tuple
    passed: bool

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {"kind": self.kind, "spans_checked": self.spans_checked,
                "violations": [{k: _enc(v) for k, v in viol.items()}
                               for viol in self.violations],
                "passed": self.passed}


def stability_suite_pushout_pure_monos(cat, tests: TestSuite, bound=None,
                                       sample=None, seed=0) -> StabilityReport:
    """Pushing out a strongly pure mono along anything stays strongly pure.

    Sweeps spans (m, f) with shared domain and m a strongly pure mono,
    takes the pushout, and checks the leg opposite m.  `bound` caps the
    number of spans; `sample` instead draws that many spans with a seeded
    RNG (deterministic), for suites too large to sweep exhaustively.
    """
    def check(m, f):
        po = cl.pushout(cat, f, m, bound=bound)
        if not po.found:
            return {"reason": "missing-pushout", "m": m, "f": f}
        pushed = po.legs[0]
        if not is_strongly_pure_mono(pushed, tests):
            return {"reason": "pushout-not-strongly-pure", "m": m, "f": f,
                    "pushed": pushed}
        return None

    spans = _spans(tests, sample, seed)
    checked = 0
    violations = []
    for m, f in spans:
        if not mods_is_mono(cat, m) or not is_strongly_pure_mono(m, tests):
            continue
        checked += 1
        if bound is not None and checked > bound:
            raise CapExceededError("stability sweep exceeded the cap",
                                   needed=checked, bound=bound)
        viol = check(m, f)
        if viol is not None:
            violations.append(viol)
    return StabilityReport("pushout-pure-monos", checked, tuple(violations),
                           not violations)


def stability_suite_pullback_pure_epis(cat, tests: TestSuite, bound=None,
                                       sample=None, seed=0) -> StabilityReport:
    """Pulling back a strongly pure epi along anything stays strongly pure."""
    def check(p, f):
        pb = cl.pullback(cat, p, f, bound=bound)
        if not pb.found:
            return {"reason": "missing-pullback", "p": p, "f": f}
        pulled = pb.legs[1]
        if not is_strongly_pure_epi(pulled, tests):
            return {"reason": "pullback-not-strongly-pure", "p": p, "f": f,
                    "pulled": pulled}
        return None

    cospans = _cospans(tests, sample, seed)
    checked = 0
    violations = []
    for p, f in cospans:
        if not mods_is_epi(cat, p) or not is_strongly_pure_epi(p, tests):
            continue
        checked += 1
        if bound is not None and checked > bound:
            raise CapExceededError("stability sweep exceeded the cap",
                                   needed=checked, bound=bound)
        viol = check(p, f)
        if viol is not None:
            violations.append(viol)
    return StabilityReport("pullback-pure-epis", checked, tuple(violations),
                           not violations)


def _spans(tests: TestSuite, sample, seed):
    """Pairs (m, f) with dom m = dom f, exhaustive or seeded-sampled."""
    all_spans = [(m, f)
                 for c in tests.objects
                 for d in tests.objects
                 for m in tests.hom(c, d)
                 for b in tests.objects
                 for f in tests.hom(c, b)]
    if sample is not None and sample < len(all_spans):
        rng = random.Random(seed)
        return rng.sample(all_spans, sample)
    return all_spans


def _cospans(tests: TestSuite, sample, seed):
    """Pairs (p, f) with cod p = cod f, exhaustive or seeded-sampled."""
    all_cospans = [(p, f)
                   for d in tests.objects
                   for e in tests.objects
                   for p in tests.hom(d, e)
                   for b in tests.objects
                   for f in tests.hom(b, e)]
    if sample is not None and sample < len(all_cospans):
        rng = random.Random(seed)
        return rng.sample(all_cospans, sample)
    return all_cospans


def mods_is_mono(cat, m) -> bool:
    if isinstance(cat, ModuleCategory):
        return mods.is_mono_matrix(m)
    from .core import is_mono
    return is_mono(cat, m)


def mods_is_epi(cat, p) -> bool:
    if isinstance(cat, ModuleCategory):
        return mods.is_epi_matrix(p)
    from .core import is_epi
    return is_epi(cat, p)
