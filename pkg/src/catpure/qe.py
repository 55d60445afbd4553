"""Morphism-class axioms: pushout/pullback stability, regularity,
composition closure, right-factor closure, retract closure, and the
coproduct characterization of right-factor-closed epi classes.

Every sweep is bounded and every "passes" verdict means "passes up to
the recorded bound"; a failing verdict always carries a complete,
re-checkable witness diagram.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FormatError, MissingLimitError, PreconditionError, default_bound
from .modcat import ModuleCategory, morphism_to_literal
from . import modules as mods
from . import colimits as cl
from .core import has_retraction, has_section
from .purity import TestSuite, _enc
from .purity import check_regular_mono as _regular_mono
from .purity import check_regular_epi as _regular_epi


# --------------------------------------------------------------------------
# morphism classes

@dataclass(frozen=True)
class MorphismClass:
    """A named, total, pure predicate on the morphisms of a category."""
    name: str
    pred: object

    def contains(self, cat, f) -> bool:
        return bool(self.pred(cat, f))


def split_mono_class() -> MorphismClass:
    return MorphismClass("split-mono", lambda cat, f: has_retraction(cat, f))


def split_epi_class() -> MorphismClass:
    return MorphismClass("split-epi", lambda cat, f: has_section(cat, f))


def regular_epi_class() -> MorphismClass:
    cache = {}

    def pred(cat, f):
        got = cache.get(f)
        if got is None:
            try:
                got = _regular_epi(cat, f)
            except MissingLimitError:
                got = False
            cache[f] = got
        return got
    return MorphismClass("regular-epi", pred)


def coker_div_class(q: int) -> MorphismClass:
    """Monos whose cokernel needs a multiple of q generators (q >= 2);
    over a field: monos with coker dimension divisible by q."""
    if q < 2:
        raise PreconditionError("divisor must be at least 2")

    def pred(cat, f):
        if not isinstance(cat, ModuleCategory):
            raise PreconditionError("divisibility classes need module categories")
        if not mods.is_mono_matrix(f):
            return False
        q_ob, _ = mods.cokernel(f)
        return q_ob.k % q == 0
    return MorphismClass(f"coker-div({q})", pred)


def ker_div_class(n: int) -> MorphismClass:
    """Epis whose kernel needs a multiple of n generators (n >= 2)."""
    if n < 2:
        raise PreconditionError("divisor must be at least 2")

    def pred(cat, f):
        if not isinstance(cat, ModuleCategory):
            raise PreconditionError("divisibility classes need module categories")
        if not mods.is_epi_matrix(f):
            return False
        k_ob, _ = mods.kernel(f)
        return k_ob.k % n == 0
    return MorphismClass(f"ker-div({n})", pred)


def identity_class() -> MorphismClass:
    return MorphismClass("identity",
                         lambda cat, f: f.dom == f.cod and f == cat.identity(f.dom))


def all_class() -> MorphismClass:
    return MorphismClass("all", lambda cat, f: True)


def all_mono_class() -> MorphismClass:
    from .core import is_mono
    return MorphismClass("all-mono", lambda cat, f: is_mono(cat, f))


def all_epi_class() -> MorphismClass:
    from .core import is_epi
    return MorphismClass("all-epi", lambda cat, f: is_epi(cat, f))


def table_class(members) -> MorphismClass:
    members = frozenset(members)
    return MorphismClass("table", lambda cat, f: f in members)


def class_from_descriptor(data, cat=None) -> MorphismClass:
    """Parse {"kind":"coker-div","q":2} | {"kind":"split-mono"} | ... ."""
    kind = data.get("kind")
    if kind == "split-mono":
        return split_mono_class()
    if kind == "split-epi":
        return split_epi_class()
    if kind == "regular-epi":
        return regular_epi_class()
    if kind == "coker-div":
        return coker_div_class(int(data["q"]))
    if kind == "ker-div":
        return ker_div_class(int(data["n"]))
    if kind == "identity":
        return identity_class()
    if kind == "all":
        return all_class()
    if kind == "all-mono":
        return all_mono_class()
    if kind == "all-epi":
        return all_epi_class()
    if kind == "table":
        if cat is None:
            raise FormatError("table class needs a category for member lookup")
        by_id = {m.mid: m for m in cat.morphisms()}
        try:
            return table_class(by_id[i] for i in data["members"])
        except KeyError as exc:
            raise FormatError(f"unknown morphism id {exc}") from exc
    raise FormatError(f"unknown class kind {kind!r}")


# --------------------------------------------------------------------------
# reports

@dataclass(frozen=True)
class QeReport:
    kind: str
    cls: str
    axioms: dict
    witnesses: dict
    bound: int
    counts: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.axioms.values())

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {"kind": self.kind, "class": self.cls,
                "axioms": dict(self.axioms),
                "witnesses": {k: ({kk: _enc(vv) for kk, vv in w.items()}
                                  if w is not None else None)
                              for k, w in self.witnesses.items()},
                "bound": self.bound, "counts": dict(self.counts),
                "passed": self.passed}


def _in_class_up_to_apex_iso(cat, cls, f, side: str) -> bool:
    """Membership of a (co)limit leg, quantified over the choice of apex.

    A pushout is only determined up to isomorphism of its apex, so the
    pushed-out morphism belongs to the class iff some iso-twist of the
    canonical one does (side="cod" twists the codomain; side="dom" the
    domain, for pullback legs).  Checked lazily: the twist search only
    runs when plain membership fails, which keeps iso-invariant classes
    free of overhead.
    """
    if cls.contains(cat, f):
        return True
    apex = f.cod if side == "cod" else f.dom
    for x in _objects(cat):
        if cat.obj_size(x) != cat.obj_size(apex):
            continue
        for j in cat.hom(apex, x) if side == "cod" else cat.hom(x, apex):
            if not _is_iso_in(cat, j):
                continue
            g = cat.compose(j, f) if side == "cod" else cat.compose(f, j)
            if cls.contains(cat, g):
                return True
    return False


def _is_iso_in(cat, j) -> bool:
    if isinstance(cat, ModuleCategory):
        return mods.is_iso(j)
    ida, idb = cat.identity(j.dom), cat.identity(j.cod)
    return any(cat.compose(k, j) == ida and cat.compose(j, k) == idb
               for k in cat.hom(j.cod, j.dom))


def _objects(cat):
    objs = cat.objects()
    objs.sort(key=lambda o: (cat.obj_size(o), repr(o)))
    return objs


def _morphisms(cat):
    for a in _objects(cat):
        for b in _objects(cat):
            for f in cat.hom(a, b):
                yield f


# --------------------------------------------------------------------------
# QE axioms

def validate_qe_mono(cat, cls: MorphismClass, bound=None) -> QeReport:
    """Axioms for a mono class: (i) stable under pushout along anything,
    (ii) every member is the equalizer of its cokernel pair, (iii)
    contains identities and is composition-closed.  A missing pushout is
    an axiom-(i) failure with the span as witness."""
    if bound is None:
        bound = default_bound()
    axioms = {"i": True, "ii": True, "iii": True}
    wits = {"i": None, "ii": None, "iii": None}
    counts = {"i": 0, "ii": 0, "iii": 0}

    for m, f in _span_sweep(cat, bound):
        if not cls.contains(cat, m):
            continue
        counts["i"] += 1
        po = cl.pushout(cat, f, m, bound=bound)
        if not po.found:
            axioms["i"] = False
            wits["i"] = {"reason": "missing-pushout", "m": m, "f": f}
            break
        if not _in_class_up_to_apex_iso(cat, cls, po.legs[0], "cod"):
            axioms["i"] = False
            wits["i"] = {"reason": "pushout-left-class", "m": m, "f": f,
                         "pushed": po.legs[0]}
            break

    for m in _class_sweep(cat, cls, bound):
        counts["ii"] += 1
        try:
            ok = _regular_mono(cat, m, bound=bound)
        except MissingLimitError as exc:
            ok = False
            wits["ii"] = {"reason": str(exc), "m": m}
        if not ok:
            axioms["ii"] = False
            wits["ii"] = wits["ii"] or {"reason": "not-regular", "m": m}
            break

    axioms["iii"], wits["iii"], counts["iii"] = _composition_axiom(
        cat, cls, bound)
    return QeReport("qe-mono", cls.name, axioms, wits, bound, counts)


def validate_qe_epi(cat, cls: MorphismClass, bound=None) -> QeReport:
    """Dual axioms for an epi class: (i*) stable under pullback along
    anything, (ii*) every member is the coequalizer of its kernel pair,
    (iii*) identities and composition closure."""
    if bound is None:
        bound = default_bound()
    axioms = {"i*": True, "ii*": True, "iii*": True}
    wits = {"i*": None, "ii*": None, "iii*": None}
    counts = {"i*": 0, "ii*": 0, "iii*": 0}

    for p, f in _cospan_sweep(cat, bound):
        if not cls.contains(cat, p):
            continue
        counts["i*"] += 1
        pb = cl.pullback(cat, p, f, bound=bound)
        if not pb.found:
            axioms["i*"] = False
            wits["i*"] = {"reason": "missing-pullback", "p": p, "f": f}
            break
        if not _in_class_up_to_apex_iso(cat, cls, pb.legs[1], "dom"):
            axioms["i*"] = False
            wits["i*"] = {"reason": "pullback-left-class", "p": p, "f": f,
                          "pulled": pb.legs[1]}
            break

    for p in _class_sweep(cat, cls, bound):
        counts["ii*"] += 1
        try:
            ok = _regular_epi(cat, p, bound=bound)
        except MissingLimitError as exc:
            ok = False
            wits["ii*"] = {"reason": str(exc), "p": p}
        if not ok:
            axioms["ii*"] = False
            wits["ii*"] = wits["ii*"] or {"reason": "not-regular", "p": p}
            break

    axioms["iii*"], wits["iii*"], counts["iii*"] = _composition_axiom(
        cat, cls, bound)
    return QeReport("qe-epi", cls.name, axioms, wits, bound, counts)


def validate_strong_qe_epi(cat, cls: MorphismClass, bound=None) -> QeReport:
    """Adds the right-factor axiom (iv*): if a composite p o q is in the
    class then so is p.  The (i*)-(iii*) prerequisite is re-run and
    reported alongside."""
    base = validate_qe_epi(cat, cls, bound)
    if bound is None:
        bound = default_bound()
    axioms = dict(base.axioms)
    wits = dict(base.witnesses)
    counts = dict(base.counts)
    axioms["iv*"] = True
    wits["iv*"] = None
    counts["iv*"] = 0
    for q, p in _composable_sweep(cat, bound):
        counts["iv*"] += 1
        if (cls.contains(cat, cat.compose(p, q))
                and not cls.contains(cat, p)):
            axioms["iv*"] = False
            wits["iv*"] = {"reason": "right-factor", "q": q, "p": p,
                           "composite": cat.compose(p, q)}
            break
    return QeReport("strong-qe-epi", cls.name, axioms, wits, bound, counts)


def _composition_axiom(cat, cls, bound):
    for x in _objects(cat):
        if not cls.contains(cat, cat.identity(x)):
            return False, {"reason": "identity-missing", "object": x}, 0
    count = 0
    for f, g in _composable_sweep(cat, bound):
        if not (cls.contains(cat, f) and cls.contains(cat, g)):
            continue
        count += 1
        comp = cat.compose(g, f)
        if not cls.contains(cat, comp):
            return False, {"reason": "composition", "f": f, "g": g,
                           "composite": comp}, count
    return True, None, count


def _span_sweep(cat, bound):
    n = 0
    for c in _objects(cat):
        for d in _objects(cat):
            for m in cat.hom(c, d):
                for b in _objects(cat):
                    for f in cat.hom(c, b):
                        n += 1
                        if n > bound:
                            return
                        yield m, f


def _cospan_sweep(cat, bound):
    n = 0
    for d in _objects(cat):
        for e in _objects(cat):
            for p in cat.hom(d, e):
                for b in _objects(cat):
                    for f in cat.hom(b, e):
                        n += 1
                        if n > bound:
                            return
                        yield p, f


def _composable_sweep(cat, bound):
    n = 0
    for a in _objects(cat):
        for b in _objects(cat):
            for f in cat.hom(a, b):
                for c in _objects(cat):
                    for g in cat.hom(b, c):
                        n += 1
                        if n > bound:
                            return
                        yield f, g


def _class_sweep(cat, cls, bound):
    n = 0
    for f in _morphisms(cat):
        if cls.contains(cat, f):
            n += 1
            if n > bound:
                return
            yield f


# --------------------------------------------------------------------------
# retract closure

@dataclass(frozen=True)
class RetractReport:
    closed: bool
    witness: dict | None
    diagrams_checked: int
    bound: int

    def __bool__(self) -> bool:
        return self.closed

    def to_json(self) -> dict:
        w = (None if self.witness is None
             else {k: _enc(v) for k, v in self.witness.items()})
        return {"closed": self.closed, "witness": w,
                "diagrams_checked": self.diagrams_checked,
                "bound": self.bound}


def check_retract_closed(cat, cls: MorphismClass, bound=None) -> RetractReport:
    """Sweep retract diagrams in the arrow category: a violation is some
    q outside the class exhibited as a retract of a class member p, via
    maps (u, v) : q -> p and (r, s) : p -> q with r o u = id, s o v = id
    and both squares commuting."""
    if bound is None:
        bound = default_bound()
    sections = {}

    def section_pairs(a, c):
        key = (a, c)
        got = sections.get(key)
        if got is None:
            ident = cat.identity(a)
            got = [(u, r) for u in cat.hom(a, c) for r in cat.hom(c, a)
                   if cat.compose(r, u) == ident]
            sections[key] = got
        return got

    checked = 0
    objs = _objects(cat)
    for a in objs:
        for b in objs:
            for q in cat.hom(a, b):
                if cls.contains(cat, q):
                    continue
                for c in objs:
                    for d in objs:
                        for p in cat.hom(c, d):
                            if not cls.contains(cat, p):
                                continue
                            for u, r in section_pairs(a, c):
                                pu = cat.compose(p, u)
                                qr = cat.compose(q, r)
                                for v, s in section_pairs(b, d):
                                    checked += 1
                                    if checked > bound:
                                        return RetractReport(
                                            True, None, checked - 1, bound)
                                    if (pu == cat.compose(v, q)
                                            and qr == cat.compose(s, p)):
                                        wit = {"q": q, "p": p, "u": u,
                                               "v": v, "r": r, "s": s}
                                        return RetractReport(False, wit,
                                                             checked, bound)
    return RetractReport(True, None, checked, bound)


# --------------------------------------------------------------------------
# M- and P-sequences

@dataclass(frozen=True)
class MSequence:
    m: object
    k1: object
    k2: object
    apex: object
    certificate: dict

    def to_json(self) -> dict:
        return {"m": _enc(self.m), "k1": _enc(self.k1), "k2": _enc(self.k2),
                "apex": repr(self.apex), "certificate": self.certificate}


@dataclass(frozen=True)
class PSequence:
    p: object
    k1: object
    k2: object
    apex: object
    certificate: dict

    def to_json(self) -> dict:
        return {"p": _enc(self.p), "k1": _enc(self.k1), "k2": _enc(self.k2),
                "apex": repr(self.apex), "certificate": self.certificate}


def extract_m_sequence(cat, m, bound=None) -> MSequence:
    """A morphism together with its verified cokernel pair."""
    ck = cl.cokernel_pair(cat, m, bound=bound)
    if not ck.found:
        raise MissingLimitError("cokernel pair does not exist")
    k1, k2 = ck.legs
    if cat.compose(k1, m) != cat.compose(k2, m):
        raise PreconditionError("internal: cokernel pair does not commute")
    return MSequence(m, k1, k2, ck.apex, ck.certificate)


def extract_p_sequence(cat, p, bound=None) -> PSequence:
    """A morphism together with its verified kernel pair."""
    kp = cl.kernel_pair(cat, p, bound=bound)
    if not kp.found:
        raise MissingLimitError("kernel pair does not exist")
    k1, k2 = kp.legs
    if cat.compose(p, k1) != cat.compose(p, k2):
        raise PreconditionError("internal: kernel pair does not commute")
    return PSequence(p, k1, k2, kp.apex, kp.certificate)


# --------------------------------------------------------------------------
# membership in directed-colimit closures

def limclass_membership(cat, small_cls: MorphismClass, candidate,
                        tests: TestSuite, orientation: str = "mono") -> bool:
    """Square-filling membership test for the closure of a small class.

    Mono orientation: every suite square into the candidate factorizes
    through some suite member of the class.  Epi orientation: every map
    e from a test object into cod(candidate) fits in a commuting square
    candidate o d = e o q with q a suite member of the class.
    """
    if orientation == "mono":
        from .purity import _squares_into
        if (cat.obj_size(candidate.dom) <= tests.bound
                and cat.obj_size(candidate.cod) <= tests.bound
                and small_cls.contains(cat, candidate)):
            return True  # every square factors through the candidate itself
        for sq in _squares_into(candidate, tests):
            if not _factors_through_member(cat, sq, tests, small_cls):
                return False
        return True
    if orientation == "epi":
        for s in tests.objects:
            for e in tests.hom(s, candidate.cod):
                if not _covers_through_member(cat, candidate, e, tests,
                                              small_cls):
                    return False
        return True
    raise PreconditionError("orientation must be 'mono' or 'epi'")


def _factors_through_member(cat, sq, tests, cls) -> bool:
    """Some suite member u of cls splits the square (t, c, d) into two
    commuting squares t -> u -> m composing back to the input."""
    t, c, d, m = sq.t, sq.c, sq.d, sq.m
    for u in tests.test_morphisms():
        if not cls.contains(cat, u):
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


def _covers_through_member(cat, p, e, tests, cls) -> bool:
    for q in tests.test_morphisms():
        if q.cod != e.dom or not cls.contains(cat, q):
            continue
        eq = cat.compose(e, q)
        if any(cat.compose(p, d) == eq for d in cat.hom(q.dom, p.dom)):
            return True
    return False


# --------------------------------------------------------------------------
# coproduct characterization of right-factor-closed epi classes

@dataclass(frozen=True)
class CharacterizationReport:
    strong: QeReport
    retract: RetractReport
    coproduct_condition: bool
    coproduct_witness: dict | None
    consistent: bool
    bound: int

    def __bool__(self) -> bool:
        return self.consistent

    def to_json(self) -> dict:
        w = (None if self.coproduct_witness is None
             else {k: _enc(v) for k, v in self.coproduct_witness.items()})
        return {"strong": self.strong.to_json(),
                "retract": self.retract.to_json(),
                "coproduct_condition": self.coproduct_condition,
                "coproduct_witness": w,
                "consistent": self.consistent, "bound": self.bound}


def check_strong_characterization(cat, cls: MorphismClass,
                                  bound=None) -> CharacterizationReport:
    """Right-factor closure is equivalent, given (i*)-(iii*), to being
    retract-closed together with the coproduct condition: for every
    member p and every f with the same codomain, the induced map out of
    the coproduct [p, f] is again a member.  Both sides are swept up to
    the bound and their agreement is reported."""
    if bound is None:
        bound = default_bound()
    strong = validate_strong_qe_epi(cat, cls, bound)
    retract = check_retract_closed(cat, cls, bound)
    cond = True
    wit = None
    n = 0
    for p, f in _cospan_sweep(cat, bound):
        if not cls.contains(cat, p):
            continue
        n += 1
        cop = cl.coproduct(cat, p.dom, f.dom, bound=bound)
        if not cop.found:
            cond = False
            wit = {"reason": "missing-coproduct", "p": p, "f": f}
            break
        induced = _copair(cat, cop, p, f)
        if induced is None:
            cond = False
            wit = {"reason": "missing-copair", "p": p, "f": f}
            break
        if not cls.contains(cat, induced):
            cond = False
            wit = {"reason": "coproduct-left-class", "p": p, "f": f,
                   "induced": induced}
            break
    base_ok = all(strong.axioms[a] for a in ("i*", "ii*", "iii*"))
    lhs = strong.passed
    rhs = retract.closed and cond
    consistent = (not base_ok) or (lhs == rhs)
    return CharacterizationReport(strong, retract, cond, wit, consistent,
                                  bound)


def _copair(cat, cop, p, f):
    if isinstance(cat, ModuleCategory) and cat.additive_closed:
        bp = mods.direct_sum(p.dom, f.dom)
        return mods.copair_from(bp, [p, f])
    i0, i1 = cop.legs
    return next((h for h in cat.hom(cop.apex, p.cod)
                 if cat.compose(h, i0) == p and cat.compose(h, i1) == f),
                None)
