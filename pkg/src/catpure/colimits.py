"""Finite (co)limits with universality certificates.

Two computation paths:

* formula — module categories closed under biproducts/quotients; apexes
  come out of kernel/cokernel arithmetic and carry a by-construction
  certificate;
* search — any enumerable category; candidate apexes are scanned in
  ascending size and a witness is returned only after existence *and*
  uniqueness of mediators has been checked against every competing
  (co)cone in the category, so a `found=False` outcome is a certified
  non-existence statement for the bounded category.

Also hosts the very weak cokernel pairs and very weak split pullbacks:
the explicit product/coproduct constructions and the generic searches.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .errors import CapExceededError, MissingLimitError, PreconditionError, default_bound
from .modcat import ModuleCategory, morphism_to_literal
from . import modules as mods


@dataclass(frozen=True)
class LimitWitness:
    kind: str
    found: bool
    apex: object = None
    legs: tuple = ()
    certificate: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, mods.ModMorphism):
                return morphism_to_literal(x)
            return repr(x)

        apex = None
        if self.apex is not None:
            apex = (list(self.apex.factors)
                    if isinstance(self.apex, mods.ModObject) else repr(self.apex))
        return {"kind": self.kind, "found": self.found, "apex": apex,
                "legs": [enc(l) for l in self.legs],
                "certificate": self.certificate}


@dataclass(frozen=True)
class VwckResult:
    found: bool
    k1: object = None
    k2: object = None
    l: object = None
    s: object = None
    apex: object = None
    certificate: dict = field(default_factory=dict)


@dataclass(frozen=True)
class VwspResult:
    found: bool
    p_b: object = None
    p_c: object = None
    r: object = None
    s: object = None
    apex: object = None
    certificate: dict = field(default_factory=dict)


def _use_formula(cat, method: str) -> bool:
    if method == "formula":
        if not (isinstance(cat, ModuleCategory) and cat.additive_closed):
            raise PreconditionError("formula path needs a biproduct-closed module category")
        return True
    if method == "search":
        return False
    return isinstance(cat, ModuleCategory) and cat.additive_closed


def _by_construction() -> dict:
    return {"kind": "by-construction"}


def _algebraic_universality(cat) -> bool:
    """Whether universality can be decided by exact-sequence arithmetic.

    In a module category closed under biproducts and quotients, a
    commuting candidate (W, legs) is the pushout of (f, m) iff |W| equals
    |C'||D| / |im<f,-m>| and the legs are jointly epi: the candidate then
    realises the cokernel exact sequence, and conversely.  This decides
    universality against *every* cocone of the ambient category, without
    enumerating cocones (which is hopeless already at dim 4 over F_2).
    Dually for pullbacks and for the other shapes.  Hard-capped
    categories keep the literal cocone enumeration: there universality
    is relative to the truncated object range by design.
    """
    return isinstance(cat, ModuleCategory) and cat.additive_closed


def _apexes(cat):
    objs = cat.objects()
    objs.sort(key=lambda o: (cat.obj_size(o), repr(o)))
    return objs


# --------------------------------------------------------------------------
# (bi)products

def product(cat, b, c, method: str = "auto", bound=None) -> LimitWitness:
    if _use_formula(cat, method):
        bp = mods.direct_sum(b, c)
        return LimitWitness("product", True, bp.ob, (bp.proj[0], bp.proj[1]),
                            _by_construction())
    return _product_search(cat, b, c, bound)


def _product_search(cat, b, c, bound) -> LimitWitness:
    if bound is None:
        bound = default_bound()
    algebraic = _algebraic_universality(cat)
    checked = 0
    apexes = _apexes(cat)
    for w in apexes:
        if algebraic and cat.obj_size(w) != cat.obj_size(b) * cat.obj_size(c):
            continue
        for p0 in cat.hom(w, b):
            for p1 in cat.hom(w, c):
                checked += 1
                if checked > bound:
                    raise CapExceededError("product search exceeded the cap",
                                           needed=checked, bound=bound)
                if algebraic:
                    bp = mods.direct_sum(b, c)
                    joint = mods.pair_into(bp, [p0, p1])
                    ok = mods.is_mono_matrix(joint)
                else:
                    ok = _cone_universal(cat, w, (p0, b), (p1, c))
                if ok:
                    return LimitWitness(
                        "product", True, w, (p0, p1),
                        {"kind": "exhaustive", "bound": bound,
                         "candidates_checked": checked})
    return LimitWitness("product", False, certificate={
        "kind": "exhaustive", "bound": bound, "candidates_checked": checked,
        "apexes_checked": len(apexes)})


def _cone_universal(cat, w, *legs) -> bool:
    """Exactly one mediator into w for every competing cone."""
    for x in cat.objects():
        cones = [[]]
        for p, tgt in legs:
            cones = [cone + [m] for cone in cones for m in cat.hom(x, tgt)]
        for cone in cones:
            n = 0
            for h in cat.hom(x, w):
                if all(cat.compose(p, h) == m for (p, _), m in zip(legs, cone)):
                    n += 1
                    if n > 1:
                        return False
            if n != 1:
                return False
    return True


def coproduct(cat, b, c, method: str = "auto", bound=None) -> LimitWitness:
    if _use_formula(cat, method):
        bp = mods.direct_sum(b, c)
        return LimitWitness("coproduct", True, bp.ob, (bp.inj[0], bp.inj[1]),
                            _by_construction())
    return _coproduct_search(cat, b, c, bound)


def _coproduct_search(cat, b, c, bound) -> LimitWitness:
    if bound is None:
        bound = default_bound()
    algebraic = _algebraic_universality(cat)
    checked = 0
    apexes = _apexes(cat)
    for w in apexes:
        if algebraic and cat.obj_size(w) != cat.obj_size(b) * cat.obj_size(c):
            continue
        for i0 in cat.hom(b, w):
            for i1 in cat.hom(c, w):
                checked += 1
                if checked > bound:
                    raise CapExceededError("coproduct search exceeded the cap",
                                           needed=checked, bound=bound)
                if algebraic:
                    bp = mods.direct_sum(b, c)
                    joint = mods.copair_from(bp, [i0, i1])
                    ok = mods.is_epi_matrix(joint)
                else:
                    ok = _cocone_universal(cat, w, (i0, b), (i1, c))
                if ok:
                    return LimitWitness(
                        "coproduct", True, w, (i0, i1),
                        {"kind": "exhaustive", "bound": bound,
                         "candidates_checked": checked})
    return LimitWitness("coproduct", False, certificate={
        "kind": "exhaustive", "bound": bound, "candidates_checked": checked,
        "apexes_checked": len(apexes)})


def _cocone_universal(cat, w, *legs) -> bool:
    for x in cat.objects():
        cocones = [[]]
        for i, src in legs:
            cocones = [cc + [m] for cc in cocones for m in cat.hom(src, x)]
        for cc in cocones:
            n = 0
            for h in cat.hom(w, x):
                if all(cat.compose(h, i) == m for (i, _), m in zip(legs, cc)):
                    n += 1
                    if n > 1:
                        return False
            if n != 1:
                return False
    return True


# --------------------------------------------------------------------------
# pushout / pullback

def pushout(cat, f, m, method: str = "auto", bound=None) -> LimitWitness:
    """Pushout of the span cod(f) <-f- C -m-> cod(m).

    legs = (leg from cod(f), leg from cod(m)); the first is "m pushed out
    along f", the second "f pushed out along m".
    """
    if f.dom != m.dom:
        raise PreconditionError("pushout needs a span (shared domain)")
    if _use_formula(cat, method):
        bp = mods.direct_sum(f.cod, m.cod)
        u = mods.pair_into(bp, [f, -m])
        _, proj = mods.cokernel(u)
        leg_l = mods.compose(proj, bp.inj[0])
        leg_r = mods.compose(proj, bp.inj[1])
        assert mods.compose(leg_l, f) == mods.compose(leg_r, m)
        return LimitWitness("pushout", True, proj.cod, (leg_l, leg_r),
                            _by_construction())
    return _pushout_search(cat, f, m, bound)


@functools.lru_cache(maxsize=1 << 16)
def _coker_size(g) -> int:
    ob, _ = mods.cokernel(g)
    size = 1
    for d in ob.factors:
        size *= d
    return size


@functools.lru_cache(maxsize=1 << 16)
def _ker_size(g) -> int:
    ob, _ = mods.kernel(g)
    size = 1
    for d in ob.factors:
        size *= d
    return size


def _pushout_search(cat, f, m, bound) -> LimitWitness:
    if bound is None:
        bound = default_bound()
    algebraic = _algebraic_universality(cat)
    expected = coker_f = coker_m = None
    if algebraic:
        bp = mods.direct_sum(f.cod, m.cod)
        q_ob, _ = mods.cokernel(mods.pair_into(bp, [f, -m]))
        expected = cat.obj_size(q_ob)
        # each leg of a pushout has cokernel isomorphic to the cokernel
        # of the opposite input, so mismatched sizes can be skipped
        coker_f, coker_m = _coker_size(f), _coker_size(m)
    checked = 0
    apexes = _apexes(cat)
    for w in apexes:
        if algebraic and cat.obj_size(w) != expected:
            continue
        # index the right legs by their composite with m so each left
        # leg only meets the candidates it actually commutes with
        by_comp: dict = {}
        for l1 in cat.hom(m.cod, w):
            if algebraic and _coker_size(l1) != coker_f:
                continue
            by_comp.setdefault(cat.compose(l1, m), []).append(l1)
        for l0 in cat.hom(f.cod, w):
            if algebraic and _coker_size(l0) != coker_m:
                continue
            lf = cat.compose(l0, f)
            for l1 in by_comp.get(lf, ()):
                checked += 1
                if checked > bound:
                    raise CapExceededError("pushout search exceeded the cap",
                                           needed=checked, bound=bound)
                if algebraic:
                    bp = mods.direct_sum(f.cod, m.cod)
                    ok = mods.is_epi_matrix(mods.copair_from(bp, [l0, l1]))
                else:
                    ok = _pushout_universal(cat, f, m, w, l0, l1)
                if ok:
                    return LimitWitness(
                        "pushout", True, w, (l0, l1),
                        {"kind": "exhaustive", "bound": bound,
                         "candidates_checked": checked})
    return LimitWitness("pushout", False, certificate={
        "kind": "exhaustive", "bound": bound, "candidates_checked": checked,
        "apexes_checked": len(apexes)})


def _pushout_universal(cat, f, m, w, l0, l1) -> bool:
    for x in cat.objects():
        for u in cat.hom(f.cod, x):
            uf = cat.compose(u, f)
            for v in cat.hom(m.cod, x):
                if uf != cat.compose(v, m):
                    continue
                n = 0
                for h in cat.hom(w, x):
                    if cat.compose(h, l0) == u and cat.compose(h, l1) == v:
                        n += 1
                        if n > 1:
                            return False
                if n != 1:
                    return False
    return True


def pullback(cat, p, f, method: str = "auto", bound=None) -> LimitWitness:
    """Pullback of the cospan dom(p) -p-> E <-f- dom(f).

    legs = (leg to dom(p), leg to dom(f)).
    """
    if p.cod != f.cod:
        raise PreconditionError("pullback needs a cospan (shared codomain)")
    if _use_formula(cat, method):
        bp = mods.direct_sum(p.dom, f.dom)
        diff = mods.copair_from(bp, [p, -f])
        _, incl = mods.kernel(diff)
        leg_l = mods.compose(bp.proj[0], incl)
        leg_r = mods.compose(bp.proj[1], incl)
        assert mods.compose(p, leg_l) == mods.compose(f, leg_r)
        return LimitWitness("pullback", True, incl.dom, (leg_l, leg_r),
                            _by_construction())
    return _pullback_search(cat, p, f, bound)


def _pullback_search(cat, p, f, bound) -> LimitWitness:
    if bound is None:
        bound = default_bound()
    algebraic = _algebraic_universality(cat)
    expected = ker_p = ker_f = None
    if algebraic:
        bp = mods.direct_sum(p.dom, f.dom)
        k_ob, _ = mods.kernel(mods.copair_from(bp, [p, -f]))
        expected = cat.obj_size(k_ob)
        # each leg of a pullback has kernel isomorphic to the kernel of
        # the opposite input
        ker_p, ker_f = _ker_size(p), _ker_size(f)
    checked = 0
    apexes = _apexes(cat)
    for w in apexes:
        if algebraic and cat.obj_size(w) != expected:
            continue
        by_comp: dict = {}
        for l1 in cat.hom(w, f.dom):
            if algebraic and _ker_size(l1) != ker_p:
                continue
            by_comp.setdefault(cat.compose(f, l1), []).append(l1)
        for l0 in cat.hom(w, p.dom):
            if algebraic and _ker_size(l0) != ker_f:
                continue
            pl = cat.compose(p, l0)
            for l1 in by_comp.get(pl, ()):
                checked += 1
                if checked > bound:
                    raise CapExceededError("pullback search exceeded the cap",
                                           needed=checked, bound=bound)
                if algebraic:
                    bp = mods.direct_sum(p.dom, f.dom)
                    ok = mods.is_mono_matrix(mods.pair_into(bp, [l0, l1]))
                else:
                    ok = _pullback_universal(cat, p, f, w, l0, l1)
                if ok:
                    return LimitWitness(
                        "pullback", True, w, (l0, l1),
                        {"kind": "exhaustive", "bound": bound,
                         "candidates_checked": checked})
    return LimitWitness("pullback", False, certificate={
        "kind": "exhaustive", "bound": bound, "candidates_checked": checked,
        "apexes_checked": len(apexes)})


def _pullback_universal(cat, p, f, w, l0, l1) -> bool:
    for x in cat.objects():
        for u in cat.hom(x, p.dom):
            pu = cat.compose(p, u)
            for v in cat.hom(x, f.dom):
                if pu != cat.compose(f, v):
                    continue
                n = 0
                for h in cat.hom(x, w):
                    if cat.compose(l0, h) == u and cat.compose(l1, h) == v:
                        n += 1
                        if n > 1:
                            return False
                if n != 1:
                    return False
    return True


def cokernel_pair(cat, m, method: str = "auto", bound=None) -> LimitWitness:
    res = pushout(cat, m, m, method=method, bound=bound)
    return LimitWitness("cokernel_pair", res.found, res.apex, res.legs,
                        res.certificate)


def kernel_pair(cat, p, method: str = "auto", bound=None) -> LimitWitness:
    res = pullback(cat, p, p, method=method, bound=bound)
    return LimitWitness("kernel_pair", res.found, res.apex, res.legs,
                        res.certificate)


# --------------------------------------------------------------------------
# (co)equalizers

def equalizer(cat, k1, k2, method: str = "auto", bound=None) -> LimitWitness:
    if k1.dom != k2.dom or k1.cod != k2.cod:
        raise PreconditionError("equalizer needs a parallel pair")
    if _use_formula(cat, method):
        _, incl = mods.kernel(k1 - k2)
        return LimitWitness("equalizer", True, incl.dom, (incl,),
                            _by_construction())
    return _equalizer_search(cat, k1, k2, bound)


def _equalizer_search(cat, k1, k2, bound) -> LimitWitness:
    if bound is None:
        bound = default_bound()
    algebraic = _algebraic_universality(cat)
    expected = None
    if algebraic:
        k_ob, _ = mods.kernel(k1 - k2)
        expected = cat.obj_size(k_ob)
    checked = 0
    apexes = _apexes(cat)
    for w in apexes:
        if algebraic and cat.obj_size(w) != expected:
            continue
        for e in cat.hom(w, k1.dom):
            if cat.compose(k1, e) != cat.compose(k2, e):
                continue
            checked += 1
            if checked > bound:
                raise CapExceededError("equalizer search exceeded the cap",
                                       needed=checked, bound=bound)
            if algebraic:
                ok = mods.is_mono_matrix(e)
            else:
                ok = True
                for x in cat.objects():
                    for u in cat.hom(x, k1.dom):
                        if cat.compose(k1, u) != cat.compose(k2, u):
                            continue
                        n = sum(1 for h in cat.hom(x, w) if cat.compose(e, h) == u)
                        if n != 1:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                return LimitWitness(
                    "equalizer", True, w, (e,),
                    {"kind": "exhaustive", "bound": bound,
                     "candidates_checked": checked})
    return LimitWitness("equalizer", False, certificate={
        "kind": "exhaustive", "bound": bound, "candidates_checked": checked,
        "apexes_checked": len(apexes)})


def coequalizer(cat, k1, k2, method: str = "auto", bound=None) -> LimitWitness:
    if k1.dom != k2.dom or k1.cod != k2.cod:
        raise PreconditionError("coequalizer needs a parallel pair")
    if _use_formula(cat, method):
        _, proj = mods.cokernel(k1 - k2)
        return LimitWitness("coequalizer", True, proj.cod, (proj,),
                            _by_construction())
    return _coequalizer_search(cat, k1, k2, bound)


def _coequalizer_search(cat, k1, k2, bound) -> LimitWitness:
    if bound is None:
        bound = default_bound()
    algebraic = _algebraic_universality(cat)
    expected = None
    if algebraic:
        q_ob, _ = mods.cokernel(k1 - k2)
        expected = cat.obj_size(q_ob)
    checked = 0
    apexes = _apexes(cat)
    for w in apexes:
        if algebraic and cat.obj_size(w) != expected:
            continue
        for q in cat.hom(k1.cod, w):
            if cat.compose(q, k1) != cat.compose(q, k2):
                continue
            checked += 1
            if checked > bound:
                raise CapExceededError("coequalizer search exceeded the cap",
                                       needed=checked, bound=bound)
            if algebraic:
                ok = mods.is_epi_matrix(q)
            else:
                ok = True
                for x in cat.objects():
                    for u in cat.hom(k1.cod, x):
                        if cat.compose(u, k1) != cat.compose(u, k2):
                            continue
                        n = sum(1 for h in cat.hom(w, x) if cat.compose(h, q) == u)
                        if n != 1:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                return LimitWitness(
                    "coequalizer", True, w, (q,),
                    {"kind": "exhaustive", "bound": bound,
                     "candidates_checked": checked})
    return LimitWitness("coequalizer", False, certificate={
        "kind": "exhaustive", "bound": bound, "candidates_checked": checked,
        "apexes_checked": len(apexes)})


# --------------------------------------------------------------------------
# very weak cokernel pairs

def _check_vwck(cat, f, c1, c2, res: VwckResult):
    eqs = [
        cat.compose(res.k1, f) == cat.compose(res.k2, f),
        cat.compose(res.l, res.k1) == c1,
        cat.compose(res.l, res.k2) == c2,
        cat.compose(res.s, res.k1) == cat.identity(f.cod),
    ]
    if not all(eqs):
        raise PreconditionError(f"very weak cokernel pair equations failed: {eqs}")


def vwck_construct_via_product(cat, f, c1, c2, bound=None) -> VwckResult:
    """Apex B x C, k_i = <id_B, c_i>, l = proj_C, s = proj_B."""
    _require_parallel_after(cat, f, c1, c2)
    b, c = f.cod, c1.cod
    prod = product(cat, b, c, bound=bound)
    if not prod.found:
        raise MissingLimitError(f"product of {b!r} and {c!r} does not exist")
    p_b, p_c = prod.legs
    if isinstance(cat, ModuleCategory) and cat.additive_closed:
        bp = mods.direct_sum(b, c)
        k1 = mods.pair_into(bp, [mods.identity(b), c1])
        k2 = mods.pair_into(bp, [mods.identity(b), c2])
        res = VwckResult(True, k1, k2, bp.proj[1], bp.proj[0], bp.ob,
                         _by_construction())
    else:
        k1 = _mediator_into(cat, b, prod, [cat.identity(b), c1])
        k2 = _mediator_into(cat, b, prod, [cat.identity(b), c2])
        res = VwckResult(True, k1, k2, p_c, p_b, prod.apex, prod.certificate)
    _check_vwck(cat, f, c1, c2, res)
    return res


def _mediator_into(cat, x, prod: LimitWitness, comps):
    for h in cat.hom(x, prod.apex):
        if all(cat.compose(p, h) == cmp for p, cmp in zip(prod.legs, comps)):
            return h
    raise MissingLimitError("mediator into the product not found")


def _require_parallel_after(cat, f, c1, c2):
    if c1.dom != f.cod or c2.dom != f.cod or c1.cod != c2.cod:
        raise PreconditionError("need parallel pair out of cod(f)")
    if cat.compose(c1, f) != cat.compose(c2, f):
        raise PreconditionError("pair does not equalize after f")


def vwck_search(cat, f, c1, c2, bound=None) -> VwckResult:
    """Smallest-apex search for a very weak cokernel pair of f over (c1, c2)."""
    _require_parallel_after(cat, f, c1, c2)
    if bound is None:
        bound = default_bound()
    b, c = f.cod, c1.cod
    checked = 0
    apexes = _apexes(cat)
    for k_ob in apexes:
        hom_bk = cat.hom(b, k_ob)
        hom_kc = cat.hom(k_ob, c)
        hom_kb = cat.hom(k_ob, b)
        for k1 in hom_bk:
            k1f = cat.compose(k1, f)
            s = next((s0 for s0 in hom_kb
                      if cat.compose(s0, k1) == cat.identity(b)), None)
            if s is None:
                continue
            for k2 in hom_bk:
                if cat.compose(k2, f) != k1f:
                    continue
                checked += 1
                if checked > bound:
                    raise CapExceededError("vwck search exceeded the cap",
                                           needed=checked, bound=bound)
                for l in hom_kc:
                    if cat.compose(l, k1) == c1 and cat.compose(l, k2) == c2:
                        res = VwckResult(True, k1, k2, l, s, k_ob,
                                         {"kind": "exhaustive", "bound": bound,
                                          "candidates_checked": checked})
                        _check_vwck(cat, f, c1, c2, res)
                        return res
    return VwckResult(False, certificate={
        "kind": "exhaustive", "bound": bound, "candidates_checked": checked,
        "apexes_checked": len(apexes),
        "morphisms_seen": sum(len(cat.hom(b, k)) for k in apexes)})


# --------------------------------------------------------------------------
# very weak split pullbacks

def _check_vwsp(cat, f, g, q_b, q_c, res: VwspResult):
    eqs = [
        cat.compose(f, res.p_b) == cat.compose(g, res.p_c),
        cat.compose(res.p_b, res.r) == q_b,
        cat.compose(res.p_c, res.r) == q_c,
        cat.compose(res.p_c, res.s) == cat.identity(g.dom),
    ]
    if not all(eqs):
        raise PreconditionError(f"very weak split pullback equations failed: {eqs}")


def _require_split_cospan(cat, f, g, h, q_b, q_c):
    if h.dom != g.dom or h.cod != f.dom or f.cod != g.cod:
        raise PreconditionError("need h : dom(g) -> dom(f) splitting the cospan")
    if cat.compose(f, h) != g:
        raise PreconditionError("h does not split the cospan (f o h != g)")
    if q_b.dom != q_c.dom or q_b.cod != f.dom or q_c.cod != g.dom:
        raise PreconditionError("square legs have wrong ends")
    if cat.compose(f, q_b) != cat.compose(g, q_c):
        raise PreconditionError("square does not commute over the cospan")


def vwsp_construct_via_coproduct(cat, f, g, h, q_b, q_c, bound=None) -> VwspResult:
    """Apex Q + C, p_B = [q_B, h], p_C = [q_C, id_C], r = inj_Q, s = inj_C."""
    _require_split_cospan(cat, f, g, h, q_b, q_c)
    q_ob, c_ob = q_b.dom, g.dom
    cop = coproduct(cat, q_ob, c_ob, bound=bound)
    if not cop.found:
        raise MissingLimitError(f"coproduct of {q_ob!r} and {c_ob!r} does not exist")
    if isinstance(cat, ModuleCategory) and cat.additive_closed:
        bp = mods.direct_sum(q_ob, c_ob)
        p_b = mods.copair_from(bp, [q_b, h])
        p_c = mods.copair_from(bp, [q_c, mods.identity(c_ob)])
        res = VwspResult(True, p_b, p_c, bp.inj[0], bp.inj[1], bp.ob,
                         _by_construction())
    else:
        i_q, i_c = cop.legs
        p_b = _mediator_from(cat, cop, [q_b, h], f.dom)
        p_c = _mediator_from(cat, cop, [q_c, cat.identity(c_ob)], c_ob)
        res = VwspResult(True, p_b, p_c, i_q, i_c, cop.apex, cop.certificate)
    _check_vwsp(cat, f, g, q_b, q_c, res)
    return res


def _mediator_from(cat, cop: LimitWitness, comps, target):
    for h in cat.hom(cop.apex, target):
        if all(cat.compose(h, i) == cmp for i, cmp in zip(cop.legs, comps)):
            return h
    raise MissingLimitError("mediator out of the coproduct not found")


def vwsp_search(cat, f, g, h, q_b, q_c, bound=None) -> VwspResult:
    _require_split_cospan(cat, f, g, h, q_b, q_c)
    if bound is None:
        bound = default_bound()
    b, c, q_ob = f.dom, g.dom, q_b.dom
    checked = 0
    apexes = _apexes(cat)
    for p_ob in apexes:
        hom_pb = cat.hom(p_ob, b)
        hom_pc = cat.hom(p_ob, c)
        hom_cp = cat.hom(c, p_ob)
        hom_qp = cat.hom(q_ob, p_ob)
        for p_c in hom_pc:
            s = next((s0 for s0 in hom_cp
                      if cat.compose(p_c, s0) == cat.identity(c)), None)
            if s is None:
                continue
            gpc = cat.compose(g, p_c)
            for p_b in hom_pb:
                if cat.compose(f, p_b) != gpc:
                    continue
                checked += 1
                if checked > bound:
                    raise CapExceededError("vwsp search exceeded the cap",
                                           needed=checked, bound=bound)
                for r in hom_qp:
                    if (cat.compose(p_b, r) == q_b
                            and cat.compose(p_c, r) == q_c):
                        res = VwspResult(True, p_b, p_c, r, s, p_ob,
                                         {"kind": "exhaustive", "bound": bound,
                                          "candidates_checked": checked})
                        _check_vwsp(cat, f, g, q_b, q_c, res)
                        return res
    return VwspResult(False, certificate={
        "kind": "exhaustive", "bound": bound, "candidates_checked": checked,
        "apexes_checked": len(apexes),
        "morphisms_seen": sum(len(cat.hom(p, c)) for p in apexes)})


# --------------------------------------------------------------------------
# comparison of results up to isomorphism (oracle tests)

def results_isomorphic(cat, r1: LimitWitness, r2: LimitWitness) -> bool:
    """Search an apex isomorphism commuting with all legs."""
    if r1.found != r2.found:
        return False
    if not r1.found:
        return True
    into_apex = r1.kind in ("pushout", "coproduct", "coequalizer", "cokernel_pair")
    if isinstance(cat, ModuleCategory):
        # mediator via the linear solver; when the legs determine it
        # uniquely (jointly epi into the apex / jointly mono out of it,
        # true of every genuine (co)limit witness) this is conclusive
        if into_apex:
            h = mods.solve_hom(r1.apex, r2.apex,
                               right=list(zip(r1.legs, r2.legs)))
            unique = mods.is_epi_matrix(mods.copair_from(
                mods.direct_sum(*(a.dom for a in r1.legs)), list(r1.legs)))
        else:
            h = mods.solve_hom(r1.apex, r2.apex,
                               left=list(zip(r2.legs, r1.legs)))
            unique = mods.is_mono_matrix(mods.pair_into(
                mods.direct_sum(*(b.cod for b in r2.legs)), list(r2.legs)))
        if h is None:
            return False
        if mods.is_iso(h):
            return True
        if unique:
            return False
    for h in cat.hom(r1.apex, r2.apex):
        inv = next((k for k in cat.hom(r2.apex, r1.apex)
                    if cat.compose(k, h) == cat.identity(r1.apex)
                    and cat.compose(h, k) == cat.identity(r2.apex)), None)
        if inv is None:
            continue
        if into_apex:
            if all(cat.compose(h, a) == b for a, b in zip(r1.legs, r2.legs)):
                return True
        else:
            if all(cat.compose(a, inv) == b for a, b in zip(r1.legs, r2.legs)):
                return True
    return False
