"""Named verification checks with machine-readable certificates.

Each check is a deterministic, bounded computation with a stable id and
an anchor string describing the mathematical statement it exercises (the
anchors are indexed in docs/paper-map.md).  The CLI `verify-paper`
subcommand and the acceptance tests both run this registry.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .modcat import fin_mod, fin_vect, capped_category
from . import modules as mods
from . import colimits as cl
from . import purity as pu
from . import chains as ch
from . import qe
from .core import find_retraction, find_section


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    anchor: str
    passed: bool
    details: dict
    wall_time: float

    def to_json(self) -> dict:
        return {"check_id": self.check_id, "anchor": self.anchor,
                "passed": self.passed, "details": self.details,
                "wall_time": self.wall_time}


CHECKS: dict = {}


def register(check_id: str, anchor: str):
    def deco(fn):
        CHECKS[check_id] = (anchor, fn)
        return fn
    return deco


def run_check(check_id: str, bounds: dict | None = None) -> CheckResult:
    anchor, fn = CHECKS[check_id]
    t0 = time.perf_counter()
    passed, details = fn(bounds or {})
    return CheckResult(check_id, anchor, bool(passed), details,
                       round(time.perf_counter() - t0, 3))


def run_suite(only=None, bounds: dict | None = None) -> list[CheckResult]:
    ids = sorted(CHECKS) if only is None else list(only)
    return [run_check(i, bounds) for i in ids]


# --------------------------------------------------------------------------
# counterexample replays in the dimension-capped category

def _capped_data():
    cat = capped_category(2, 1)
    f2 = mods.ModObject(2, (2,))
    zero = mods.zero_object(2)
    return cat, zero, f2


@register("vwck-counterexample",
          "existence failure of very weak cokernel pairs in a "
          "dimension-capped vector-space category")
def _vwck_counterexample(bounds):
    cat, zero, f2 = _capped_data()
    f = mods.zero_morphism(zero, f2)
    c1 = mods.zero_morphism(f2, f2)
    c2 = mods.identity(f2)
    res = cl.vwck_search(cat, f, c1, c2)
    n_morphisms = sum(len(cat.hom(a, b))
                      for a in cat.objects() for b in cat.objects())
    ok = (not res.found and res.certificate["kind"] == "exhaustive"
          and n_morphisms <= 6)
    return ok, {"found": res.found, "certificate": res.certificate,
                "category_morphisms": n_morphisms}


@register("vwsp-counterexample",
          "existence failure of very weak split pullbacks in a "
          "dimension-capped vector-space category")
def _vwsp_counterexample(bounds):
    cat, zero, f2 = _capped_data()
    # A = 0, B = C = Q = F_2, f = g = h = 0, q_B = id, q_C = 0
    f = mods.zero_morphism(f2, zero)
    g = mods.zero_morphism(f2, zero)
    h = mods.zero_morphism(f2, f2)
    res = cl.vwsp_search(cat, f, g, h, mods.identity(f2),
                         mods.zero_morphism(f2, f2))
    ok = not res.found and res.certificate["kind"] == "exhaustive"
    return ok, {"found": res.found, "certificate": res.certificate}


@register("pushout-counterexample",
          "pushout failure for the span of zero maps out of the zero "
          "space in a dimension-capped vector-space category")
def _pushout_counterexample(bounds):
    cat, zero, f2 = _capped_data()
    inj = mods.zero_morphism(zero, f2)
    res = cl.pushout(cat, inj, inj)
    ok = not res.found and res.certificate["kind"] == "exhaustive"
    return ok, {"found": res.found, "certificate": res.certificate}


# --------------------------------------------------------------------------
# divisibility classes

@register("qe-mono-divisibility",
          "monos with cokernel dimension divisible by two: pushout-"
          "stable, regular, composition-closed, yet not retract-closed")
def _qe_mono_div(bounds):
    cat = fin_vect(2, 3)
    cls = qe.coker_div_class(2)
    bound = bounds.get("qe-sweep", 100_000)
    rep = qe.validate_qe_mono(cat, cls, bound=bound)
    rr = qe.check_retract_closed(cat, cls, bound=bounds.get("retract", 10 ** 6))
    ok = rep.passed and not rr.closed and rr.witness is not None
    if ok:
        ok = _recheck_retract_witness(cat, cls, rr.witness)
    return ok, {"axioms": rep.axioms, "retract_closed": rr.closed,
                "witness": rr.to_json()["witness"]}


@register("qe-epi-divisibility",
          "epis with kernel dimension divisible by two: pullback-stable, "
          "regular, composition-closed, yet not retract-closed")
def _qe_epi_div(bounds):
    cat = fin_vect(2, 3)
    cls = qe.ker_div_class(2)
    bound = bounds.get("qe-sweep", 100_000)
    rep = qe.validate_qe_epi(cat, cls, bound=bound)
    rr = qe.check_retract_closed(cat, cls, bound=bounds.get("retract", 10 ** 6))
    ok = rep.passed and not rr.closed and rr.witness is not None
    if ok:
        ok = _recheck_retract_witness(cat, cls, rr.witness)
    return ok, {"axioms": rep.axioms, "retract_closed": rr.closed,
                "witness": rr.to_json()["witness"]}


def _recheck_retract_witness(cat, cls, w) -> bool:
    qm, p, u, v, r, s = w["q"], w["p"], w["u"], w["v"], w["r"], w["s"]
    return (cls.contains(cat, p) and not cls.contains(cat, qm)
            and cat.compose(r, u) == cat.identity(qm.dom)
            and cat.compose(s, v) == cat.identity(qm.cod)
            and cat.compose(p, u) == cat.compose(v, qm)
            and cat.compose(qm, r) == cat.compose(s, p))


# --------------------------------------------------------------------------
# purity

def _z4_suite(bounds):
    size = bounds.get("pure-size", 8)
    cat = fin_mod(4, size)
    return cat, pu.TestSuite(cat, size)


@register("pure-iff-split",
          "purity coincides with splitness for finite modules: every "
          "mono is pure iff it retracts, every epi iff it sections")
def _pure_iff_split(bounds):
    cat, suite = _z4_suite(bounds)
    monos = epis = 0
    bad = []
    for a in suite.objects:
        for b in suite.objects:
            for f in cat.hom(a, b):
                if mods.is_mono_matrix(f):
                    monos += 1
                    if (pu.is_pure_mono(f, suite).pure
                            != (find_retraction(cat, f) is not None)):
                        bad.append(repr(f))
                if mods.is_epi_matrix(f):
                    epis += 1
                    if (pu.is_pure_epi(f, suite).pure
                            != (find_section(cat, f) is not None)):
                        bad.append(repr(f))
    return not bad, {"monos": monos, "epis": epis, "discrepancies": bad,
                     "size_bound": suite.bound}


@register("split-implies-pure",
          "split monos are pure monos and split epis are pure epis")
def _split_implies_pure(bounds):
    size = bounds.get("split-size", 4)
    cat = fin_mod(4, size)
    suite = pu.TestSuite(cat, size)
    bad = []
    for a in suite.objects:
        for b in suite.objects:
            for f in cat.hom(a, b):
                if (find_retraction(cat, f) is not None
                        and not pu.is_pure_mono(f, suite).pure):
                    bad.append(repr(f))
                if (find_section(cat, f) is not None
                        and not pu.is_pure_epi(f, suite).pure):
                    bad.append(repr(f))
    return not bad, {"violations": bad}


@register("pure-composition",
          "pure monos compose, and a pure composite forces purity of "
          "its first factor; dually for pure epis")
def _pure_composition(bounds):
    cat = fin_mod(4, 4)
    suite = pu.TestSuite(cat, 4)
    bad = []
    pairs = 0
    for a in suite.objects:
        for b in suite.objects:
            for f in cat.hom(a, b):
                for c in suite.objects:
                    for g in cat.hom(b, c):
                        pairs += 1
                        comp = cat.compose(g, f)
                        fm = pu.is_pure_mono(f, suite).pure
                        gm = pu.is_pure_mono(g, suite).pure
                        cm = pu.is_pure_mono(comp, suite).pure
                        if fm and gm and not cm:
                            bad.append(("mono-compose", repr(f), repr(g)))
                        if cm and not fm:
                            bad.append(("mono-left-factor", repr(f), repr(g)))
                        fe = pu.is_pure_epi(f, suite).pure
                        ge = pu.is_pure_epi(g, suite).pure
                        ce = pu.is_pure_epi(comp, suite).pure
                        if fe and ge and not ce:
                            bad.append(("epi-compose", repr(f), repr(g)))
                        if ce and not ge:
                            bad.append(("epi-right-factor", repr(f), repr(g)))
    return not bad, {"pairs": pairs, "violations": bad}


@register("factorization-soundness",
          "every square into a pure mono factors constructively through "
          "a split mono with all five equations verified, and dually")
def _factorization_soundness(bounds):
    cat = fin_mod(4, 8)
    suite = pu.TestSuite(cat, 4)
    want = bounds.get("factorization-instances", 120)
    mono_count = epi_count = 0
    for a in suite.objects:
        for b in suite.objects:
            for m in cat.hom(a, b):
                if mono_count >= want:
                    break
                if not mods.is_mono_matrix(m):
                    continue
                if not pu.is_pure_mono(m, suite).pure:
                    continue
                for sq in pu._squares_into(m, suite, all_d=True):
                    w = pu.factor_square_through_split_mono(cat, m, sq)
                    if not all(w.equations.values()):
                        return False, {"failed": sq.to_json()}
                    mono_count += 1
                    if mono_count >= want:
                        break
    for a in suite.objects:
        for b in suite.objects:
            for p in cat.hom(a, b):
                if epi_count >= want:
                    break
                if not mods.is_epi_matrix(p):
                    continue
                if not pu.is_pure_epi(p, suite).pure:
                    continue
                for t, d, e in pu._squares_onto(p, suite, all_d=True):
                    w = pu.factor_square_through_split_epi(cat, p, t, d, e)
                    if not all(w.equations.values()):
                        return False, {"failed": repr((t, d, e))}
                    epi_count += 1
                    if epi_count >= want:
                        break
    ok = mono_count >= want and epi_count >= want
    return ok, {"mono_squares": mono_count, "epi_squares": epi_count,
                "required": want}


@register("regularity-split-monos",
          "split monos are regular monos: each equals the equalizer of "
          "its own cokernel pair")
def _regularity_split_monos(bounds):
    bad = []
    n = 0
    for cat in (fin_mod(4, 8), fin_vect(2, 2)):
        objs = sorted(cat.objects(), key=lambda o: (cat.obj_size(o), repr(o)))
        for a in objs:
            for b in objs:
                for m in cat.hom(a, b):
                    if find_retraction(cat, m) is None:
                        continue
                    n += 1
                    if not pu.check_regular_mono(cat, m):
                        bad.append(repr(m))
    return not bad, {"split_monos": n, "violations": bad}


@register("regularity-split-epis",
          "split epis are regular epis: each equals the coequalizer of "
          "its own kernel pair")
def _regularity_split_epis(bounds):
    bad = []
    n = 0
    for cat in (fin_mod(4, 8), fin_vect(2, 2)):
        objs = sorted(cat.objects(), key=lambda o: (cat.obj_size(o), repr(o)))
        for a in objs:
            for b in objs:
                for p in cat.hom(a, b):
                    if find_section(cat, p) is None:
                        continue
                    n += 1
                    if not pu.check_regular_epi(cat, p):
                        bad.append(repr(p))
    return not bad, {"split_epis": n, "violations": bad}


@register("stability-pushout-monos",
          "pushouts of strongly pure monos along arbitrary maps remain "
          "strongly pure")
def _stability_pushout(bounds):
    cat = fin_mod(4, bounds.get("stability-size", 16))
    suite = pu.TestSuite(cat, bounds.get("stability-suite", 4))
    rep = pu.stability_suite_pushout_pure_monos(
        cat, suite, sample=bounds.get("stability-sample", 60), seed=7)
    return rep.passed, rep.to_json()


@register("stability-pullback-epis",
          "pullbacks of strongly pure epis along arbitrary maps remain "
          "strongly pure")
def _stability_pullback(bounds):
    cat = fin_mod(4, bounds.get("stability-size", 16))
    suite = pu.TestSuite(cat, bounds.get("stability-suite", 4))
    rep = pu.stability_suite_pullback_pure_epis(
        cat, suite, sample=bounds.get("stability-sample", 60), seed=7)
    return rep.passed, rep.to_json()


# --------------------------------------------------------------------------
# colimit engine oracle

@register("colimit-oracle",
          "the biproduct-formula path and the exhaustive search path "
          "compute isomorphic (co)limits on every instance")
def _colimit_oracle(bounds):
    # inputs range over dims <= 2; the ambient category allows dims up
    # to 4 so that every pushout/pullback apex of such inputs exists
    cat = fin_vect(2, 4)
    small = fin_vect(2, 2)
    objs = sorted(small.objects(), key=lambda o: (small.obj_size(o), repr(o)))
    checked = 0
    bad = []

    def both(kind, fn, *args):
        nonlocal checked
        checked += 1
        rf = fn(cat, *args, method="formula")
        rs = fn(cat, *args, method="search")
        if not cl.results_isomorphic(cat, rf, rs):
            bad.append((kind, [repr(a) for a in args]))

    for c in objs:
        for d in objs:
            for m in cat.hom(c, d):
                for b in objs:
                    for f in cat.hom(c, b):
                        both("pushout", cl.pushout, f, m)
                    for f in cat.hom(b, d):
                        both("pullback", cl.pullback, m, f)
                for k2 in cat.hom(c, d):
                    both("equalizer", cl.equalizer, m, k2)
                    both("coequalizer", cl.coequalizer, m, k2)
    return not bad, {"instances": checked, "discrepancies": bad}


# --------------------------------------------------------------------------
# chain colimits

def _chain_corpus(cat, suite, want, split_kind):
    """Deterministic corpus of levelwise-split chain morphisms."""
    out = []
    objs = sorted(cat.objects(), key=lambda o: (cat.obj_size(o), repr(o)))
    for a in objs:
        for b in objs:
            for m in cat.hom(a, b):
                if len(out) >= want:
                    return out
                split = (find_retraction(cat, m) if split_kind == "mono"
                         else find_section(cat, m))
                if split is None:
                    continue
                out.append(ch.ChainMorphism(ch.constant_chain(a, 2),
                                            ch.constant_chain(b, 2),
                                            (m, m)))
    return out


@register("chain-colimit-purity",
          "colimits of chains of levelwise split monos are pure monos, "
          "and dually for levelwise split epis")
def _chain_colimit_purity(bounds):
    cat = fin_mod(4, 8)
    suite = pu.TestSuite(cat, bounds.get("chain-suite", 4))
    want = bounds.get("chain-instances", 50)
    corpus_m = _chain_corpus(cat, suite, want, "mono")
    corpus_e = _chain_corpus(cat, suite, want // 2, "epi")
    bad = []
    for cm in corpus_m:
        if not ch.verify_colimit_purity(cat, cm, suite, kind="mono"):
            bad.append(cm.to_json())
    for cm in corpus_e:
        if not ch.verify_colimit_purity(cat, cm, suite, kind="epi"):
            bad.append(cm.to_json())
    ok = not bad and len(corpus_m) + len(corpus_e) >= want
    return ok, {"instances": len(corpus_m) + len(corpus_e),
                "violations": bad}


# --------------------------------------------------------------------------
# strong epi characterization

@register("strong-epi-characterization",
          "right-factor closure of an epi class is equivalent to "
          "retract closure plus closure of induced coproduct maps")
def _strong_epi_characterization(bounds):
    classes = (qe.split_epi_class(), qe.regular_epi_class(),
               qe.ker_div_class(2), qe.all_epi_class(), qe.all_class())
    results = {}
    ok = True
    for cat, bound in ((fin_mod(4, 16), bounds.get("char-finmod", 200)),
                       (fin_vect(2, 3), bounds.get("char-finvect", 1500))):
        for cls in classes:
            rep = qe.check_strong_characterization(cat, cls, bound=bound)
            key = f"{cat.name}/{cls.name}"
            results[key] = {"consistent": rep.consistent,
                            "strong": rep.strong.passed,
                            "retract": rep.retract.closed,
                            "coproduct": rep.coproduct_condition}
            ok = ok and rep.consistent
    return ok, results
