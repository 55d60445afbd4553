import pytest

from catpure import modules as mods
from catpure import qe
from catpure import purity as pu
from catpure.errors import FormatError
from catpure.finitecat import walking_arrow
from catpure.modcat import capped_category, fin_mod, fin_vect

F2 = mods.ModObject(2, (2,))
F22 = mods.ModObject(2, (2, 2))
F23 = mods.ModObject(2, (2, 2, 2))
Z2 = mods.ModObject(4, (2,))
Z4 = mods.ModObject(4, (4,))

SWEEP = 4000  # candidate budget for unit-scale axiom sweeps


@pytest.fixture(scope="module")
def vcat():
    return fin_vect(2, 3)


def test_coker_divisibility_class_axioms_and_retract_failure(vcat):
    cls = qe.coker_div_class(2)
    rep = qe.validate_qe_mono(vcat, cls, bound=SWEEP)
    assert rep.passed, rep.axioms
    rr = qe.check_retract_closed(vcat, cls, bound=100_000)
    assert not rr.closed
    w = rr.witness
    # re-verify the retract diagram from scratch
    assert cls.contains(vcat, w["p"]) and not cls.contains(vcat, w["q"])
    assert vcat.compose(w["r"], w["u"]) == vcat.identity(w["q"].dom)
    assert vcat.compose(w["s"], w["v"]) == vcat.identity(w["q"].cod)
    assert vcat.compose(w["p"], w["u"]) == vcat.compose(w["v"], w["q"])
    assert vcat.compose(w["q"], w["r"]) == vcat.compose(w["s"], w["p"])


def test_ker_divisibility_class_axioms_and_right_factor_failure(vcat):
    cls = qe.ker_div_class(2)
    rep = qe.validate_qe_epi(vcat, cls, bound=SWEEP)
    assert rep.passed, rep.axioms
    strong = qe.validate_strong_qe_epi(vcat, cls, bound=SWEEP)
    assert not strong.axioms["iv*"]
    w = strong.witnesses["iv*"]
    # composite in the class, right factor not
    assert cls.contains(vcat, vcat.compose(w["p"], w["q"]))
    assert not cls.contains(vcat, w["p"])


def test_identity_class_passes_both_axiom_systems():
    cat = fin_mod(4, 8)
    cls = qe.identity_class()
    assert qe.validate_qe_mono(cat, cls, bound=SWEEP).passed
    assert qe.validate_qe_epi(cat, cls, bound=SWEEP).passed


def test_split_classes_pass(vcat):
    assert qe.validate_qe_mono(vcat, qe.split_mono_class(),
                               bound=SWEEP).passed
    assert qe.validate_strong_qe_epi(vcat, qe.split_epi_class(),
                                     bound=SWEEP).passed


def test_all_epi_class_passes_strong_axioms(vcat):
    assert qe.validate_strong_qe_epi(vcat, qe.all_epi_class(),
                                     bound=SWEEP).passed


def test_split_mono_class_hits_missing_pushouts_in_capped_category():
    cat = capped_category(2, 1)
    rep = qe.validate_qe_mono(cat, qe.split_mono_class(), bound=SWEEP)
    assert not rep.axioms["i"]
    assert rep.witnesses["i"]["reason"] == "missing-pushout"


def test_all_class_fails_epi_regularity_on_walking_arrow():
    wa = walking_arrow()
    rep = qe.validate_qe_epi(wa, qe.all_class(), bound=SWEEP)
    assert not rep.axioms["ii*"]


def test_class_descriptor_round_trip_and_validation():
    cls = qe.class_from_descriptor({"kind": "coker-div", "q": 2})
    assert cls.name == "coker-div(2)"
    assert qe.class_from_descriptor({"kind": "split-epi"}).name == "split-epi"
    with pytest.raises(FormatError):
        qe.class_from_descriptor({"kind": "nonsense"})
    with pytest.raises(Exception):
        qe.class_from_descriptor({"kind": "coker-div", "q": 1})


def test_m_and_p_sequences(vcat):
    m = mods.ModMorphism(F2, F22, [[1], [0]])
    seq = qe.extract_m_sequence(vcat, m)
    assert vcat.compose(seq.k1, m) == vcat.compose(seq.k2, m)
    p = mods.ModMorphism(F22, F2, [[1, 0]])
    pseq = qe.extract_p_sequence(vcat, p)
    assert vcat.compose(p, pseq.k1) == vcat.compose(p, pseq.k2)


def test_limclass_membership_examples():
    cat = fin_mod(4, 8)
    suite = pu.TestSuite(cat, 4)
    bp = mods.direct_sum(Z2, Z4)
    split_m = bp.inj[0]
    assert qe.limclass_membership(cat, qe.split_mono_class(), split_m,
                                  suite, orientation="mono")
    nonsplit_m = mods.ModMorphism(Z2, Z4, [[2]])
    assert not qe.limclass_membership(cat, qe.split_mono_class(),
                                      nonsplit_m, suite,
                                      orientation="mono")
    split_p = bp.proj[1]
    assert qe.limclass_membership(cat, qe.split_epi_class(), split_p,
                                  suite, orientation="epi")
    nonsplit_p = mods.ModMorphism(Z4, Z2, [[1]])
    assert not qe.limclass_membership(cat, qe.split_epi_class(),
                                      nonsplit_p, suite,
                                      orientation="epi")


def test_strong_characterization_consistent_for_builtins():
    cat = fin_vect(2, 2)
    for cls in (qe.split_epi_class(), qe.ker_div_class(2),
                qe.all_epi_class(), qe.all_class()):
        rep = qe.check_strong_characterization(cat, cls, bound=300)
        assert rep.consistent, cls.name
