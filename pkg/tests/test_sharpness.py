from fractions import Fraction

import pytest

from cyclebounds.sharpness import (
    SHARPNESS_EXAMPLES,
    RELAXATIONS,
    audit,
    audit_claim,
    evaluate_expr,
    parse_grid,
)


def test_parse_grid():
    assert parse_grid("kappa=2..4,delta=3,b=1|3|5") == {"kappa": [2, 3, 4], "delta": [3], "b": [1, 3, 5]}
    with pytest.raises(ValueError):
        parse_grid("kappa=two")


def test_expressions():
    env = {"d": 5, "k": 2}
    assert evaluate_expr("d-k+1", env) == 4
    assert evaluate_expr("k<d and 2*k<=d", env) is True
    with pytest.raises(ValueError):
        evaluate_expr("__import__('os')", env)
    with pytest.raises(ValueError):
        evaluate_expr("x+1", env)


def test_hub_equality_for_t1_t2():
    for tag in ("T1", "T2"):
        rep = audit("hub", "kappa=2..5,delta=3..6", tag, where="kappa<delta")
        assert len(rep.instances) == 10 and rep.all_equal


def test_t14_bowtie_threshold():
    rep = audit("k1_plus_2kd", "delta=2..5", "T14")
    for inst in rep.instances:
        d = inst.params["delta"]
        assert inst.computed == d * d + d and inst.bound == d * d + d - 1
        assert inst.verdict == "inapplicable" and inst.relaxed_fails["size"]
        assert not inst.invariants["hamiltonian"]


def test_t15_remarks_small_delta():
    t15 = audit("t15", "x=0", "T15", args={}).instances[0]
    assert t15.relaxed_fails == {"size": True, "connectivity": False, "conclusion": False}
    bowtie = audit("mka_plus_kb", "x=0", "T15", args="m=2,a=2,b=1").instances[0]
    assert bowtie.relaxed_fails["connectivity"]
    k2_3k1 = audit("mka_plus_kb", "x=0", "T15", args="m=3,a=1,b=2").instances[0]
    assert k2_3k1.verdict == "holds" and k2_3k1.relaxed_fails["conclusion"]


def test_threshold_values_are_exact():
    inst = audit("h", "x=0", "T4", args="a=1,b=2,t=4,k=3").instances[0]
    assert isinstance(inst.bound, Fraction)


def test_oversized_instances_are_skipped():
    rep = audit("hub", "kappa=2,delta=12", "T1")
    assert not rep.instances and "exceeds" in rep.skipped[0]["reason"]


def test_invalid_parameters_are_skipped():
    rep = audit("hub", "kappa=5,delta=3", "T1")
    assert not rep.instances and rep.skipped


def test_unknown_family():
    with pytest.raises(ValueError):
        audit("nope", "x=0", "T1")


def test_relaxations_only_for_known_tags():
    for tag, rel in RELAXATIONS.items():
        for name, r in rel.items():
            assert r.tag == tag and r.name == name


def test_petersen_claim():
    claim = next(c for c in SHARPNESS_EXAMPLES if c.theorem == "T16")
    rep = audit_claim(claim)
    assert rep.instances[0].verdict == "exception"
    assert "T16" in rep.to_text() and rep.as_dict()["instances"][0]["invariants"]["tau"] == "4/3"


def test_l_delta_are_t18_exceptions():
    rep = audit("l", "delta=3..4", "T18")
    assert [i.verdict for i in rep.instances] == ["exception", "exception"]
