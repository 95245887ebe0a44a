from dataclasses import replace
from fractions import Fraction

import pytest

from finegrain import harness as H
from finegrain import solvers as S
from finegrain.decompose import decompose_ov
from finegrain.instances import OvInstance, write_instance
from finegrain.rng import SplitMix64


def test_splitmix_reference_outputs():
    # published reference values for seed 0
    r = SplitMix64(0)
    assert [r.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_generation_examples():
    assert S.solve_ov(H.generate(H.GenSpec("ov", n=8, d=6, planted="yes", seed=1))).answer
    g = H.generate(H.GenSpec("clique", n=10, k=3, planted="no", seed=7))
    assert not S.solve_neg_k_clique(g, 3).answer


@pytest.mark.parametrize("tag", H.TAGS)
def test_generation_is_deterministic(tag):
    spec = H.GenSpec(tag, n=9, seed=123)
    assert write_instance(H.generate(spec)) == write_instance(H.generate(spec))


@pytest.mark.parametrize("tag", ["ov", "3sum", "conv3sum", "mcconv3sum", "clique", "tricol", "lcs", "lcis", "frechet", "2sp"])
@pytest.mark.parametrize("seed", range(6))
def test_planted_answers(tag, seed):
    yes = H.generate(H.GenSpec(tag, n=10, planted="yes", seed=seed))
    no = H.generate(H.GenSpec(tag, n=10, planted="no", seed=seed))
    assert H.oracle(yes) and not H.oracle(no)


def test_rejection_cap_is_reported():
    # every LCS instance with k = 0 is a yes-instance
    with pytest.raises(H.GenerationError):
        H.generate(H.GenSpec("lcs", n=5, k=0, planted="no"))


def test_audit_ledger():
    led = decompose_ov(OvInstance(((1,),) * 16, ((1,),) * 16, 1), 2).ledger
    assert H.audit_ledger(led) == []
    assert H.audit_ledger(replace(led, t=15)) == ["t mismatch: 15 != 16"]
    assert any("q mismatch" in f for f in H.audit_ledger(replace(led, q=5)))


@pytest.mark.parametrize("name", sorted(H.PIPELINES))
@pytest.mark.parametrize("planted", ["yes", "no", "none"])
def test_pipelines_pass(name, planted):
    rep = H.run_pipeline(name, H.GenSpec("ov", n=12, planted=planted, seed=3, t=3), Fraction(1))
    assert rep.passed, rep.lines()


def test_walkthrough_pipeline():
    rep = H.run_pipeline("clique-decomp-union", H.GenSpec("clique", n=27, planted="yes", seed=1), Fraction(3, 2))
    assert rep.passed and rep.direct
    assert rep.ledger["z"] == "3" and rep.ledger["component_bound"] == "27"
    rep3 = H.run_pipeline("clique-decomp-union", H.GenSpec("clique", n=27, planted="yes", seed=1), 3)
    assert rep3.ledger["z"] == "6" and rep3.ledger["component_bound"] == "18"


def test_named_examples():
    rep = H.run_pipeline("lcs-compose", H.GenSpec("lcs", n=8, t=4, seed=9), 1)
    assert rep.passed
    rep = H.run_pipeline("frechet-compose", H.GenSpec("frechet", n=4, planted="no", t=3, seed=2), 1)
    assert rep.passed and not rep.transformed


def test_report_determinism_across_workers():
    spec = H.GenSpec("ov", n=24, planted="none", seed=5)
    a = H.run_pipeline("ov-decomp", spec, 3, workers=1).lines()
    b = H.run_pipeline("ov-decomp", spec, 3, workers=2).lines()
    assert a == b == H.run_pipeline("ov-decomp", spec, 3).lines()


def test_bench_needs_three_points():
    with pytest.raises(ValueError):
        H.bench_envelope("lcs_dp", [100, 200])


def test_bench_table_shape():
    t = H.bench_envelope("lcs_threshold", [500, 1000, 2000], repetitions=1)
    assert len(t.medians) == 3 and t.theory == 1
    assert t.lines()[0] == "algorithm=lcs_threshold"


def test_bounded_lcs_pair():
    inst = H.bounded_lcs_pair(2000, 16)
    assert S.lcs_dp(inst, witness=False).value == 15
