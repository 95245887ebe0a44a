import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from finegrain import decompose as D
from finegrain import solvers as S
from finegrain.harness import audit_ledger
from finegrain.instances import (
    ConvThreeSumInstance,
    McConvThreeSumInstance,
    OvInstance,
    WeightedGraph,
    read_many,
    write_many,
)

LAMBDAS = [Fraction(1, 2), 1, 2, 3]


def ones(n, d=3):
    return tuple((1,) * d for _ in range(n))


def test_ov_formulas():
    b = D.decompose_ov(OvInstance(ones(16), ones(16), 3), 2)
    led = b.ledger
    assert (led.epsilon, led.q, led.z, led.t) == (Fraction(1, 2), 4, 4, 16)
    assert len(b.subs) == 16 and all(s.n == 4 for s in b.subs)
    single = D.decompose_ov(OvInstance(((1, 0),), ((0, 1),), 2), 5)
    assert single.ledger.t == 1 and S.solve_ov(single.subs[0]).answer


def test_ov_planted_pair_lands_in_one_sub():
    A = [(1, 1, 1)] * 16
    B = [(1, 1, 1)] * 16
    A[4], B[10] = (1, 0, 0), (0, 1, 1)  # A[5], B[11] 1-based
    b = D.decompose_ov(OvInstance(tuple(A), tuple(B), 3), 2)
    hits = [o for s, o in zip(b.subs, b.origin) if S.solve_ov(s).answer]
    assert hits == [(2, 3)]


def test_clique_formulas_and_planted():
    edges = ((1, 2, -2), (2, 3, 1), (1, 3, 0), (4, 7, 5))
    b = D.decompose_neg_k_clique(WeightedGraph(9, edges, k=3), 3, 3)
    led = b.ledger
    assert (led.epsilon, led.q, led.z, led.t) == (Fraction(1, 2), 3, 3, 27)
    assert all(s.n <= 9 for s in b.subs)
    assert S.solve_neg_k_clique(b.subs[0], 3).answer and b.origin[0] == (1, 1, 1)
    clean = D.decompose_neg_k_clique(WeightedGraph(9, ((1, 2, 1), (2, 3, 1), (1, 3, 1)), k=3), 3, 3)
    assert not any(S.solve_neg_k_clique(s, 3).answer for s in clean.subs)
    with pytest.raises(ValueError):
        D.decompose_neg_k_clique(WeightedGraph(9, ()), 5, 3)


def test_clique_walkthrough_ledger():
    led = D.decompose_neg_k_clique(WeightedGraph(64, ()), 3, 3).ledger
    assert (led.epsilon, led.q, led.z, led.t, led.ell_Q) == (Fraction(1, 2), 8, 8, 512, 24)
    assert audit_ledger(led) == []


def test_mc_windows():
    assert [D.mc_window(2, l, p) for l in (1, 2) for p in (1, 2)] == [(2, 4), (4, 6), (4, 6), (6, 8)]
    inst = McConvThreeSumInstance((1, 2, 3, 4), (5, 6, 7, 8), (9, 10, 11, 12))
    b = D.decompose_mc_conv3sum(inst, 2)
    assert (b.ledger.q, b.ledger.z, b.ledger.t) == (2, 2, 4)
    last = b.subs[b.origin.index((2, 2))]
    assert all(c is None for c in last.C)
    assert not S.solve_mc_conv3sum(last).answer


def test_mc_to_conv_tight_example():
    inst = McConvThreeSumInstance((1, 5), (2, 9), (999, 3))
    out = D.reduce_mc_to_conv(inst, scheme="tight")
    assert out.A == (-5000, -5000, 1001, 1005, 3002, 3009, 4999, 4003)
    r = S.solve_conv3sum(out)
    assert r.answer and r.witness == (3, 5)
    assert S.solve_conv3sum(D.reduce_mc_to_conv(inst)).answer


def test_tight_offsets_counterexample():
    # 2 + (-2) != -2, yet the A quarter sums into the C quarter
    inst = McConvThreeSumInstance((2,), (-2,), (-2,))
    assert not S.solve_mc_conv3sum(inst).answer
    assert S.solve_conv3sum(D.reduce_mc_to_conv(inst, scheme="tight")).answer
    assert not S.solve_conv3sum(D.reduce_mc_to_conv(inst)).answer


def test_conv_to_mc():
    mc = D.reduce_conv_to_mc(ConvThreeSumInstance((0, 0)))
    assert mc.A == mc.B == mc.C == (0, 0)
    assert S.solve_mc_conv3sum(mc).answer == S.solve_conv3sum(ConvThreeSumInstance((0, 0))).answer


arrays = st.lists(st.integers(-8, 8), min_size=1, max_size=10)


@given(arrays, st.data())
def test_reductions_preserve_answers(A, data):
    n = len(A)
    B = data.draw(st.lists(st.integers(-8, 8), min_size=n, max_size=n))
    C = data.draw(st.lists(st.one_of(st.none(), st.integers(-16, 16)), min_size=n, max_size=n))
    mc = McConvThreeSumInstance(tuple(A), tuple(B), tuple(C))
    want = oracles.mc_conv(A, B, C)
    assert S.solve_conv3sum(D.reduce_mc_to_conv(mc)).answer == want
    assert S.solve_mc_conv3sum(D.reduce_conv_to_mc(ConvThreeSumInstance(tuple(A)))).answer == oracles.conv(A)


def test_identity_lift_is_transparent():
    inst = McConvThreeSumInstance((1, 2, 3, 4, 5), (5, 4, 3, 2, 1), (None, 3, 9, 1, 0))
    lifted = D.lift_decomposition(D.decompose_mc_conv3sum, lambda x: x, lambda x: x)
    a, b = lifted(inst, 1), D.decompose_mc_conv3sum(inst, 1)
    assert a.subs == b.subs and a.origin == b.origin


def test_planted_conv_survives_lift():
    A = [100 + 7 * i for i in range(16)]
    A[12] = A[4] + A[7]  # A[5] + A[8] = A[13]
    inst = ConvThreeSumInstance(tuple(A))
    assert oracles.conv(A)
    b = D.decompose_conv3sum(inst, 1)
    assert sum(S.solve_conv3sum(s).answer for s in b.subs) >= 1
    assert audit_ledger(b.ledger) == []


@pytest.mark.parametrize("seed", range(30))
def test_or_equivalence_sweep(seed):
    rng = random.Random(seed)
    lam = LAMBDAS[seed % 4]
    n = rng.randint(1, 16)
    A = tuple(rng.randint(-9, 9) for _ in range(n))
    B = tuple(rng.randint(-9, 9) for _ in range(n))
    C = tuple(rng.choice([None, rng.randint(-18, 18), rng.randint(-18, 18)]) for _ in range(n))
    bm = D.decompose_mc_conv3sum(McConvThreeSumInstance(A, B, C), lam)
    assert any(S.solve_mc_conv3sum(s).answer for s in bm.subs) == oracles.mc_conv(A, B, C)
    bc = D.decompose_conv3sum(ConvThreeSumInstance(A), lam)
    assert any(S.solve_conv3sum(s).answer for s in bc.subs) == oracles.conv(A)
    d = rng.randint(1, 4)
    vecs = lambda: tuple(tuple(rng.choice((0, 1, 1)) for _ in range(d)) for _ in range(n))  # noqa: E731
    ov = OvInstance(vecs(), vecs(), d)
    bo = D.decompose_ov(ov, lam)
    assert any(S.solve_ov(s).answer for s in bo.subs) == oracles.ov(ov.A, ov.B)


def test_origin_covers_every_element():
    n = 11
    b = D.decompose_ov(OvInstance(ones(n), ones(n), 3), 1)
    q = b.ledger.q
    covered_a = {i for (l, _) in b.origin for i in D.block_members(l, q, n)}
    covered_b = {j for (_, p) in b.origin for j in D.block_members(p, q, n)}
    assert covered_a == covered_b == set(range(1, n + 1))


def test_tricol_formulas():
    g = WeightedGraph(16, (), colors=tuple(1 + i % 3 for i in range(16)))
    H, led = D.decompose_triangle_collection(g, 1)
    assert (led.z, led.q, led.t) == (2, 8, 8)
    assert H.max_component_order() <= 24 == led.ell_Q
    k3 = WeightedGraph(3, ((1, 2, 1), (2, 3, 1), (1, 3, 1)), colors=(1, 2, 3))
    assert S.solve_triangle_collection(D.decompose_triangle_collection(k3, 1)[0]).answer


@pytest.mark.parametrize("seed", range(25))
def test_tricol_equivalence(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 14)
    edges = tuple((u, v, 1) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.5)
    g = WeightedGraph(n, edges, colors=tuple(rng.randint(1, 4) for _ in range(n)))
    H, _ = D.decompose_triangle_collection(g, LAMBDAS[seed % 4])
    assert S.solve_triangle_collection(H).answer == oracles.triangle_collection(n, edges, g.colors)


def test_bundle_serialization():
    b = D.decompose_ov(OvInstance(ones(5), ones(5), 3), 1)
    subs, ledger = read_many(write_many(b.subs, b.ledger.to_dict()))
    assert tuple(subs) == b.subs
    assert D.ParameterLedger.from_dict(ledger) == b.ledger
