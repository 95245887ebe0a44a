import random

import pytest

import oracles
from finegrain import compose as C
from finegrain import solvers as S
from finegrain.harness import audit_ledger
from finegrain.instances import FrechetInstance, LcisInstance, LcsInstance, WeightedGraph, dist2


def lcs(a, b, k):
    # letters a..h as symbols 0..7
    enc = lambda s: tuple(ord(c) - ord("a") for c in s)  # noqa: E731
    return LcsInstance(enc(a), enc(b), k, 8)


def test_lcs_composition_examples():
    out, led = C.compose_lcs([lcs("ab", "ba", 1), lcs("cd", "dc", 1)])
    assert out.k == 1 and S.lcs_dp(out).answer
    # alphabets are renumbered: instance 2 starts at 8
    assert out.x1 == (0, 1, 10, 11) and out.x2 == (11, 10, 1, 0)
    none, _ = C.compose_lcs([lcs("ab", "cd", 1), lcs("ef", "gh", 1)])
    assert S.lcs_dp(none).value == 0
    single, _ = C.compose_lcs([lcs("abc", "cab", 2)])
    assert single.x1 == (0, 1, 2) and S.lcs_dp(single).value == 2
    assert audit_ledger(led) == []


def test_lcs_requires_uniform_k():
    with pytest.raises(ValueError):
        C.compose_lcs([lcs("a", "a", 1), lcs("b", "b", 2)])
    padded = C.pad_lcs_k([lcs("a", "a", 1), lcs("bb", "bb", 2)])
    assert {p.k for p in padded} == {2}
    assert [S.lcs_dp(p).answer for p in padded] == [True, True]


def test_lcs_segments_use_disjoint_alphabets():
    parts = [lcs("abca", "cab", 2), lcs("aab", "bba", 2), lcs("h", "h", 1)]
    out, _ = C.compose_lcs(C.pad_lcs_k(parts))
    seen = {}
    pos = 0
    for idx, p in enumerate(C.pad_lcs_k(parts)):
        for s in out.x1[pos : pos + len(p.x1)]:
            assert seen.setdefault(s, idx) == idx
        pos += len(p.x1)


def test_lcis_composition_example():
    parts = [LcisInstance((2, 1), (1, 2), 1, True), LcisInstance((1, 3), (3, 1), 1, True)]
    out, led = C.compose_lcis(parts)
    assert led.notes["c_max"] == 4
    assert out.x1 == (6, 5, 9, 11) and out.x2 == (11, 9, 5, 6)
    assert S.lcis_dp(out).answer
    no = [LcisInstance((2, 1), (1, 2), 2, True), LcisInstance((3, 1), (1, 3), 2, True)]
    assert not S.lcis_dp(C.compose_lcis(no)[0]).answer
    single = LcisInstance((3, 1, 4, 1, 5), (1, 4, 5, 9), 3, False)
    assert S.lcis_dp(C.compose_lcis([single])[0]).answer == S.lcis_dp(single).answer


def test_frame_facts():
    assert dist2(C.S_A, C.S_B) == 9
    assert dist2(C.L_B, C.S_A) == 225
    assert dist2(C.L_A, C.S_B) == 225
    assert dist2(C.L_A, C.C_A) == 425
    assert dist2(C.Q_FAR, C.S_A) == 281 > C.K2
    assert dist2(C.Q_FAR, C.C_A) <= C.K2


@pytest.mark.parametrize("seed", range(20))
@pytest.mark.parametrize("answer", [True, False])
def test_gadgets_are_contract_clean(seed, answer):
    g = C.make_frechet_gadget(answer, 2 + seed % 7, seed)
    assert C.validate_frechet_contract(g) == []
    assert S.frechet_dp(g).answer == answer
    assert oracles.frechet(g.P, g.Q, g.k2) == answer


def test_contract_violations():
    g = C.make_frechet_gadget(True, 4, 1)
    no_far = FrechetInstance(g.P, tuple(q if q != C.Q_FAR else C.C_A for q in g.Q), 15, 225)
    assert any("condition 8" in v for v in C.validate_frechet_contract(no_far))
    repeated = FrechetInstance(g.P[:2] + (C.S_A,) + g.P[3:], g.Q, 15, 225)
    assert any("condition 2" in v for v in C.validate_frechet_contract(repeated))
    with pytest.raises(ValueError):
        C.compose_frechet([repeated])


def test_frechet_composition_examples():
    yes = C.make_frechet_gadget(True, 4, 11)
    out, led = C.compose_frechet([yes])
    assert len(out.P) == len(out.Q)
    assert S.frechet_dp(out).answer
    assert S.frechet_min_shift(out) <= 2 * (len(yes.P) + 2)
    nos = [C.make_frechet_gadget(False, 4, s) for s in range(3)]
    assert not S.frechet_dp(C.compose_frechet(nos)[0]).answer
    mixed = [nos[0], yes, nos[1]]
    assert S.frechet_dp(C.compose_frechet(mixed)[0]).answer
    assert audit_ledger(led) == []


def test_disjoint_union():
    neg = WeightedGraph(3, ((1, 2, -2), (2, 3, 1), (1, 3, 0)))
    pos = WeightedGraph(3, ((1, 2, 1), (2, 3, 1), (1, 3, 1)))
    out, led = C.compose_disjoint_union([neg, pos])
    assert S.solve_neg_k_clique(out, 3).answer and led.ell_Q == 3
    with pytest.raises(ValueError):
        C.compose_disjoint_union([])
    same, _ = C.compose_disjoint_union([pos])
    assert same.edges == pos.edges


def test_second_shortest_path_examples():
    neg = WeightedGraph(3, ((1, 2, -2), (2, 3, 1), (1, 3, 0)))
    pos = WeightedGraph(3, ((1, 2, 1), (2, 3, 1), (1, 3, 1)))
    inst, led = C.compose_second_shortest_path([neg])
    r = S.second_shortest_path(inst)
    assert r.answer and r.value == inst.k  # triangle weight -1
    assert not S.second_shortest_path(C.compose_second_shortest_path([pos])[0]).answer
    assert S.second_shortest_path(C.compose_second_shortest_path([pos, neg])[0]).answer
    assert audit_ledger(led) == []


def test_second_shortest_path_structure():
    rng = random.Random(4)
    gs = [WeightedGraph(5, tuple((u, v, rng.randint(-4, 4)) for u in range(1, 6) for v in range(u + 1, 6)))]
    inst, led = C.compose_second_shortest_path(gs)
    path = set(range(3, 3 + 5 + 1))
    shared = path | {1, 2}
    detour = [w for u, v, w in inst.graph.edges if not (u in shared and v in shared)]
    assert all(w >= 1 for w in detour)  # C - M = 1
    assert all(w == 0 for u, v, w in inst.graph.edges if u in shared and v in shared)
    # removing p_1..p_{n+1} leaves an acyclic graph (a -> b edges only)
    rest = [(u, v) for u, v, _ in inst.graph.edges if u not in path and v not in path]
    assert all(u < v for u, v in rest)
    assert led.ell_Q == len(path)


def rand_graph(rng, n, p=0.5):
    return WeightedGraph(
        n, tuple((u, v, rng.randint(-3, 6)) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p)
    )


@pytest.mark.parametrize("seed", range(30))
def test_graph_compositions_or(seed):
    rng = random.Random(seed)
    gs = [rand_graph(rng, rng.randint(3, 8)) for _ in range(rng.randint(1, 4))]
    want = any(oracles.neg_clique(g.n, g.edges, 3) for g in gs)
    union, _ = C.compose_disjoint_union(gs)
    assert S.solve_neg_k_clique(union, 3).answer == want
    inst, _ = C.compose_second_shortest_path(gs)
    assert S.second_shortest_path(inst).answer == want
