import pytest
from hypothesis import given, strategies as st

from finegrain.harness import TAGS, GenSpec, generate
from finegrain.instances import (
    FormatError,
    FrechetInstance,
    McConvThreeSumInstance,
    OvInstance,
    TraversalWitness,
    WeightedGraph,
    read_instance,
    read_many,
    validate,
    write_instance,
    write_many,
)


def test_smallest_ov_parses():
    inst = read_instance("fgx 1 ov\nn=1 d=2\nA: 10\nB: 01\n")
    assert inst == OvInstance(((1, 0),), ((0, 1),), 2)
    assert inst.n == 1


def test_version_error():
    with pytest.raises(FormatError, match="version"):
        read_instance("fgx 2 ov\nn=1 d=2\nA: 10\nB: 01\n")


def test_format_error_has_line_number():
    with pytest.raises(FormatError) as err:
        read_instance("fgx 1 ov\nn=1 d=2\nA: 12\nB: 01\n")
    assert err.value.line == 3


def test_violations():
    assert validate(OvInstance(((1, 0),) * 2, ((0, 1),) * 3, 2)) == ["A/B size mismatch"]
    assert validate(WeightedGraph(3, ((1, 2, 1), (2, 3, 1), (1, 3, 1)))) == []
    assert "empty point list" in validate(FrechetInstance((), ((0, 0),), 1, 0))


def test_sentinel_round_trip():
    inst = McConvThreeSumInstance((1, 5), (2, 9), (None, 3))
    text = write_instance(inst)
    assert "_" in text
    assert read_instance(text) == inst


def test_random_graph_round_trip_bytes():
    g = generate(GenSpec("clique", n=40, seed=5))
    assert len(g.edges) >= 100
    text = write_instance(g)
    assert write_instance(read_instance(text)) == text


def test_multi_instance_with_ledger():
    parts = [generate(GenSpec("lcs", n=6, seed=s)) for s in range(3)]
    text = write_many(parts, {"op": "lcs", "t": "3"})
    got, ledger = read_many(text)
    assert got == parts
    assert ledger == {"op": "lcs", "t": "3"}


@pytest.mark.parametrize("tag", TAGS)
@pytest.mark.parametrize("seed", range(5))
def test_generated_round_trip(tag, seed):
    inst = generate(GenSpec(tag, n=7, seed=seed))
    assert validate(inst) == []
    text = write_instance(inst)
    assert read_instance(text) == inst
    assert write_instance(read_instance(text)) == text


@given(st.lists(st.tuples(st.integers(-50, 50), st.integers(-50, 50)), min_size=1, max_size=12))
def test_frechet_round_trip(points):
    inst = FrechetInstance(tuple(points), tuple(reversed(points)), 3, 17)
    assert read_instance(write_instance(inst)) == inst


def test_traversal_witness():
    w = TraversalWitness(((1, 1), (2, 1), (2, 2), (3, 3)))
    assert w.is_monotone(3, 3)
    assert w.shift() == 1
    assert not TraversalWitness(((1, 1), (3, 3))).is_monotone(3, 3)
