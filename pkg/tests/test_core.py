import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphcodes import (
    CliqueCopy,
    Colouring,
    GraphSpec,
    canonicalize,
    colour_count,
    edge_index,
    n_edges,
    rainbow,
    restrict,
    trivial,
)
from graphcodes.core import canonical_relabel

from conftest import random_colouring


def test_rainbow_examples():
    assert rainbow(1).k == 0
    assert rainbow(1).colours.size == 0
    c = rainbow(2)
    assert c.k == 1 and list(c.colours) == [0]
    c = rainbow(4)
    assert c.k == 6 and list(c.colours) == [0, 1, 2, 3, 4, 5]
    assert colour_count(rainbow(5)) == 10


def test_trivial_examples():
    assert list(trivial(2).colours) == [0]
    assert list(trivial(3).colours) == [0, 0, 0]
    assert trivial(1).k == 0
    assert colour_count(trivial(9)) == 1


def test_edge_index_is_lex_order():
    n = 7
    expect = 0
    for i in range(n):
        for j in range(i + 1, n):
            assert edge_index(i, j, n) == expect
            expect += 1
    assert expect == n_edges(n)


def test_colouring_validation():
    with pytest.raises(ValueError):
        Colouring(0, 0, np.empty(0, dtype=np.int64))
    with pytest.raises(ValueError):
        Colouring(3, 1, np.array([0, 1, 0]))  # id 1 >= k
    with pytest.raises(ValueError):
        Colouring(3, 2, np.array([0, 1]))  # wrong length
    with pytest.raises(ValueError):
        Colouring(1, 1, np.empty(0, dtype=np.int64))  # empty needs k=0
    c = trivial(4)
    with pytest.raises(ValueError):
        c.colours[0] = 1  # frozen array


def test_colouring_equality():
    assert rainbow(3) == rainbow(3)
    assert rainbow(3) != trivial(3)
    assert trivial(2) == rainbow(2)


def test_colour_lookup_symmetry():
    c = rainbow(5)
    assert c.colour(1, 3) == c.colour(3, 1)
    with pytest.raises(ValueError):
        c.colour(2, 2)
    with pytest.raises(ValueError):
        c.colour(0, 5)


def test_clique_copy_validation():
    assert len(CliqueCopy((0, 2, 5))) == 3
    with pytest.raises(ValueError):
        CliqueCopy((3,))
    with pytest.raises(ValueError):
        CliqueCopy((2, 2, 3))
    with pytest.raises(ValueError):
        CliqueCopy((3, 1))
    with pytest.raises(ValueError):
        CliqueCopy((-1, 0))


def test_graph_spec_validation():
    g = GraphSpec.from_edges(4, [(1, 0), (2, 3)])
    assert g.sorted_edges() == [(0, 1), (2, 3)]
    assert g.degrees() == [1, 1, 1, 1]
    assert not g.is_complete()
    assert GraphSpec.clique(4).is_complete()
    with pytest.raises(ValueError):
        GraphSpec.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        GraphSpec.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        GraphSpec(3, frozenset({(0, 1), (1, 0)}))


def test_canonicalize_examples():
    c = Colouring(3, 6, np.array([5, 5, 2]))
    cc = canonicalize(c)
    assert list(cc.colours) == [0, 0, 1] and cc.k == 2
    assert canonicalize(rainbow(3)) == rainbow(3)
    odd = Colouring(3, 8, np.array([7, 7, 7]))
    assert canonicalize(odd) == trivial(3)


def test_restrict_examples():
    assert restrict(rainbow(4), {0, 1}) == rainbow(2)
    assert restrict(trivial(5), {1, 3, 4}) == trivial(3)
    c = random_colouring(np.random.default_rng(0), 7)
    assert restrict(c, range(7)) == canonicalize(c)
    assert restrict(c, [2]).n == 1


def test_restrict_validation():
    with pytest.raises(ValueError):
        restrict(rainbow(4), [])
    with pytest.raises(ValueError):
        restrict(rainbow(4), [1, 1, 2])
    with pytest.raises(ValueError):
        restrict(rainbow(4), [0, 4])


def test_restrict_composition_law():
    rng = np.random.default_rng(42)
    for _ in range(50):
        n = int(rng.integers(3, 10))
        c = random_colouring(rng, n)
        k1 = int(rng.integers(2, n + 1))
        s1 = sorted(rng.permutation(n)[:k1].tolist())
        k2 = int(rng.integers(1, k1 + 1))
        pick = sorted(rng.permutation(k1)[:k2].tolist())
        s2 = [s1[i] for i in pick]
        assert restrict(restrict(c, s1), pick) == restrict(c, s2)


def test_restrict_never_gains_colours():
    rng = np.random.default_rng(7)
    for _ in range(30):
        n = int(rng.integers(2, 10))
        c = random_colouring(rng, n)
        k = int(rng.integers(1, n + 1))
        s = sorted(rng.permutation(n)[:k].tolist())
        assert colour_count(restrict(c, s)) <= colour_count(c)


@settings(deadline=None, max_examples=60)
@given(st.lists(st.integers(min_value=0, max_value=40), min_size=0, max_size=45))
def test_canonical_relabel_properties(raw):
    arr = np.asarray(raw, dtype=np.int64)
    out, k = canonical_relabel(arr)
    assert k == len(set(raw))
    # idempotent
    again, k2 = canonical_relabel(out)
    assert k2 == k and np.array_equal(again, out)
    # colour equality of positions preserved exactly
    for i in range(len(raw)):
        for j in range(len(raw)):
            assert (raw[i] == raw[j]) == (out[i] == out[j])
    # first-appearance order
    if len(raw):
        firsts = sorted(range(k), key=lambda cid: int(np.flatnonzero(out == cid)[0]))
        assert firsts == list(range(k))
