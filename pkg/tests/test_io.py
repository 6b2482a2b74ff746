import numpy as np
import pytest

from graphcodes import (
    FormatError,
    GraphSpec,
    amalgamate,
    dumps_amalgam,
    dumps_egc,
    load_egc,
    parse_amalgam,
    parse_egc,
    parse_graph,
    rainbow,
    save_egc,
    trivial,
)
from graphcodes.io import dumps_graph, parse_colour_map

from conftest import random_colouring


def test_egc_round_trip_bit_exact():
    rng = np.random.default_rng(11)
    for n in [1, 2, 3, 7, 12, 30]:
        c = random_colouring(rng, n)
        again = parse_egc(dumps_egc(c))
        assert again == c
        assert dumps_egc(again) == dumps_egc(c)


def test_egc_file_round_trip(tmp_path):
    c = random_colouring(np.random.default_rng(3), 9)
    path = tmp_path / "c.egc"
    save_egc(path, c)
    assert load_egc(path) == c


def test_egc_tolerates_comments_and_spacing():
    text = "# a colouring\negc 1\n n 3\ncolours 2\n0 0  # inline\n\n1\n"
    c = parse_egc(text)
    assert c.n == 3 and c.k == 2
    assert list(c.colours) == [0, 0, 1]


def test_egc_canonicalizes_on_parse():
    text = "egc 1\nn 3\ncolours 2\n5 5 9\n"
    assert list(parse_egc(text).colours) == [0, 0, 1]


def test_egc_malformed():
    with pytest.raises(FormatError):
        parse_egc("egc 2\nn 2\ncolours 1\n0\n")
    with pytest.raises(FormatError):
        parse_egc("n 2\ncolours 1\n0\n")
    with pytest.raises(FormatError):
        parse_egc("egc 1\nn 2\n0\n")  # missing colours header
    with pytest.raises(FormatError):
        parse_egc("egc 1\nn 3\ncolours 1\n0 0\n")  # wrong edge count
    with pytest.raises(FormatError):
        parse_egc("egc 1\nn 3\ncolours 3\n0 0 1\n")  # header palette mismatch
    with pytest.raises(FormatError):
        parse_egc("egc 1\nn 3\ncolours 2\n0 x 1\n")


def test_amalgam_round_trip():
    rng = np.random.default_rng(5)
    for n, m in [(2, 2), (3, 2), (2, 3), (4, 3), (1, 4), (4, 1)]:
        a = amalgamate(random_colouring(rng, n), random_colouring(rng, m))
        again = parse_amalgam(dumps_amalgam(a))
        assert again.colouring == a.colouring
        assert again.meta.n == a.meta.n and again.meta.m == a.meta.m
        assert again.meta.tuple_table == a.meta.tuple_table


def test_amalgam_malformed():
    a = amalgamate(rainbow(2), trivial(2))
    text = dumps_amalgam(a)
    with pytest.raises(FormatError):
        parse_amalgam(text.replace("meta 2 2", "meta 2 3"))
    with pytest.raises(FormatError):
        parse_amalgam(text.replace("meta 2 2", "mata 2 2"))
    # drop the last meta row: ids no longer cover the palette
    with pytest.raises(FormatError):
        parse_amalgam(text.rstrip("\n").rsplit("\n", 1)[0] + "\n")


def test_graph_round_trip():
    g = GraphSpec.from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert parse_graph(dumps_graph(g)) == g
    with pytest.raises(FormatError):
        parse_graph("3\n0 1\n")
    with pytest.raises(FormatError):
        parse_graph("v 3\n0 1 2\n")
    with pytest.raises(FormatError):
        parse_graph("v 3\n0 3\n")
    with pytest.raises(FormatError):
        parse_graph("v 3\n0 0\n")


def test_colour_map_parsing():
    assert parse_colour_map("0 0\n1 0\n2 5\n") == {0: 0, 1: 0, 2: 5}
    assert parse_colour_map("# empty\n") == {}
    with pytest.raises(FormatError):
        parse_colour_map("0 1 2\n")
    with pytest.raises(FormatError):
        parse_colour_map("0 1\n0 2\n")
