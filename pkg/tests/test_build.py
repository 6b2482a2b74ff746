from fractions import Fraction

import pytest

from graphcodes import (
    build_k4_unique,
    build_k5_unique,
    build_k8_odd,
    colour_count,
    growth_report,
    scan,
    schedule,
)
from graphcodes.build import P_K4, P_K8, factor


def test_factor_values():
    # floor(e^((log n)^(1/2))) along the k4 chain
    assert factor(2, P_K4) == 2
    assert factor(4, P_K4) == 3
    assert factor(12, P_K4) == 4
    assert factor(48, P_K4) == 7
    assert factor(336, P_K4) == 11
    # the k8 chain uses exponent 2/3
    assert factor(4, P_K8) == 3
    assert factor(12, P_K8) == 6
    assert factor(72, P_K8) == 13
    # p = 1 is exact: e^(log n) = n
    assert factor(2, Fraction(1)) == 2
    assert factor(97, Fraction(1)) == 97
    with pytest.raises(ValueError):
        factor(1, P_K4)
    with pytest.raises(ValueError):
        factor(5, Fraction(3, 2))


def test_schedule_examples():
    s = schedule(12, P_K4, base=2)
    assert s.steps == ((2, 2), (4, 3))
    assert s.final == 12
    assert schedule(2, P_K4).steps == ()
    s5 = schedule(5, P_K4)
    assert s5.final == 12
    s8 = schedule(96, P_K8)
    assert s8.steps == ((2, 2), (4, 3), (12, 6), (72, 13))
    assert s8.final == 936


def test_schedule_overrides_and_validation():
    s = schedule(24, P_K4, factors=[2, 3, 2])
    assert s.steps == ((2, 2), (4, 3), (12, 2)) and s.final == 24
    with pytest.raises(ValueError):
        schedule(100, P_K4, factors=[2, 3])
    with pytest.raises(ValueError):
        schedule(10, P_K4, factors=[2, 1, 5])
    with pytest.raises(ValueError):
        schedule(1, P_K4)
    with pytest.raises(ValueError):
        schedule(10, P_K4, base=1)
    with pytest.raises(ValueError):
        schedule(10, Fraction(0), base=2)


def test_builders_deterministic():
    for builder in (build_k4_unique, build_k5_unique, build_k8_odd):
        a = builder(13)
        b = builder(13)
        assert a == b


def test_builder_edges_and_tiny_targets():
    assert build_k4_unique(1).n == 1
    assert build_k8_odd(1).k == 0
    assert build_k4_unique(2).k == 1
    with pytest.raises(ValueError):
        build_k4_unique(0)


def test_builder_palettes_at_schedule_points():
    # palette sizes follow the amalgamation count recursion exactly
    assert colour_count(build_k4_unique(4)) == 4
    assert colour_count(build_k4_unique(12)) == 15
    assert colour_count(build_k4_unique(48)) == 51
    assert colour_count(build_k8_odd(4)) == 4
    assert colour_count(build_k8_odd(12)) == 31


def test_restriction_safety_off_schedule():
    c = build_k4_unique(10)
    assert c.n == 10
    assert scan(c, 4, "h-unique").passed
    c5 = build_k5_unique(7)
    assert scan(c5, 3, "h-unique").passed
    assert scan(c5, 5, "h-unique").passed
    c8 = build_k8_odd(10)
    assert scan(c8, 8, "h-odd").passed
    assert scan(c8, 4, "h-unique").passed


def test_growth_report_rows():
    rows = growth_report("k4", 5)
    assert (rows[0].n, rows[0].colours) == (2, 1)
    assert rows[0].ratio == 0.0
    assert (rows[1].n, rows[1].colours) == (4, 4)  # 3*1 + C(2,2 pairs)=1
    assert (rows[2].n, rows[2].colours) == (12, 15)
    assert (rows[3].n, rows[3].colours) == (48, 51)
    assert (rows[4].n, rows[4].colours) == (336, 174)
    k5 = growth_report("k5", 3)
    assert [(r.n, r.colours) for r in k5] == [(2, 1), (4, 4), (12, 15), (48, 51)]


def test_growth_report_k8_uses_k4_recursion_palette():
    rows = growth_report("k8", 3)
    assert (rows[1].n, rows[1].colours) == (4, 4)
    # auxiliary for m=3 is the k4 recursion value at its first size >= 3
    assert (rows[2].n, rows[2].colours) == (12, (2 * 4 + 1) * 4 + 3)
    assert rows[3].n == 72
    with pytest.raises(ValueError):
        growth_report("k6", 3)
    with pytest.raises(ValueError):
        growth_report("k4", 0)


def test_growth_ratios_bounded():
    rows = growth_report("k4", 20)
    ratios = [r.ratio for r in rows]
    assert max(ratios) < 3.0
    rows8 = growth_report("k8", 15)
    assert max(r.ratio for r in rows8) < 5.0
    # big integers survive far beyond any materialization cap
    assert rows[-1].n > 10**40


def test_scans_match_growth_claims_when_materialized():
    c = build_k4_unique(48)
    assert c.n == 48 and c.k == 51
    rep = scan(c, 4, "h-unique", threads=2)
    assert rep.passed
