"""Recursive constructions of clique-avoiding colourings and their growth.

Starting from a rainbow base on 2 vertices, repeatedly amalgamate with an
auxiliary colouring of K_m where m = floor(e^((log n)^p)).  With trivial
auxiliaries and p = 1/2 the result stays K4-unique (also K3- and K5-unique);
with K4-unique auxiliaries and p = 2/3 it stays K4-unique and K8-odd.  The
floor is evaluated with mpmath at widening precision so schedules are exact
and deterministic.  Growth analytics replay the palette recursion
colours' = (2*aux + 1)*colours + C(m, 2) arithmetically on big integers,
far beyond what can be materialized.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp
import numpy as np

from .amalgam import DEFAULT_MAX_VERTICES, amalgamate
from .core import Colouring, rainbow, restrict, trivial

P_K4 = Fraction(1, 2)
P_K8 = Fraction(2, 3)


@dataclass(frozen=True)
class BuildSchedule:
    p: Fraction
    target: int
    base: int
    steps: tuple[tuple[int, int], ...]
    final: int


@dataclass(frozen=True)
class GrowthRow:
    n: int
    colours: int
    ratio: float


def factor(n: int, p: Fraction) -> int:
    """floor(e^((log n)^p)) for n >= 2, clamped to at least 2.

    Exact for p = 1.  Otherwise evaluated at increasing precision; when the
    value sits within 1e-9 of an integer the precision is widened before the
    floor is taken, so boundary cases cannot flip with the platform libm.
    """
    if n < 2:
        raise ValueError(f"factor needs n >= 2, got {n}")
    p = Fraction(p)
    if not 0 < p <= 1:
        raise ValueError(f"exponent must be in (0, 1], got {p}")
    if p == 1:
        return n
    result = 2
    for dps in (30, 60, 120, 240):
        with mp.workdps(dps):
            x = mp.power(mp.log(n), mp.mpf(p.numerator) / p.denominator)
            y = mp.e**x
            result = int(mp.floor(y))
            if abs(y - mp.nint(y)) > mp.mpf("1e-9"):
                break
    return max(result, 2)


def schedule(target: int, p=P_K4, base: int = 2, factors=None) -> BuildSchedule:
    """Amalgamation schedule reaching at least `target` vertices.

    Each step records (n_k, m_k) with n_{k+1} = n_k * m_k and
    m_k = factor(n_k, p), unless an explicit factor list overrides the rule.
    """
    p = Fraction(p)
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if target < base:
        raise ValueError(f"target must be >= base, got target={target}, base={base}")
    if not 0 < p <= 1:
        raise ValueError(f"exponent must be in (0, 1], got {p}")
    steps = []
    n = base
    if factors is not None:
        for m in factors:
            if m < 2:
                raise ValueError(f"override factors must be >= 2, got {m}")
            steps.append((n, int(m)))
            n *= int(m)
        if n < target:
            raise ValueError(f"override factors reach only {n} < target {target}")
    else:
        while n < target:
            m = factor(n, p)
            steps.append((n, m))
            n *= m
    return BuildSchedule(p=p, target=target, base=base, steps=tuple(steps), final=n)


def _run(sched: BuildSchedule, aux, max_vertices: int) -> Colouring:
    c = rainbow(sched.base)
    for _, m_k in sched.steps:
        c = amalgamate(c, aux(m_k), max_vertices=max_vertices).colouring
    return c


def _build(target, p, aux, base, factors, max_vertices) -> Colouring:
    if target < 1:
        raise ValueError(f"target must be >= 1, got {target}")
    if target == 1:
        return Colouring(1, 0, np.empty(0, dtype=np.int64))
    sched = schedule(max(target, base), p, base=base, factors=factors)
    c = _run(sched, aux, max_vertices)
    if c.n > target:
        c = restrict(c, range(target))
    return c


def build_k4_unique(target: int, base: int = 2, factors=None, max_vertices: int = DEFAULT_MAX_VERTICES) -> Colouring:
    """A K4-unique colouring of K_target: every K4 copy has a once-used colour."""
    return _build(target, P_K4, trivial, base, factors, max_vertices)


def build_k5_unique(target: int, base: int = 2, factors=None, max_vertices: int = DEFAULT_MAX_VERTICES) -> Colouring:
    """A colouring of K_target that is both K3-unique and K5-unique.

    Same construction as build_k4_unique; the invariant claimed (and
    scanned for) differs.
    """
    return _build(target, P_K4, trivial, base, factors, max_vertices)


def build_k8_odd(target: int, base: int = 2, factors=None, max_vertices: int = DEFAULT_MAX_VERTICES) -> Colouring:
    """A colouring of K_target that is K4-unique and K8-odd.

    Auxiliaries are K4-unique colourings built fresh per step; the schedule
    exponent 2/3 keeps the palette quasipolynomial.
    """
    return _build(target, P_K8, lambda m: build_k4_unique(m, max_vertices=max_vertices), base, factors, max_vertices)


def _k4_recursion_colours(m: int, base: int = 2) -> int:
    """Palette size of the k4 recursion once it reaches size >= m (no restriction)."""
    n, colours = base, math.comb(base, 2)
    while n < m:
        mk = factor(n, P_K4)
        colours = 3 * colours + math.comb(mk, 2)
        n *= mk
    return colours


def _ratio(colours: int, n: int, p: Fraction) -> float:
    with mp.workdps(50):
        r = mp.log(colours) / mp.power(mp.log(n), mp.mpf(p.numerator) / p.denominator)
        return float(r)


def growth_report(builder: str, steps: int, base: int = 2) -> list[GrowthRow]:
    """Arithmetic growth table for a builder, no materialization.

    Row k holds the exact vertex count and palette size after k schedule
    steps, plus the ratio log(colours) / (log n)^p.  Auxiliary palette sizes
    are 1 (trivial) for the k4/k5 builders and the k4 recursion value for
    the k8 builder.
    """
    if builder not in ("k4", "k5", "k8"):
        raise ValueError(f"unknown builder {builder!r}; expected k4, k5 or k8")
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    p = P_K8 if builder == "k8" else P_K4
    n = base
    colours = math.comb(base, 2)
    rows = [GrowthRow(n=n, colours=colours, ratio=_ratio(colours, n, p))]
    for _ in range(steps):
        m = factor(n, p)
        aux = _k4_recursion_colours(m) if builder == "k8" else (1 if m >= 2 else 0)
        colours = (2 * aux + 1) * colours + math.comb(m, 2)
        n *= m
        rows.append(GrowthRow(n=n, colours=colours, ratio=_ratio(colours, n, p)))
    return rows
