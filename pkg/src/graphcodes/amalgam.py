"""The amalgamation operator on edge-colourings, with component tracking.

Given c on K_n and d on K_m, the amalgamation lives on K_{nm} whose vertices
are grid points (v, u), v < n, u < m, flattened to id v*m + u.  For an edge
between (v1, u1) and (v2, u2) with v1 <= v2 the colour is the 4-tuple

    (c(v1 v2) or *,  d(u1 u2) or *,  sign,  {u1, u2} or *)

where the sign is '+' if v1 < v2 and u1 < u2, '-' if v1 < v2 and u1 > u2,
'0' if v1 < v2 and u1 = u2, and 'inf' if v1 = v2 (a vertical pair, which
also records {u1, u2} as its fourth component).  Two edges get the same
colour exactly when their tuples agree.  Stored colourings are canonical;
the AmalgamMeta table remembers each canonical id's tuple.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import Colouring, canonical_relabel, n_edges
from .errors import CapacityError

DEFAULT_MAX_VERTICES = 10_000

SIGN_UP = "+"
SIGN_DOWN = "-"
SIGN_FLAT = "0"
SIGN_VERTICAL = "inf"


@dataclass(frozen=True)
class AmalgamMeta:
    """Palette table of an amalgamation: canonical colour id -> 4-tuple.

    Tuples are (comp1, comp2, comp3, comp4) with comp1 a colour of c or None,
    comp2 a colour of d or None, comp3 one of '+', '-', '0', 'inf', and comp4
    an ordered pair (u1, u2), u1 < u2, or None.  None renders as '*'.
    """

    n: int
    m: int
    tuple_table: dict

    def __post_init__(self):
        for cid, (c1, c2, sign, pair) in self.tuple_table.items():
            vertical = sign == SIGN_VERTICAL
            if vertical != (c1 is None) or vertical != (pair is not None):
                raise ValueError(f"inconsistent vertical tuple for colour {cid}")
            if not vertical and (sign == SIGN_FLAT) != (c2 is None):
                raise ValueError(f"inconsistent flat tuple for colour {cid}")
        if len(set(self.tuple_table.values())) != len(self.tuple_table):
            raise ValueError("tuple table is not injective")


@dataclass(frozen=True)
class AmalgamColouring:
    colouring: Colouring
    meta: AmalgamMeta


def _invert_pair_index(p: int, m: int) -> tuple[int, int]:
    u1 = 0
    while p >= m - 1 - u1:
        p -= m - 1 - u1
        u1 += 1
    return u1, u1 + 1 + p


def _decode_raw(rid: int, kc: int, kd: int, m: int):
    base_inf = 2 * kc * kd + kc
    if rid >= base_inf:
        return (None, None, SIGN_VERTICAL, _invert_pair_index(rid - base_inf, m))
    if rid >= 2 * kc * kd:
        return (rid - 2 * kc * kd, None, SIGN_FLAT, None)
    if rid >= kc * kd:
        c1, c2 = divmod(rid - kc * kd, kd)
        return (c1, c2, SIGN_DOWN, None)
    c1, c2 = divmod(rid, kd)
    return (c1, c2, SIGN_UP, None)


def amalgamate(c: Colouring, d: Colouring, max_vertices: int = DEFAULT_MAX_VERTICES) -> AmalgamColouring:
    """Amalgamation of c and d, canonicalized, with its palette table.

    Refuses products larger than max_vertices (the default keeps edge arrays
    around 4*10^8 bytes at worst); raise the cap explicitly for bigger runs.
    """
    big = c.n * d.n
    if big > max_vertices:
        raise CapacityError(f"amalgamation on {big} vertices exceeds the cap of {max_vertices}")
    raw = kernels.amalgam_raw(c.colours, d.colours, c.n, d.n, c.k, d.k)
    colours, k = canonical_relabel(raw)
    table = {}
    if raw.size:
        vals, first = np.unique(raw, return_index=True)
        for cid, at in enumerate(np.argsort(first, kind="stable")):
            table[cid] = _decode_raw(int(vals[at]), c.k, d.k, d.n)
    return AmalgamColouring(
        colouring=Colouring(big, k, colours),
        meta=AmalgamMeta(n=c.n, m=d.n, tuple_table=table),
    )


def predicted_colour_count(kc: int, kd: int, m: int) -> int:
    """Exact palette size (2*kd + 1)*kc + C(m, 2) of an amalgamation.

    The formula assumes both factors have at least 2 vertices so that every
    sign case is realized; for single-vertex factors compare with a
    materialized count instead.
    """
    return (2 * kd + 1) * kc + m * (m - 1) // 2


def weaken(c: Colouring, f) -> Colouring:
    """Post-compose c with the colour map f (dict or callable), canonicalized."""
    if callable(f):
        lut = [f(i) for i in range(c.k)]
    else:
        missing = [i for i in range(c.k) if i not in f]
        if missing:
            raise ValueError(f"map undefined on colour {missing[0]}")
        lut = [f[i] for i in range(c.k)]
    lut = np.asarray(lut, dtype=np.int64)
    if lut.size:
        colours, k = canonical_relabel(lut[c.colours])
    else:
        colours, k = c.colours, 0
    return Colouring(c.n, k, colours)


def component(a: AmalgamColouring, i: int) -> Colouring:
    """The i-th component weakening (i in 1..4) of an amalgamation."""
    if i not in (1, 2, 3, 4):
        raise ValueError(f"component index must be 1..4, got {i}")
    seen = {}
    lut = np.empty(a.colouring.k, dtype=np.int64)
    for cid in range(a.colouring.k):
        key = a.meta.tuple_table[cid][i - 1]
        if key not in seen:
            seen[key] = len(seen)
        lut[cid] = seen[key]
    return weaken(a.colouring, {cid: int(lut[cid]) for cid in range(a.colouring.k)})


def product(c1: Colouring, c2: Colouring) -> Colouring:
    """Product colouring: edge e gets the pair (c1(e), c2(e)), canonicalized."""
    if c1.n != c2.n:
        raise ValueError(f"factor sizes differ: {c1.n} vs {c2.n}")
    if n_edges(c1.n) == 0:
        return Colouring(c1.n, 0, np.empty(0, dtype=np.int64))
    stride = max(c2.k, 1)
    colours, k = canonical_relabel(c1.colours * stride + c2.colours)
    return Colouring(c1.n, k, colours)
