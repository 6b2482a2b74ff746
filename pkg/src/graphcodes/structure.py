"""Structural classifiers for small pattern graphs.

Even-decomposability asks for a chain of vertex subsets, each inducing an
even number of edges, where consecutive differences are independent sets.
The B2 finder locates an independent set I with at least two edges to the
rest such that deleting I (and then isolated vertices) leaves nothing or a
non-complete graph; such a set always exists for non-complete graphs without
isolated vertices, so running out of candidates raises ContractViolation.
All searches use bitmask subsets and deterministic smallest-size,
lexicographic-first ordering, so witnesses are reproducible.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import GraphSpec, n_edges
from .errors import CapacityError, ContractViolation

SIZE_GUARD = 24


@dataclass(frozen=True)
class DecompositionChain:
    """Strictly decreasing vertex subsets, first = all vertices, last = empty."""

    chain: tuple[tuple[int, ...], ...]


def _mask_edges(adj, mask: int) -> int:
    total = 0
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        total += (adj[v] & mask).bit_count()
    return total // 2


def _mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return tuple(out)


def _independent_subsets(adj, mask: int):
    """Nonempty independent subsets of mask, smallest size first, lex within size."""
    verts = _mask_vertices(mask)
    for size in range(1, len(verts) + 1):
        for combo in itertools.combinations(verts, size):
            sub = 0
            ok = True
            for v in combo:
                if adj[v] & sub:
                    ok = False
                    break
                sub |= 1 << v
            if ok:
                yield sub, combo


def is_even_decomposable(h: GraphSpec):
    """A DecompositionChain witness, or None when no decomposition exists."""
    if h.v > SIZE_GUARD:
        raise CapacityError(f"even-decomposability search capped at {SIZE_GUARD} vertices, got {h.v}")
    if h.num_edges % 2 == 1:
        return None
    adj = h.adjacency_masks()
    dead: set[int] = set()

    def descend(mask: int):
        # mask always induces an even edge count here
        if mask == 0:
            return ((),)
        if mask in dead:
            return None
        for sub, _ in _independent_subsets(adj, mask):
            rest = mask & ~sub
            if _mask_edges(adj, rest) % 2 == 1:
                continue
            tail = descend(rest)
            if tail is not None:
                return (_mask_vertices(mask),) + tail
        dead.add(mask)
        return None

    full = (1 << h.v) - 1
    found = descend(full)
    if found is None:
        return None
    return DecompositionChain(chain=found)


def _check_preconditions(h: GraphSpec) -> None:
    if h.is_complete():
        raise ValueError("graph must be non-complete")
    if h.v and min(h.degrees()) == 0:
        raise ValueError("graph must have no isolated vertices")


def find_independent_set_b2(h: GraphSpec) -> tuple[int, ...]:
    """Smallest (then lexicographically first) independent set I with:
    at least 2 edges between I and the rest, and h minus I, after dropping
    isolated vertices, empty or non-complete.
    """
    _check_preconditions(h)
    if h.v > SIZE_GUARD:
        raise CapacityError(f"independent-set search capped at {SIZE_GUARD} vertices, got {h.v}")
    adj = h.adjacency_masks()
    deg = h.degrees()
    full = (1 << h.v) - 1
    for sub, combo in _independent_subsets(adj, full):
        # I independent, so every incident edge crosses to the complement
        if sum(deg[v] for v in combo) < 2:
            continue
        rest = full & ~sub
        core = 0
        m = rest
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if adj[v] & rest:
                core |= 1 << v
        nc = core.bit_count()
        if core == 0 or _mask_edges(adj, core) < n_edges(nc):
            return combo
    raise ContractViolation(
        "no qualifying independent set; a non-complete graph without isolated vertices must have one"
    )


def unique_lower_bound_exponent(h: GraphSpec) -> Fraction:
    """The proven lower-bound exponent 1/(|V(h)|-1); no search is performed."""
    _check_preconditions(h)
    return Fraction(1, h.v - 1)
