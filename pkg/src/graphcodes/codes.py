"""Linear graph codes from colourings: the kernel of the colour-class parity map.

Each colour class of a canonical colouring gives one parity-check row over
GF(2), indexed by the edges of K_n.  The code is the kernel of that map, so
its dimension is C(n, 2) minus the matrix rank, and a colouring avoiding
even-chromatic copies of H yields a code without images of H.  The checks
here deliberately avoid the scan kernels so the two routes can cross-check
each other.
"""

import itertools
import math
import time
from dataclasses import dataclass

import numpy as np

from .core import CliqueCopy, Colouring, GraphSpec, edge_index, n_edges
from .errors import CapacityError

PLACEMENT_GUARD = 1_000_000_000


@dataclass(frozen=True)
class ParityCheckMatrix:
    """One row per colour class, packed 64 edges per word (little-endian bits)."""

    n: int
    k: int
    words: np.ndarray

    @property
    def num_edges(self) -> int:
        return n_edges(self.n)

    def to_dense(self) -> np.ndarray:
        e = self.num_edges
        if self.k == 0:
            return np.zeros((0, e), dtype=np.uint8)
        bits = np.unpackbits(self.words.view(np.uint8), axis=1, bitorder="little")
        return bits[:, :e]

    def row_mask(self, r: int) -> np.ndarray:
        return self.words[r]


@dataclass(frozen=True)
class CodeReport:
    n: int
    k: int
    rank: int
    dimension: int
    density_log2: int


@dataclass(frozen=True)
class CodeScanReport:
    h: str
    n: int
    mode: str
    placements_checked: int
    violation: CliqueCopy | None
    placement: tuple | None
    elapsed: float

    @property
    def passed(self) -> bool:
        return self.violation is None

    def to_text(self) -> str:
        head = (
            f"code-scan h={self.h} n={self.n} mode={self.mode} "
            f"placements={self.placements_checked} result={'pass' if self.passed else 'fail'}"
        )
        if self.violation is None:
            return head + "\n"
        lines = [head, "violation: " + " ".join(str(v) for v in self.violation.vertices)]
        if self.placement is not None:
            lines.append("placement: " + " ".join(str(v) for v in self.placement))
        return "\n".join(lines) + "\n"


def _edge_mask(n: int, edges) -> np.ndarray:
    words = np.zeros((n_edges(n) + 63) // 64 or 1, dtype=np.uint64)
    for a, b in edges:
        e = edge_index(a, b, n) if a < b else edge_index(b, a, n)
        words[e >> 6] |= np.uint64(1) << np.uint64(e & 63)
    return words


def parity_matrix(c: Colouring) -> ParityCheckMatrix:
    """Row r has a 1 exactly at the edges coloured r."""
    e = n_edges(c.n)
    nwords = (e + 63) // 64 or 1
    words = np.zeros((c.k, nwords), dtype=np.uint64)
    if e:
        idx = np.arange(e, dtype=np.int64)
        np.bitwise_or.at(
            words,
            (c.colours, idx >> 6),
            np.uint64(1) << (idx & 63).astype(np.uint64),
        )
    return ParityCheckMatrix(n=c.n, k=c.k, words=words)


def gf2_rank(words: np.ndarray) -> int:
    """Rank over GF(2) of packed rows, by elimination on highest set bits."""
    pivots: dict[int, np.ndarray] = {}
    rank = 0
    for r in range(words.shape[0]):
        row = words[r].copy()
        while True:
            nz = np.flatnonzero(row)
            if nz.size == 0:
                break
            w = int(nz[-1])
            bit = w * 64 + int(row[w]).bit_length() - 1
            if bit in pivots:
                row ^= pivots[bit]
            else:
                pivots[bit] = row
                rank += 1
                break
    return rank


def code_report(mx: ParityCheckMatrix) -> CodeReport:
    rank = gf2_rank(mx.words)
    dim = mx.num_edges - rank
    return CodeReport(n=mx.n, k=mx.k, rank=rank, dimension=dim, density_log2=-rank)


def image_parity(h: GraphSpec, placement, mx: ParityCheckMatrix) -> np.ndarray:
    """Per-colour parity (length k, values 0/1) of the placed image of h."""
    placement = tuple(int(v) for v in placement)
    if len(placement) != h.v:
        raise ValueError(f"placement must assign all {h.v} pattern vertices")
    if len(set(placement)) != len(placement):
        raise ValueError("placement must be injective")
    if placement and max(placement) >= mx.n:
        raise ValueError(f"placement vertex out of range for n={mx.n}")
    mask = _edge_mask(mx.n, ((placement[a], placement[b]) for a, b in h.edges))
    if mx.k == 0:
        return np.zeros(0, dtype=np.uint8)
    return (np.bitwise_count(mx.words & mask).sum(axis=1) & 1).astype(np.uint8)


def _sorted_even_mask(cols: np.ndarray) -> np.ndarray:
    """Rows whose colour multiset has every multiplicity even."""
    if cols.shape[1] % 2 == 1:
        return np.zeros(cols.shape[0], dtype=bool)
    srt = np.sort(cols, axis=1)
    return (srt[:, 0::2] == srt[:, 1::2]).all(axis=1)


def _clique_violation(c: Colouring, t: int):
    # a clique image is even-chromatic iff its sorted colour list pairs up
    if n_edges(t) % 2 == 1:
        return None, math.comb(c.n, t)
    ii, jj = np.triu_indices(t, 1)
    checked = 0
    combos = itertools.combinations(range(c.n), t)
    while True:
        chunk = list(itertools.islice(combos, 1 << 14))
        if not chunk:
            return None, checked
        copies = np.asarray(chunk, dtype=np.int64)
        a, b = copies[:, ii], copies[:, jj]
        cols = c.colours[a * c.n - a * (a + 1) // 2 + (b - a - 1)]
        hits = np.flatnonzero(_sorted_even_mask(cols))
        if hits.size:
            pos = int(hits[0])
            return tuple(int(v) for v in copies[pos]), checked + pos + 1
        checked += len(chunk)


def verify_code_avoids(h: GraphSpec, c: Colouring, force: bool = False) -> CodeScanReport:
    """Exhaustively confirm no image of h in c has an all-even colour profile.

    For cliques this scans vertex subsets; for general h it scans subsets
    times labelled embeddings, reporting the first zero parity vector.
    """
    start = time.perf_counter()
    if h.num_edges == 0:
        raise ValueError("h needs at least one edge; the empty image lies in every linear code")
    name = f"K{h.v}" if h.is_complete() else f"H(v={h.v},e={h.num_edges})"
    if h.v > c.n:
        return CodeScanReport(name, c.n, "exhaustive", 0, None, None, time.perf_counter() - start)
    if h.is_complete():
        total = math.comb(c.n, h.v)
        if total > PLACEMENT_GUARD and not force:
            raise CapacityError(f"{total} placements exceed the guard; pass force=True")
        copy, checked = _clique_violation(c, h.v)
        violation = CliqueCopy(copy) if copy else None
        return CodeScanReport(name, c.n, "exhaustive", checked, violation, copy, time.perf_counter() - start)
    total = math.comb(c.n, h.v) * math.factorial(h.v)
    if total > PLACEMENT_GUARD and not force:
        raise CapacityError(f"{total} placements exceed the guard; pass force=True")
    mx = parity_matrix(c)
    checked = 0
    for subset in itertools.combinations(range(c.n), h.v):
        for perm in itertools.permutations(subset):
            checked += 1
            if not image_parity(h, perm, mx).any():
                return CodeScanReport(
                    name, c.n, "exhaustive", checked, CliqueCopy(subset), perm, time.perf_counter() - start
                )
    return CodeScanReport(name, c.n, "exhaustive", checked, None, None, time.perf_counter() - start)
