"""Predicates and scanners for even-chromatic / unique-chromatic clique copies.

A copy fails "h-unique" when no colour occurs exactly once inside it, and
fails "h-odd" when every colour occurs an even number of times (an
even-chromatic copy).  Exhaustive scans enumerate t-subsets in lexicographic
order, partitioned by first vertex so parallel runs reduce deterministically:
the report depends only on the inputs, never on the worker count.  Sampled
scans draw t-subsets with replacement from numpy's default generator (PCG64),
so a (count, seed) pair fully determines the sample sequence.
"""

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import CliqueCopy, Colouring, as_copy
from .errors import CapacityError, ContractViolation

PROPERTIES = {"h-unique": kernels.PROP_UNIQUE, "h-odd": kernels.PROP_ODD}

EXHAUSTIVE_GUARD = 1_000_000_000


@dataclass(frozen=True)
class ScanReport:
    property: str
    t: int
    n: int
    mode: str
    copies_checked: int
    counterexample: CliqueCopy | None
    elapsed: float

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_text(self) -> str:
        """Stable report text (elapsed excluded so identical runs diff clean)."""
        head = (
            f"scan property={self.property} t={self.t} n={self.n} "
            f"mode={self.mode} copies={self.copies_checked} "
            f"result={'pass' if self.passed else 'fail'}"
        )
        if self.counterexample is None:
            return head + "\n"
        return head + "\ncounterexample: " + " ".join(str(v) for v in self.counterexample.vertices) + "\n"


@dataclass(frozen=True)
class RectangleWitness:
    """Grid rectangle {(v,u1), (v,u2), (v',u1), (v',u2)} inside a copy."""

    v: int
    v_prime: int
    u1: int
    u2: int

    def __post_init__(self):
        if self.v == self.v_prime or self.u1 == self.u2:
            raise ValueError("rectangle corners must be distinct")

    def flat_vertices(self, m: int) -> tuple[int, ...]:
        corners = [
            self.v * m + self.u1,
            self.v * m + self.u2,
            self.v_prime * m + self.u1,
            self.v_prime * m + self.u2,
        ]
        return tuple(sorted(corners))


def _copy_colours(c: Colouring, s: CliqueCopy) -> np.ndarray:
    verts = np.asarray(s.vertices, dtype=np.int64)
    if verts[-1] >= c.n:
        raise ValueError(f"copy vertex {int(verts[-1])} out of range for n={c.n}")
    return kernels.pair_colours(c.colours, c.n, verts[None, :])[0]


def is_even_chromatic(c: Colouring, s) -> bool:
    """True iff every colour inside the copy occurs an even number of times."""
    _, counts = np.unique(_copy_colours(c, as_copy(s)), return_counts=True)
    return bool((counts % 2 == 0).all())


def is_unique_chromatic(c: Colouring, s) -> bool:
    """True iff some colour occurs on exactly one edge of the copy."""
    _, counts = np.unique(_copy_colours(c, as_copy(s)), return_counts=True)
    return bool((counts == 1).any())


def lex_rank(verts, n: int, t: int) -> int:
    """Rank of a sorted t-subset in the lexicographic enumeration (0-based)."""
    rank = 0
    prev = -1
    for i, v in enumerate(verts):
        for x in range(prev + 1, v):
            rank += math.comb(n - 1 - x, t - 1 - i)
        prev = v
    return rank


def _scan_exhaustive(ec, n, t, prop, threads):
    blocks = range(n - t + 1)
    if threads <= 1:
        for v0 in blocks:
            hit = kernels.scan_block(ec, n, t, v0, prop)
            if hit.size:
                return hit
        return None
    with ThreadPoolExecutor(max_workers=threads) as pool:
        batch = max(2 * threads, 4)
        for start in range(0, len(blocks), batch):
            futs = [
                pool.submit(kernels.scan_block, ec, n, t, v0, prop)
                for v0 in blocks[start : start + batch]
            ]
            for fut in futs:
                hit = fut.result()
                if hit.size:
                    return hit
    return None


def _sample_batches(n, t, count, seed):
    rng = np.random.default_rng(seed)
    chunk = max(1, 8_000_000 // n)
    done = 0
    while done < count:
        b = min(chunk, count - done)
        u = rng.random((b, n))
        part = np.argpartition(u, t - 1, axis=1)[:, :t]
        yield done, np.ascontiguousarray(np.sort(part, axis=1).astype(np.int64))
        done += b


def scan(
    c: Colouring,
    t: int,
    prop: str,
    mode: str = "exhaustive",
    count: int | None = None,
    seed: int | None = None,
    threads: int = 1,
    force: bool = False,
) -> ScanReport:
    """Search K_t copies of c for a property failure.

    Exhaustive mode checks all C(n, t) copies in lexicographic order and
    reports the first failure; it refuses jobs over 10^9 copies unless
    force=True.  Sample mode draws `count` uniform t-subsets (with
    replacement) seeded by `seed`.
    """
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}; expected one of {sorted(PROPERTIES)}")
    if not 2 <= t <= c.n:
        raise ValueError(f"need 2 <= t <= n, got t={t}, n={c.n}")
    code = PROPERTIES[prop]
    start = time.perf_counter()
    if mode == "exhaustive":
        total = math.comb(c.n, t)
        if total > EXHAUSTIVE_GUARD and not force:
            raise CapacityError(f"exhaustive scan of {total} copies exceeds the guard; pass force=True")
        hit = _scan_exhaustive(c.colours, c.n, t, code, threads)
        if hit is None:
            cx, copies = None, total
        else:
            cx = CliqueCopy(tuple(int(v) for v in hit))
            copies = lex_rank(cx.vertices, c.n, t) + 1
        mode_str = "exhaustive"
    elif mode == "sample":
        if count is None or seed is None:
            raise ValueError("sample mode needs count and seed")
        cx, copies = None, count
        for done, batch in _sample_batches(c.n, t, count, seed):
            pos = kernels.check_copies(c.colours, c.n, batch, code)
            if pos >= 0:
                cx = CliqueCopy(tuple(int(v) for v in batch[pos]))
                copies = done + pos + 1
                break
        mode_str = f"sample(count={count},seed={seed})"
    else:
        raise ValueError(f"unknown mode {mode!r}; expected 'exhaustive' or 'sample'")
    return ScanReport(
        property=prop,
        t=t,
        n=c.n,
        mode=mode_str,
        copies_checked=copies,
        counterexample=cx,
        elapsed=time.perf_counter() - start,
    )


def min_copy_colours(c: Colouring, t: int, force: bool = False) -> int:
    """Minimum number of distinct colours over all K_t copies (exhaustive)."""
    if not 2 <= t <= c.n:
        raise ValueError(f"need 2 <= t <= n, got t={t}, n={c.n}")
    total = math.comb(c.n, t)
    if total > EXHAUSTIVE_GUARD and not force:
        raise CapacityError(f"exhaustive minimum over {total} copies exceeds the guard; pass force=True")
    best = None
    for v0 in range(c.n - t + 1):
        out = kernels.min_colours_block(c.colours, c.n, t, v0)
        if out.size and (best is None or int(out[0]) < best):
            best = int(out[0])
            if best == 1:
                break
    return best


def diagnose_rectangle(a, s) -> RectangleWitness:
    """Find a grid rectangle inside a copy that fails the amalgam's property.

    The caller asserts that the first factor satisfies the property the copy
    fails; under that assertion a rectangle must exist.  Raises
    ContractViolation when the search is exhausted, which means either the
    assertion about the factor is false or there is a bug upstream.
    """
    copy = as_copy(s)
    m = a.meta.m
    if copy.vertices[-1] >= a.colouring.n:
        raise ValueError(f"copy vertex {copy.vertices[-1]} out of range for n={a.colouring.n}")
    decoded = [(x // m, x % m) for x in copy.vertices]
    present = set(decoded)
    columns = sorted({v for v, _ in decoded})
    found_pair = False
    for i in range(len(decoded)):
        v, u1 = decoded[i]
        for j in range(i + 1, len(decoded)):
            if decoded[j][0] != v:
                continue
            found_pair = True
            u2 = decoded[j][1]
            for v2 in columns:
                if v2 != v and (v2, u1) in present and (v2, u2) in present:
                    return RectangleWitness(v=v, v_prime=v2, u1=u1, u2=u2)
    if not found_pair:
        raise ContractViolation(
            "no two copy vertices share a grid column; the factor colouring cannot satisfy the asserted property"
        )
    raise ContractViolation(
        "a same-column vertex pair has no matching pair in another column; factor assertion or amalgam data is wrong"
    )
