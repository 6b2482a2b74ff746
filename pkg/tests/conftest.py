"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the package's vectorized code paths:
the amalgamation oracle walks the defining case analysis edge by edge, the
predicate oracle uses a Counter, and the GF(2) rank oracle eliminates with
lowest-set-bit pivots on Python ints.  Tests compare the fast paths against
these.
"""

import itertools
from collections import Counter

import numpy as np
import pytest

from graphcodes.core import Colouring, canonical_relabel

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_record():
    def _record(line: str) -> None:
        ACCEPTANCE_LINES.append(line)
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_colouring(rng, n: int, kmax: int | None = None) -> Colouring:
    """A canonical colouring of K_n with a random palette."""
    e = n * (n - 1) // 2
    if e == 0:
        return Colouring(n, 0, np.empty(0, dtype=np.int64))
    hi = kmax if kmax is not None else int(rng.integers(1, e + 1))
    raw = rng.integers(0, max(hi, 1), size=e)
    colours, k = canonical_relabel(raw)
    return Colouring(n, k, colours)


def naive_amalgam_tuples(c: Colouring, d: Colouring) -> list:
    """Edge tuples of the amalgamation straight from the case analysis."""
    m = d.n
    out = []
    big = c.n * m
    for x in range(big):
        v1, u1 = divmod(x, m)
        for y in range(x + 1, big):
            v2, u2 = divmod(y, m)
            if v1 == v2:
                out.append((None, None, "inf", (u1, u2)))
            elif u1 < u2:
                out.append((c.colour(v1, v2), d.colour(u1, u2), "+", None))
            elif u1 > u2:
                out.append((c.colour(v1, v2), d.colour(u2, u1), "-", None))
            else:
                out.append((c.colour(v1, v2), None, "0", None))
    return out


def tuples_to_canonical(tuples: list) -> np.ndarray:
    seen: dict = {}
    out = np.empty(len(tuples), dtype=np.int64)
    for pos, tup in enumerate(tuples):
        if tup not in seen:
            seen[tup] = len(seen)
        out[pos] = seen[tup]
    return out


def copy_counts(c: Colouring, verts) -> Counter:
    return Counter(c.colour(i, j) for i, j in itertools.combinations(sorted(verts), 2))


def oracle_even_chromatic(c, verts) -> bool:
    return all(v % 2 == 0 for v in copy_counts(c, verts).values())


def oracle_unique_chromatic(c, verts) -> bool:
    return any(v == 1 for v in copy_counts(c, verts).values())


def verify_chain(h, chain) -> None:
    """Assert all decomposition-chain invariants from first principles."""
    sets = [frozenset(part) for part in chain.chain]
    assert sets[0] == frozenset(range(h.v))
    assert sets[-1] == frozenset()
    for a, b in zip(sets, sets[1:]):
        assert b < a, "chain must strictly decrease"
        for x, y in itertools.combinations(sorted(a - b), 2):
            assert (x, y) not in h.edges, "difference must be independent"
    for s in sets:
        inside = sum(1 for (x, y) in h.edges if x in s and y in s)
        assert inside % 2 == 0, "every chain member must induce evenly many edges"


def verify_b2_conditions(h, ind) -> None:
    """Assert the two independent-set conditions directly from h.edges."""
    iset = set(ind)
    for x, y in itertools.combinations(sorted(iset), 2):
        assert (x, y) not in h.edges, "set must be independent"
    cross = sum(1 for (x, y) in h.edges if (x in iset) != (y in iset))
    assert cross >= 2, "need at least two crossing edges"
    rest = set(range(h.v)) - iset
    inner = [(x, y) for (x, y) in h.edges if x in rest and y in rest]
    touched = set(itertools.chain.from_iterable(inner))
    if touched:
        full = len(touched) * (len(touched) - 1) // 2
        assert len(inner) < full, "remainder minus isolated vertices must be non-complete"


def rank_oracle(dense: np.ndarray) -> int:
    """GF(2) rank by elimination on lowest set bits, over Python ints."""
    rows = []
    for row in np.asarray(dense, dtype=np.uint8):
        val = 0
        for pos in np.flatnonzero(row):
            val |= 1 << int(pos)
        rows.append(val)
    pivots: dict[int, int] = {}
    rank = 0
    for x in rows:
        while x:
            low = x & -x
            if low in pivots:
                x ^= pivots[low]
            else:
                pivots[low] = x
                rank += 1
                break
    return rank
