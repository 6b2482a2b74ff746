"""Core types for edge-colourings of complete graphs, plus elementary transforms.

Vertices of K_n are 0..n-1.  Edges are stored in the canonical order:
lexicographic by (i, j) with i < j, so edge (i, j) lives at flat index
i*n - i*(i+1)//2 + (j - i - 1).  Colour ids of a stored colouring are always
canonical: relabelled to 0..k-1 in order of first appearance along the edge
order, which makes equality of colourings well defined.
"""

from dataclasses import dataclass

import numpy as np


def n_edges(n: int) -> int:
    """Number of edges of K_n."""
    return n * (n - 1) // 2


def edge_index(i: int, j: int, n: int) -> int:
    """Flat index of edge (i, j), i < j, in the canonical edge order of K_n."""
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def canonical_relabel(raw: np.ndarray) -> tuple[np.ndarray, int]:
    """Relabel colour ids to 0..k-1 in order of first appearance.

    Returns the relabelled array (int64) and the number of distinct ids.
    Colour-equality of positions is preserved exactly.
    """
    raw = np.asarray(raw)
    if raw.size == 0:
        return raw.astype(np.int64), 0
    vals, first, inv = np.unique(raw, return_index=True, return_inverse=True)
    rank = np.empty(vals.size, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(vals.size)
    return rank[inv.reshape(-1)].astype(np.int64), int(vals.size)


@dataclass(frozen=True, eq=False)
class Colouring:
    """A canonical edge-colouring of K_n.

    n: vertex count; k: palette size; colours: flat int64 array of length
    n*(n-1)/2 over ids 0..k-1 in canonical edge order.  Immutable after
    construction (the array is marked read-only), hence safe to share across
    threads.
    """

    n: int
    k: int
    colours: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        arr = np.ascontiguousarray(self.colours, dtype=np.int64)
        expected = n_edges(self.n)
        if arr.shape != (expected,):
            raise ValueError(f"expected {expected} edge colours for n={self.n}, got shape {arr.shape}")
        if arr.size == 0:
            if self.k != 0:
                raise ValueError("empty colouring must have k=0")
        else:
            lo, hi = int(arr.min()), int(arr.max())
            if lo < 0 or hi >= self.k:
                raise ValueError(f"colour ids must lie in 0..{self.k - 1}, found range [{lo}, {hi}]")
        arr.flags.writeable = False
        object.__setattr__(self, "colours", arr)

    def colour(self, i: int, j: int) -> int:
        """Colour of edge {i, j}."""
        if i == j:
            raise ValueError("no self-loops in K_n")
        if i > j:
            i, j = j, i
        if i < 0 or j >= self.n:
            raise ValueError(f"vertex out of range for n={self.n}")
        return int(self.colours[edge_index(i, j, self.n)])

    def __eq__(self, other):
        if not isinstance(other, Colouring):
            return NotImplemented
        return self.n == other.n and self.k == other.k and bool(np.array_equal(self.colours, other.colours))

    __hash__ = None


@dataclass(frozen=True)
class CliqueCopy:
    """A copy of a clique in K_n, identified by its strictly increasing vertex set."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        verts = tuple(int(v) for v in self.vertices)
        if len(verts) < 2:
            raise ValueError("a clique copy needs at least 2 vertices")
        if any(b <= a for a, b in zip(verts, verts[1:])):
            raise ValueError(f"vertices must be strictly increasing, got {verts}")
        if verts[0] < 0:
            raise ValueError("vertex ids must be non-negative")
        object.__setattr__(self, "vertices", verts)

    def __len__(self):
        return len(self.vertices)


def as_copy(s) -> CliqueCopy:
    """Coerce a vertex sequence into a CliqueCopy (sorts the input)."""
    if isinstance(s, CliqueCopy):
        return s
    return CliqueCopy(tuple(sorted(int(v) for v in s)))


@dataclass(frozen=True)
class GraphSpec:
    """A small pattern graph: vertex count plus a set of undirected edges."""

    v: int
    edges: frozenset

    def __post_init__(self):
        if self.v < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for e in self.edges:
            a, b = int(e[0]), int(e[1])
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if a > b:
                a, b = b, a
            if a < 0 or b >= self.v:
                raise ValueError(f"edge ({a}, {b}) out of range for v={self.v}")
            if (a, b) in norm:
                raise ValueError(f"duplicate edge ({a}, {b})")
            norm.add((a, b))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, v: int, edges) -> "GraphSpec":
        return cls(v, frozenset((int(a), int(b)) for a, b in edges))

    @classmethod
    def clique(cls, t: int) -> "GraphSpec":
        return cls(t, frozenset((i, j) for i in range(t) for j in range(i + 1, t)))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.v
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighbour sets as bitmasks."""
        adj = [0] * self.v
        for a, b in self.edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return adj

    def is_complete(self) -> bool:
        return self.num_edges == n_edges(self.v)


def rainbow(n: int) -> Colouring:
    """Colouring of K_n with a distinct colour on every edge."""
    e = n_edges(n)
    return Colouring(n, e, np.arange(e, dtype=np.int64))


def trivial(n: int) -> Colouring:
    """Colouring of K_n with the same colour on every edge."""
    e = n_edges(n)
    return Colouring(n, 1 if e else 0, np.zeros(e, dtype=np.int64))


def canonicalize(c: Colouring) -> Colouring:
    """Relabel the palette to first-appearance order (idempotent)."""
    colours, k = canonical_relabel(c.colours)
    return Colouring(c.n, k, colours)


def colour_count(c: Colouring) -> int:
    """Number of distinct colours used (the k field, by the canonical invariant)."""
    return c.k


def restrict(c: Colouring, s) -> Colouring:
    """Induced colouring on the vertex subset s, relabelled to 0..|s|-1 preserving order."""
    verts = sorted(int(v) for v in s)
    if not verts:
        raise ValueError("subset must be nonempty")
    if len(set(verts)) != len(verts):
        raise ValueError("subset contains duplicate vertices")
    if verts[0] < 0 or verts[-1] >= c.n:
        raise ValueError(f"subset out of range for n={c.n}")
    sub = np.asarray(verts, dtype=np.int64)
    t = sub.size
    if t == 1:
        return Colouring(1, 0, np.empty(0, dtype=np.int64))
    ii, jj = np.triu_indices(t, 1)
    a, b = sub[ii], sub[jj]
    raw = c.colours[a * c.n - a * (a + 1) // 2 + (b - a - 1)]
    colours, k = canonical_relabel(raw)
    return Colouring(t, k, colours)
