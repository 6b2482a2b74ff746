"""Text serialization: EGC colouring files, pattern-graph files, colour maps.

EGC v1 layout (whitespace tolerant between tokens, one record per line):

    egc 1
    n <vertices>
    colours <palette size>
    <c0> <c1> ... <cE-1>        # any number of lines, E = n*(n-1)/2 ints

Colour ids are canonicalized on parse, so writing a canonical colouring and
reading it back is bit-exact.  Amalgamation products carry an extra `meta`
section mapping each canonical colour id to its four defining components.
"""

from .core import Colouring, GraphSpec, canonical_relabel, n_edges
from .errors import FormatError

import numpy as np

_SIGNS = ("+", "-", "0", "inf")


def dumps_egc(c: Colouring) -> str:
    lines = [f"egc 1", f"n {c.n}", f"colours {c.k}"]
    vals = c.colours
    for off in range(0, vals.size, 16):
        lines.append(" ".join(str(int(x)) for x in vals[off : off + 16]))
    return "\n".join(lines) + "\n"


def _strip_comments(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body:
            out.append(body)
    return out


def parse_egc(text: str) -> Colouring:
    lines = _strip_comments(text)
    if not lines or lines[0].split() != ["egc", "1"]:
        raise FormatError("missing 'egc 1' header")
    head = {}
    idx = 1
    while idx < len(lines) and lines[idx].split()[0] in ("n", "colours"):
        key, _, val = lines[idx].partition(" ")
        try:
            head[key] = int(val)
        except ValueError as exc:
            raise FormatError(f"bad header line {lines[idx]!r}") from exc
        idx += 1
    if "n" not in head or "colours" not in head:
        raise FormatError("header must declare both 'n' and 'colours'")
    n, k = head["n"], head["colours"]
    toks = " ".join(lines[idx:]).split()
    try:
        raw = np.array([int(t) for t in toks], dtype=np.int64)
    except ValueError as exc:
        raise FormatError("non-integer colour token") from exc
    if raw.size != n_edges(n):
        raise FormatError(f"expected {n_edges(n)} colours for n={n}, got {raw.size}")
    colours, seen = canonical_relabel(raw)
    if seen != k:
        raise FormatError(f"header declares {k} colours but body uses {seen}")
    return Colouring(n, seen, colours)


def save_egc(path, c: Colouring) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_egc(c))


def load_egc(path) -> Colouring:
    with open(path) as fh:
        return parse_egc(fh.read())


def _fmt_component(val, fmt) -> str:
    return "*" if val is None else fmt(val)


def dumps_amalgam(ac) -> str:
    """Serialize an AmalgamColouring: EGC body followed by a meta section."""
    parts = [dumps_egc(ac.colouring)]
    meta = ac.meta
    parts.append(f"meta {meta.n} {meta.m}\n")
    for cid in range(ac.colouring.k):
        c1, c2, sign, pair = meta.tuple_table[cid]
        parts.append(
            "{} {} {} {} {}\n".format(
                cid,
                _fmt_component(c1, str),
                _fmt_component(c2, str),
                sign,
                _fmt_component(pair, lambda p: f"{p[0]},{p[1]}"),
            )
        )
    return "".join(parts)


def parse_amalgam(text: str):
    from .amalgam import AmalgamColouring, AmalgamMeta

    lines = _strip_comments(text)
    split_at = None
    for pos, line in enumerate(lines):
        if line.split()[0] == "meta":
            split_at = pos
            break
    if split_at is None:
        raise FormatError("missing 'meta' section")
    colouring = parse_egc("\n".join(lines[:split_at]))
    meta_toks = lines[split_at].split()
    if len(meta_toks) != 3:
        raise FormatError(f"bad meta line {lines[split_at]!r}")
    try:
        n, m = int(meta_toks[1]), int(meta_toks[2])
    except ValueError as exc:
        raise FormatError("meta line needs two integer factors") from exc
    if n * m != colouring.n:
        raise FormatError(f"meta factors {n}*{m} do not match n={colouring.n}")
    table = {}
    for line in lines[split_at + 1 :]:
        toks = line.split()
        if len(toks) != 5:
            raise FormatError(f"bad meta row {line!r}")
        try:
            cid = int(toks[0])
        except ValueError as exc:
            raise FormatError(f"bad colour id in {line!r}") from exc
        c1 = None if toks[1] == "*" else int(toks[1])
        c2 = None if toks[2] == "*" else int(toks[2])
        sign = toks[3]
        if sign not in _SIGNS:
            raise FormatError(f"bad sign {sign!r}")
        if toks[4] == "*":
            pair = None
        else:
            u1, _, u2 = toks[4].partition(",")
            pair = (int(u1), int(u2))
        table[cid] = (c1, c2, sign, pair)
    if sorted(table) != list(range(colouring.k)):
        raise FormatError("meta rows must cover colour ids 0..k-1 exactly")
    return AmalgamColouring(colouring=colouring, meta=AmalgamMeta(n=n, m=m, tuple_table=table))


def dumps_graph(g: GraphSpec) -> str:
    lines = [f"v {g.v}"]
    lines.extend(f"{a} {b}" for a, b in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> GraphSpec:
    lines = _strip_comments(text)
    if not lines or lines[0].split()[0] != "v":
        raise FormatError("graph file must start with 'v <count>'")
    try:
        v = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise FormatError(f"bad vertex-count line {lines[0]!r}") from exc
    edges = []
    for line in lines[1:]:
        toks = line.split()
        if len(toks) != 2:
            raise FormatError(f"bad edge line {line!r}")
        try:
            edges.append((int(toks[0]), int(toks[1])))
        except ValueError as exc:
            raise FormatError(f"bad edge line {line!r}") from exc
    try:
        return GraphSpec.from_edges(v, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def load_graph(path) -> GraphSpec:
    with open(path) as fh:
        return parse_graph(fh.read())


def parse_colour_map(text: str) -> dict:
    """Parse a weakening map: lines of '<old> <new>' colour ids."""
    mapping = {}
    for line in _strip_comments(text):
        toks = line.split()
        if len(toks) != 2:
            raise FormatError(f"bad map line {line!r}")
        try:
            old, new = int(toks[0]), int(toks[1])
        except ValueError as exc:
            raise FormatError(f"bad map line {line!r}") from exc
        if old in mapping and mapping[old] != new:
            raise FormatError(f"conflicting entries for colour {old}")
        mapping[old] = new
    return mapping


def load_colour_map(path) -> dict:
    with open(path) as fh:
        return parse_colour_map(fh.read())
