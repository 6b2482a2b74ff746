"""Command-line surface: build, verify, analyze, code, structure, and
colouring algebra (amalgamate / weaken / product).

Exit codes: 0 when the requested property holds (or the command just
produces output), 1 when a counterexample or violation is found, 2 on usage,
format, or capacity errors.  All output is deterministic for a fixed
command line, including parallel scans.
"""

import argparse
import os
import sys
from dataclasses import dataclass, field

from . import io
from .amalgam import DEFAULT_MAX_VERTICES, amalgamate, product, weaken
from .build import build_k4_unique, build_k5_unique, build_k8_odd, growth_report
from .codes import code_report, parity_matrix, verify_code_avoids
from .errors import CapacityError, ContractViolation, FormatError
from .structure import find_independent_set_b2, is_even_decomposable, unique_lower_bound_exponent
from .verify import scan

BUILDERS = {
    "k4-unique": (build_k4_unique, "k4"),
    "k5-unique": (build_k5_unique, "k5"),
    "k8-odd": (build_k8_odd, "k8"),
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple = ()
    output: str | None = None
    prop: str | None = None
    t: int | None = None
    mode: str | None = None
    count: int | None = None
    seed: int | None = None
    threads: int = 1
    force: bool = False
    target: int | None = None
    base: int = 2
    factors: tuple = ()
    steps: int | None = None
    csv: bool = False
    graph: str | None = None
    action: str | None = None
    max_vertices: int = DEFAULT_MAX_VERTICES
    check_image: str | None = None
    report: bool = False
    extra: dict = field(default_factory=dict)


def _load_colouring(path):
    with open(path) as fh:
        text = fh.read()
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body.startswith("meta"):
            return io.parse_amalgam(text).colouring
    return io.parse_egc(text)


def _cmd_build(cfg: RunConfig) -> int:
    builder, _ = BUILDERS[cfg.prop]
    c = builder(
        cfg.target,
        base=cfg.base,
        factors=cfg.factors or None,
        max_vertices=cfg.max_vertices,
    )
    io.save_egc(cfg.output, c)
    print(f"built n={c.n} colours={c.k} -> {cfg.output}")
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    c = _load_colouring(cfg.inputs[0])
    report = scan(
        c,
        cfg.t,
        cfg.prop,
        mode=cfg.mode,
        count=cfg.count,
        seed=cfg.seed,
        threads=cfg.threads,
        force=cfg.force,
    )
    sys.stdout.write(report.to_text())
    return 0 if report.passed else 1


def _cmd_growth(cfg: RunConfig) -> int:
    _, key = BUILDERS[cfg.prop]
    rows = growth_report(key, cfg.steps, base=cfg.base)
    if cfg.csv:
        print("step,n,colours,ratio")
        for k, row in enumerate(rows):
            print(f"{k},{row.n},{row.colours},{row.ratio:.6f}")
    else:
        print(f"growth {cfg.prop} steps={cfg.steps}")
        for k, row in enumerate(rows):
            print(f"step {k}: n={row.n} colours={row.colours} ratio={row.ratio:.6f}")
    return 0


def _cmd_code(cfg: RunConfig) -> int:
    c = _load_colouring(cfg.inputs[0])
    status = 0
    if cfg.report or not cfg.check_image:
        rep = code_report(parity_matrix(c))
        print(
            f"code n={rep.n} colours={rep.k} rank={rep.rank} "
            f"dimension={rep.dimension} density_log2={rep.density_log2}"
        )
    if cfg.check_image:
        h = io.load_graph(cfg.check_image)
        rep = verify_code_avoids(h, c, force=cfg.force)
        sys.stdout.write(rep.to_text())
        status = 0 if rep.passed else 1
    return status


def _cmd_structure(cfg: RunConfig) -> int:
    h = io.load_graph(cfg.graph)
    if cfg.action == "even-decomposable":
        chain = is_even_decomposable(h)
        if chain is None:
            print("not even-decomposable")
            return 1
        print("even-decomposable")
        for part in chain.chain:
            print("{" + " ".join(str(v) for v in part) + "}")
        return 0
    if cfg.action == "b2-set":
        ind = find_independent_set_b2(h)
        print("I = {" + " ".join(str(v) for v in ind) + "}")
        return 0
    exp = unique_lower_bound_exponent(h)
    print(f"exponent = {exp.numerator}/{exp.denominator}")
    return 0


def _cmd_amalgamate(cfg: RunConfig) -> int:
    c = _load_colouring(cfg.inputs[0])
    d = _load_colouring(cfg.inputs[1])
    a = amalgamate(c, d, max_vertices=cfg.max_vertices)
    with open(cfg.output, "w") as fh:
        fh.write(io.dumps_amalgam(a))
    print(f"amalgamated n={a.colouring.n} colours={a.colouring.k} -> {cfg.output}")
    return 0


def _cmd_weaken(cfg: RunConfig) -> int:
    c = _load_colouring(cfg.inputs[0])
    mapping = io.load_colour_map(cfg.inputs[1])
    w = weaken(c, mapping)
    io.save_egc(cfg.output, w)
    print(f"weakened colours {c.k} -> {w.k} -> {cfg.output}")
    return 0


def _cmd_product(cfg: RunConfig) -> int:
    c1 = _load_colouring(cfg.inputs[0])
    c2 = _load_colouring(cfg.inputs[1])
    pr = product(c1, c2)
    io.save_egc(cfg.output, pr)
    print(f"product n={pr.n} colours={pr.k} -> {cfg.output}")
    return 0


_HANDLERS = {
    "build": _cmd_build,
    "verify": _cmd_verify,
    "growth": _cmd_growth,
    "code": _cmd_code,
    "structure": _cmd_structure,
    "amalgamate": _cmd_amalgamate,
    "weaken": _cmd_weaken,
    "product": _cmd_product,
}


def run(cfg: RunConfig) -> int:
    """Dispatch a validated config; returns the process exit status."""
    handler = _HANDLERS[cfg.command]
    try:
        return handler(cfg)
    except ContractViolation as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return 1
    except (FormatError, CapacityError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _int_list(text: str) -> tuple:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="graphcodes", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a colouring and write it as EGC")
    b.add_argument("--target", type=int, required=True)
    b.add_argument("--property", required=True, choices=sorted(BUILDERS))
    b.add_argument("--base", type=int, default=2)
    b.add_argument("--factors", type=_int_list, default=())
    b.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    b.add_argument("--out", required=True)

    v = sub.add_parser("verify", help="scan a colouring for property failures")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--property", required=True, choices=["h-odd", "h-unique"])
    v.add_argument("--t", type=int, required=True)
    group = v.add_mutually_exclusive_group(required=True)
    group.add_argument("--exhaustive", action="store_true")
    group.add_argument("--sample", type=int, metavar="COUNT")
    v.add_argument("--seed", type=int)
    v.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    v.add_argument("--force", action="store_true")

    an = sub.add_parser("analyze", help="arithmetic analytics")
    ansub = an.add_subparsers(dest="analysis", required=True)
    g = ansub.add_parser("growth", help="palette growth table for a builder")
    g.add_argument("--property", required=True, choices=sorted(BUILDERS))
    g.add_argument("--steps", type=int, required=True)
    g.add_argument("--base", type=int, default=2)
    g.add_argument("--csv", action="store_true")

    co = sub.add_parser("code", help="linear graph code reports and image checks")
    co.add_argument("--in", dest="infile", required=True)
    co.add_argument("--report", action="store_true")
    co.add_argument("--check-image", metavar="GRAPH_FILE")
    co.add_argument("--force", action="store_true")

    st = sub.add_parser("structure", help="structural classifiers for a pattern graph")
    st.add_argument("--graph", required=True)
    stgroup = st.add_mutually_exclusive_group(required=True)
    stgroup.add_argument("--even-decomposable", action="store_true")
    stgroup.add_argument("--b2-set", action="store_true")
    stgroup.add_argument("--exponent", action="store_true")

    am = sub.add_parser("amalgamate", help="amalgamate two EGC colourings")
    am.add_argument("--in1", required=True)
    am.add_argument("--in2", required=True)
    am.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    am.add_argument("--out", required=True)

    w = sub.add_parser("weaken", help="post-compose a colouring with a colour map")
    w.add_argument("--in", dest="infile", required=True)
    w.add_argument("--map", dest="mapfile", required=True)
    w.add_argument("--out", required=True)

    pr = sub.add_parser("product", help="product of two colourings on the same vertex set")
    pr.add_argument("--in1", required=True)
    pr.add_argument("--in2", required=True)
    pr.add_argument("--out", required=True)

    return ap


def _config_from_args(ns: argparse.Namespace) -> RunConfig:
    if ns.command == "build":
        return RunConfig(
            command="build",
            target=ns.target,
            prop=ns.property,
            base=ns.base,
            factors=ns.factors,
            max_vertices=ns.max_vertices,
            output=ns.out,
        )
    if ns.command == "verify":
        if ns.sample is not None and ns.seed is None:
            raise FormatError("--sample requires --seed")
        return RunConfig(
            command="verify",
            inputs=(ns.infile,),
            prop=ns.property,
            t=ns.t,
            mode="exhaustive" if ns.exhaustive else "sample",
            count=ns.sample,
            seed=ns.seed,
            threads=ns.threads,
            force=ns.force,
        )
    if ns.command == "analyze":
        return RunConfig(command="growth", prop=ns.property, steps=ns.steps, base=ns.base, csv=ns.csv)
    if ns.command == "code":
        return RunConfig(
            command="code",
            inputs=(ns.infile,),
            report=ns.report,
            check_image=ns.check_image,
            force=ns.force,
        )
    if ns.command == "structure":
        action = "even-decomposable" if ns.even_decomposable else ("b2-set" if ns.b2_set else "exponent")
        return RunConfig(command="structure", graph=ns.graph, action=action)
    if ns.command == "amalgamate":
        return RunConfig(
            command="amalgamate",
            inputs=(ns.in1, ns.in2),
            max_vertices=ns.max_vertices,
            output=ns.out,
        )
    if ns.command == "weaken":
        return RunConfig(command="weaken", inputs=(ns.infile, ns.mapfile), output=ns.out)
    return RunConfig(command="product", inputs=(ns.in1, ns.in2), output=ns.out)


def main(argv=None) -> int:
    ns = _parser().parse_args(argv)
    try:
        cfg = _config_from_args(ns)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
