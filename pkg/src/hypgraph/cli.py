"""Command-line interface: generate / delta / embed / verify / experiment.

Exit codes: 0 success, 1 input or domain error (one-line diagnostic on
stderr), 2 verification failure (verify subcommand).  Data goes to stdout
or the requested output file; diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .graph import (EDGELIST_FORMAT_VERSION, MemoryCapExceeded, Timer,
                    all_pairs, read_edge_list, write_edge_list)
from .generators import (F_KINDS, G_KINDS, GENSPEC_FORMAT_VERSION, GenSpec,
                         generate, rt_vertex_count, spec_metadata)
from .hyperbolicity import EXACT_SCAN_DEFAULT_LIMIT, exact_delta, sampled_delta
from .experiments import (SWEEP_FORMAT_VERSION, run_sweep,
                          sweep_config_from_text, write_sweep_csv)
from .ringed import (addr_of, poincare_embed_table, verify_quasi_isometry,
                     verify_structural_lemmas)

_VERSION_LINE = (
    f"hypgraph {__version__} "
    f"(edge-list format {EDGELIST_FORMAT_VERSION}, "
    f"genspec format {GENSPEC_FORMAT_VERSION}, "
    f"sweep csv format {SWEEP_FORMAT_VERSION})"
)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hypgraph",
        description="Random-graph families and Gromov hyperbolicity measurements.")
    parser.add_argument("--version", action="version", version=_VERSION_LINE)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a generated graph as an edge list")
    p.add_argument("--family", required=True,
                   choices=["ksw", "rt", "rt_f", "rrt", "rbt"])
    p.add_argument("--n", type=int, default=0, help="vertex count (KSW)")
    p.add_argument("--k", type=int, default=0, help="level count (tree families)")
    p.add_argument("--d", type=int, default=1, help="grid dimension (KSW)")
    p.add_argument("--gamma", type=float, default=0.0, help="distance exponent (KSW)")
    p.add_argument("--g", dest="g_kind", choices=[g.lower() for g in G_KINDS],
                   help="leaf closeness law (RRT/RBT)")
    p.add_argument("--alpha", type=float, default=0.0, help="closeness decay (RRT/RBT)")
    p.add_argument("--f-kind", choices=[f.lower() for f in F_KINDS],
                   help="span bound kind (RT_F)")
    p.add_argument("--f-param", type=float, default=0.0, help="span bound parameter")
    p.add_argument("--no-wrap", action="store_true", help="grid without wrap-around")
    p.add_argument("--edges-per-node", type=int, default=1)
    p.add_argument("--independent", action="store_true",
                   help="draw long-range edges independently per pair")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--quiet", action="store_true")
    p.add_argument("--out", required=True, help="output edge-list path")

    p = sub.add_parser("delta", help="compute delta for an edge-list file")
    p.add_argument("graph", help="edge-list path")
    p.add_argument("--method", choices=["exact", "sample"], default="exact")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=EXACT_SCAN_DEFAULT_LIMIT,
                   help="refuse the exact O(n^4) scan above this size")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--quiet", action="store_true")

    p = sub.add_parser("embed", help="emit disk coordinates of a ringed tree")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default="-", help="CSV path (default stdout)")
    p.add_argument("--quiet", action="store_true")

    p = sub.add_parser("verify", help="run the ringed-tree verifier suites")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--quiet", action="store_true")

    p = sub.add_parser("experiment", help="run a parameter sweep from a config file")
    p.add_argument("--config", required=True, help="sweep config path")
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--quiet", action="store_true")
    return parser


def _cmd_generate(args):
    spec = GenSpec(
        family=args.family.upper(),
        n=args.n,
        k=args.k,
        d=args.d,
        gamma=args.gamma,
        g_kind=(args.g_kind or "").upper(),
        alpha=args.alpha,
        f_kind=(args.f_kind or "").upper(),
        f_param=args.f_param,
        wrap=not args.no_wrap,
        edges_per_node=args.edges_per_node,
        independent=args.independent,
        seed=args.seed,
    )
    g = generate(spec)
    write_edge_list(args.out, g, spec_metadata(spec))
    if not args.quiet:
        print(f"wrote {g.n} vertices, {g.edge_count} edges to {args.out}",
              file=sys.stderr)
    return 0


def _cmd_delta(args):
    g, _meta = read_edge_list(args.graph)
    with Timer() as t:
        m = all_pairs(g, threads=args.threads)
        if args.method == "exact":
            report = exact_delta(m, limit=args.max_n, threads=args.threads)
        else:
            report = sampled_delta(m, args.samples, seed=args.seed)
    fields = [
        f"two_delta={report.two_delta}",
        f"delta={report.two_delta / 2:g}",
        f"method={report.method}",
        "witness=" + ",".join(str(v) for v in report.witness),
        f"diameter={report.diameter}",
        f"runtime_ms={t.ms}",
    ]
    if report.method == "sampled":
        fields.insert(5, f"samples={report.samples}")
        fields.insert(6, f"seed={report.seed}")
    print(" ".join(fields))
    return 0


def _cmd_embed(args):
    if args.k < 1:
        raise ValueError("k must be >= 1")
    z = poincare_embed_table(args.k)
    lines = ["id,level,pos,re,im"]
    for vid in range(rt_vertex_count(args.k)):
        level, pos = addr_of(vid)
        lines.append(f"{vid},{level},{pos},"
                     f"{float(z[vid].real)!r},{float(z[vid].imag)!r}")
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    return 0


def _cmd_verify(args):
    if args.k < 2:
        raise ValueError("verify needs k >= 2")
    failed = False
    qi = verify_quasi_isometry(args.k, threads=args.threads)
    print(f"quasi_isometry k={qi.k} pairs={qi.pairs} violations={qi.violations} "
          f"worst_lower_margin={qi.worst_lower_margin:.6f} "
          f"worst_upper_margin={qi.worst_upper_margin:.6f} "
          f"{'PASS' if qi.passed else 'FAIL'}")
    failed |= not qi.passed
    rep = verify_structural_lemmas(args.k, samples=args.samples, seed=args.seed,
                                   threads=args.threads)
    for check in rep.checks:
        line = (f"{check.name} k={args.k} checked={check.checked} "
                f"violations={check.violations} {'PASS' if check.passed else 'FAIL'}")
        if not check.passed:
            line += f" worst={check.worst}"
        print(line)
        failed |= not check.passed
    return 2 if failed else 0


def _cmd_experiment(args):
    with open(args.config, "r", encoding="ascii") as fh:
        cfg = sweep_config_from_text(fh.read())
    if args.threads is not None:
        from dataclasses import replace

        cfg = replace(cfg, threads=args.threads)
    rows = run_sweep(cfg)
    write_sweep_csv(rows, args.out)
    skipped = sum(1 for r in rows if r.skipped)
    if not args.quiet:
        print(f"wrote {len(rows)} rows ({skipped} skipped) to {args.out}",
              file=sys.stderr)
        for r in rows:
            if r.skipped:
                print(f"skipped {r.spec}: {r.skip_reason}", file=sys.stderr)
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "delta": _cmd_delta,
    "embed": _cmd_embed,
    "verify": _cmd_verify,
    "experiment": _cmd_experiment,
}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage; that code is reserved here for
        # verification failures, so map usage errors to the input-error code
        code = exc.code if isinstance(exc.code, int) else 1
        return 0 if code == 0 else 1
    try:
        return _COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return 1
    except (ValueError, MemoryCapExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
