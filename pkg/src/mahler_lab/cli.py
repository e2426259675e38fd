"""``mahler-lab`` command line.

Exit codes: 0 success, 2 invalid input, 3 pipeline error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import catalog
from .errors import InvalidInput, MahlerLabError, UnknownEntry
from .exact import to_fraction
from .independence import verdict_report
from .pipeline import RunConfig, analyze, render_text
from .regular import growth_constants, octave_profile, terms, weighted_sum_trace

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PIPELINE = 3

FIGURE_LOW = 2**15
FIGURE_HIGH = 2**16

PLOT_SCRIPT = '''"""Plot a mahler-lab CSV: second column against the first."""
import csv
import sys

import matplotlib.pyplot as plt


def main(path, out=None):
    with open(path) as fh:
        rows = [r for r in csv.reader(line for line in fh if not line.startswith("#"))]
    header, data = rows[0], rows[1:]
    xs = [float(r[0]) for r in data]
    ys = [float(r[1]) for r in data]
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.plot(xs, ys, lw=0.6)
    ax.set_xlabel(header[0])
    ax.set_ylabel(header[1])
    fig.tight_layout()
    fig.savefig(out or path.rsplit(".", 1)[0] + ".png", dpi=150)


if __name__ == "__main__":
    main(*sys.argv[1:])
'''


def _z0(text: str):
    try:
        z = to_fraction(text)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"z0 must be a rational P/Q, got {text!r}") from exc
    if not 0 < z < 1:
        raise argparse.ArgumentTypeError("z0 must lie in (0, 1)")
    return z


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mahler-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--precision", type=_positive, default=None,
                       help="working decimal digits (default 60, or $MAHLER_LAB_PRECISION)")
        p.add_argument("--depth", type=_positive, default=40, help="radial sampling depth")
        p.add_argument("--z0", type=_z0, default=_z0("1/2"), help="radial start point P/Q")
        p.add_argument("--r-max", type=_positive, default=16, help="partial-sum exponent bound")
        p.add_argument("--k", type=int, default=None, help="base for cyclotomic:<p> inputs")
        p.add_argument("--out", default=None, help="directory for output artifacts")

    pa = sub.add_parser("analyze", help="analyze a catalog entry or a JSON file")
    pa.add_argument("target")
    pa.add_argument("--json", action="store_true", help="print the JSON report instead of text")
    common(pa)

    pi = sub.add_parser("independence", help="algebraic-independence verdict for several inputs")
    pi.add_argument("targets", nargs="+")
    pi.add_argument("--H", type=_positive, default=50, help="relation height bound")
    common(pi)

    pf = sub.add_parser("figure", help="write figure data as CSV plus a plot script")
    pf.add_argument("name", choices=["stern-values", "stern-weighted"])
    pf.add_argument("--out", required=True)

    sub.add_parser("list", help="list catalog entries")
    return parser


def _config(args) -> RunConfig:
    precision = args.precision if getattr(args, "precision", None) else RunConfig.default_precision()
    return RunConfig(
        precision=precision,
        depth=getattr(args, "depth", 40),
        z0=getattr(args, "z0", RunConfig.z0),
        r_max=getattr(args, "r_max", 16),
        H=getattr(args, "H", 50),
        out=args.out,
    )


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _write(out_dir: str, name: str, text: str) -> str:
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, name)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return path


def cmd_analyze(args, out=None) -> int:
    out = out or sys.stdout
    config = _config(args)
    a = analyze(args.target, config, args.k)
    report = {"config": config.to_json(), "analysis": a.to_json()}
    text = render_text(a, config)
    if config.out:
        _write(config.out, f"{_slug(a.name)}.json", _dump(report) + "\n")
        _write(config.out, f"{_slug(a.name)}.txt", text + "\n")
    print(_dump(report) if args.json else text, file=out)
    return EXIT_PIPELINE if a.errors else EXIT_OK


def cmd_independence(args, out=None) -> int:
    out = out or sys.stdout
    config = _config(args)
    analyses = [analyze(t, config, args.k) for t in args.targets]
    failed = [e for a in analyses for e in a.errors]
    report = verdict_report([a.to_function() for a in analyses], config.H, config.precision)
    payload = report.to_json()
    payload["config"] = config.to_json()
    if failed:
        payload["stage_errors"] = failed
    if config.out:
        _write(config.out, "verdict.json", _dump(payload) + "\n")
    print(_dump(payload), file=out)
    return EXIT_OK


def _fmt(x) -> str:
    return str(x) if isinstance(x, int) else "%.17g" % x


def _csv(config_lines: Sequence[str], header: Sequence[str], rows) -> str:
    lines = [f"# {line}" for line in config_lines]
    lines.append(",".join(header))
    lines.extend(",".join(_fmt(x) for x in row) for row in rows)
    return "\n".join(lines) + "\n"


def figure_data(name: str):
    """(header, rows, summary) for a figure, independent of any output path."""
    rep = catalog.get("stern").representation
    if name == "stern-values":
        vals = terms(rep, FIGURE_HIGH + 1)
        rows = [(n, vals[n]) for n in range(FIGURE_LOW, FIGURE_HIGH + 1)]
        summary = {"rows": len(rows), "max": max(v for _, v in rows)}
        return ["n", "s(n)"], rows, summary
    growth = growth_constants(rep)
    trace = weighted_sum_trace(rep, FIGURE_LOW // 2, FIGURE_HIGH, growth)
    start = FIGURE_LOW - FIGURE_LOW // 2
    rows = list(zip(trace.Ns[start:], trace.values[start:]))
    lower = octave_profile(trace, FIGURE_LOW // 2, 2)
    upper = octave_profile(trace, FIGURE_LOW, 2)
    drift = max(abs(a - b) / b for a, b in zip(lower, upper))
    ws = [w for _, w in rows]
    summary = {
        "rows": len(rows),
        "min": min(ws),
        "max": max(ws),
        "lower_bound": 1 / float(growth.alpha),
        "upper_bound": float(growth.alpha),
        "octave_drift": drift,
        "exponent": growth.exponent,
    }
    return ["N", "weighted_sum"], rows, summary


def cmd_figure(args, out=None) -> int:
    out = out or sys.stdout
    config = _config(args)
    header, rows, summary = figure_data(args.name)
    meta = config.header_lines() + [f"figure={args.name}"]
    csv_path = _write(args.out, f"{args.name}.csv", _csv(meta, header, rows))
    _write(args.out, "plot_csv.py", PLOT_SCRIPT)
    _write(args.out, f"{args.name}.summary.json", _dump(summary) + "\n")
    print(f"wrote {csv_path} ({len(rows)} rows)", file=out)
    for key in sorted(summary):
        print(f"  {key}: {_fmt(summary[key])}", file=out)
    return EXIT_OK


def cmd_list(args, out=None) -> int:
    out = out or sys.stdout
    for name in catalog.names():
        print(name, file=out)
    return EXIT_OK


def _slug(name: str) -> str:
    base = os.path.basename(name)
    return "".join(c if c.isalnum() or c in "-_" else "_" for c in base.rsplit(".json", 1)[0])


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "analyze": cmd_analyze,
        "independence": cmd_independence,
        "figure": cmd_figure,
        "list": cmd_list,
    }
    try:
        return handlers[args.command](args)
    except (InvalidInput, UnknownEntry, ValueError) as exc:
        if isinstance(exc, UnknownEntry):
            msg = f"unknown catalog entry {exc}; known: {', '.join(catalog.names())}"
        else:
            msg = str(exc)
        print(f"mahler-lab: invalid input: {msg}", file=sys.stderr)
        return EXIT_INVALID
    except MahlerLabError as exc:
        print(f"mahler-lab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PIPELINE


if __name__ == "__main__":
    sys.exit(main())
