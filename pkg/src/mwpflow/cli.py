"""Command-line interface: ``mwpflow analyze FILE`` and ``mwpflow bench DIR``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .analysis import AnalysisError, ProgramAnalysis, render_bound
from .frontend import FrontendError, parse
from .jk_oracle import BudgetExceeded, OracleUnsupported, oracle_report
from .matrix import PolyMatrix, cm_has_infinity, cm_to_json, render_table

EXIT_BOUNDED = 0
EXIT_ERROR = 1
EXIT_UNBOUNDED = 2


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000, 3)


def analyze_source(
    source: str,
    fast: bool = False,
    witnesses: str = "first",
    dump_graph: bool = False,
    oracle_check: bool = False,
    timing: bool = True,
) -> dict:
    t0 = time.perf_counter()
    program = parse(source)
    parse_ms = _ms(t0)
    analysis = ProgramAnalysis(program)
    functions = []
    for name in analysis.order:
        t1 = time.perf_counter()
        res = analysis.result(name)
        derive_ms = _ms(t1)
        t2 = time.perf_counter()
        bound = res.bounded
        decide_ms = _ms(t2)
        entry: dict = {
            "name": name,
            "vars": list(res.vars),
            "domains": list(res.domains.sizes),
            "bound": bound,
            "matrix": res.matrix.to_json(),
        }
        t3 = time.perf_counter()
        if not fast and witnesses != "none":
            found = []
            for a in res.free_assignments():
                m = res.evaluate(a)
                if cm_has_infinity(m):  # the graph and the matrix disagree; never expected
                    raise AssertionError(f"assignment {a} of {name!r} is not infinity-free")
                found.append(
                    {
                        "assignment": list(a),
                        "matrix": cm_to_json(m),
                        "bounds": {v: render_bound([row[j] for row in m], res.vars) for j, v in enumerate(res.vars)},
                    }
                )
                if witnesses == "first":
                    break
            entry["witnesses"] = found
        evaluate_ms = _ms(t3)
        if dump_graph:
            entry["delta_graph"] = res.graph.to_json()
        if oracle_check:
            try:
                entry["oracle"] = oracle_report(analysis.decls[name])
            except (BudgetExceeded, OracleUnsupported) as exc:
                entry["oracle"] = {"error": str(exc)}
        if res.diagnostics:
            entry["diagnostics"] = list(res.diagnostics)
        summary = analysis.summaries.get(name)
        if summary is not None and summary.diagnostics:
            entry.setdefault("diagnostics", []).extend(summary.diagnostics)
        if timing:
            entry["timing_ms"] = {
                "parse": parse_ms,
                "derive": derive_ms,
                "decide": decide_ms,
                "evaluate": evaluate_ms,
            }
        functions.append(entry)
    return {"functions": functions}


def format_text(report: dict) -> str:
    out = []
    for f in report["functions"]:
        verdict = "bounded" if f["bound"] else "no polynomial bound (infinity in every derivation)"
        out.append(f"function {f['name']}: {verdict}")
        sizes = f["domains"]
        out.append(f"  choices: {len(sizes)}" + (f" (domain sizes {', '.join(map(str, sizes))})" if sizes else ""))
        for d in f.get("diagnostics", []):
            out.append(f"  note: {d}")
        table = str(PolyMatrix.from_json(f["matrix"]))
        out.append("  matrix:")
        out.extend("    " + line for line in table.splitlines())
        for w in f.get("witnesses", []):
            out.append(f"  witness assignment: {tuple(w['assignment'])}")
            rows = [[c for c in row] for row in w["matrix"]]
            out.extend("    " + line for line in render_table(f["vars"], rows).splitlines())
            for v, b in w["bounds"].items():
                out.append(f"    {v}' <= {b}")
        if "delta_graph" in f:
            out.append("  delta graph: " + json.dumps(f["delta_graph"], sort_keys=True))
        if "oracle" in f:
            out.append("  oracle check: " + json.dumps(f["oracle"], sort_keys=True))
        if "timing_ms" in f:
            t = f["timing_ms"]
            out.append("  time (ms): " + ", ".join(f"{k} {v}" for k, v in t.items()))
    return "\n".join(out) + "\n"


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        source = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        report = analyze_source(
            source,
            fast=args.fast,
            witnesses="none" if args.fast else args.witnesses,
            dump_graph=args.dump_delta_graph,
            oracle_check=args.oracle_check,
            timing=not args.no_timing,
        )
    except FrontendError as exc:
        print(f"{args.file}:{exc}", file=sys.stderr)
        return EXIT_ERROR
    except AnalysisError as exc:
        print(f"{args.file}: analysis error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(format_text(report))
    return EXIT_BOUNDED if all(f["bound"] for f in report["functions"]) else EXIT_UNBOUNDED


def bench_rows(directory: Path) -> list[dict]:
    rows = []
    for path in sorted(p for p in directory.iterdir() if p.is_file()):
        text = path.read_text(encoding="utf-8", errors="replace")
        loc = len(text.splitlines())
        t0 = time.perf_counter()
        try:
            results = ProgramAnalysis(parse(text)).run()
        except (FrontendError, AnalysisError) as exc:
            rows.append({"name": path.stem, "variables": "", "loc": loc, "time_ms": "", "bound": "error", "error": str(exc)})
            continue
        elapsed = _ms(t0)
        rows.append(
            {
                "name": path.stem,
                "variables": "+".join(str(len(r.vars)) for r in results.values()),
                "loc": loc,
                "time_ms": elapsed,
                "bound": "yes" if all(r.bounded for r in results.values()) else "inf",
            }
        )
    return rows


BENCH_COLUMNS = ["name", "variables", "loc", "time_ms", "bound"]


def format_bench(rows: list[dict], fmt: str) -> str:
    if fmt == "markdown":
        lines = ["| " + " | ".join(BENCH_COLUMNS) + " |", "|" + "---|" * len(BENCH_COLUMNS)]
        for r in rows:
            lines.append("| " + " | ".join(str(r[c]) for c in BENCH_COLUMNS) + " |")
        return "\n".join(lines) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_COLUMNS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def cmd_bench(args: argparse.Namespace) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        print(f"error: {args.dir} is not a directory", file=sys.stderr)
        return EXIT_ERROR
    rows = bench_rows(directory)
    sys.stdout.write(format_bench(rows, args.format))
    for r in rows:
        if r["bound"] == "error":
            print(f"{r['name']}: {r['error']}", file=sys.stderr)
    return EXIT_BOUNDED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mwpflow", description="mwp-flow bound analysis for a small C-like language")
    sub = ap.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="analyze one source file")
    an.add_argument("file")
    an.add_argument("--fast", action="store_true", help="decide boundedness only, skip evaluation")
    an.add_argument("--format", choices=["text", "json"], default="text")
    an.add_argument("--witnesses", choices=["all", "first", "none"], default="first")
    an.add_argument("--dump-delta-graph", action="store_true")
    an.add_argument("--oracle-check", action="store_true", help="compare against exhaustive enumeration")
    an.add_argument("--no-timing", action="store_true", help="omit timings, for byte-stable output")
    an.set_defaults(func=cmd_analyze)

    be = sub.add_parser("bench", help="analyze every file in a directory")
    be.add_argument("dir")
    be.add_argument("--format", choices=["csv", "markdown"], default="csv")
    be.set_defaults(func=cmd_bench)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
