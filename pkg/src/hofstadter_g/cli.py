"""Command-line front end: ``hofg {seq,freq,tree,word,verify,kfold,bench}``.

Exit status: 0 on success, 1 when a verification or cross-check fails,
2 on usage errors (bad flags, out-of-range sizes).
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field

from . import methods, recurrence, tree, verify, words
from .errors import EvaluationError, InsufficientHorizonError, RangeError, ValidationError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FORMATS = ("table", "csv", "bfile", "dot")
_ALLOWED_FORMATS = {
    "seq": {"table", "csv", "bfile"},
    "freq": {"table", "csv", "bfile"},
    "kfold": {"table", "csv", "bfile"},
    "tree": {"table", "dot"},
    "bench": {"table", "csv"},
    "word": {"table"},
    "verify": {"table"},
}

SPEC_HELP = """\
factorization spec, fields separated by ';' (all optional):
  seeds=2,1,2      seed words w_1..w_s, comma separated
  rule=2,1         w_n = w_{n-2} w_{n-1}; rule=a,b means w_{n-a} w_{n-b}
  scheme=...       product over the w_n: 'squares-from-3' (w1 w2 w3^2 w4^2 ...),
                   'plain-from-3' (w3 w4 w5 ...), or a list such as
                   '1,2,3..^2' where 'i^p' is w_i^p and a final 'i..^p'
                   repeats w_i^p w_{i+1}^p ... forever
a bare scheme keyword is accepted, e.g. --spec plain-from-3
"""


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    horizon: int = 10_000
    method: str = "recursion"
    k: int = 1
    fmt: str = "table"
    out: str | None = None
    extra: dict = field(default_factory=dict)

    def validate(self) -> None:
        if self.fmt not in _ALLOWED_FORMATS[self.command]:
            raise UsageError(f"--format {self.fmt} is not valid for {self.command}")
        if self.horizon < 1:
            raise UsageError(f"-n must be >= 1, got {self.horizon}")
        if self.command == "seq" and self.method in ("tree", "all"):
            if self.horizon + 1 > tree.MAX_LABEL:
                raise UsageError(f"tree method supports n < {tree.MAX_LABEL}")
        if self.k < 1:
            raise UsageError(f"-k must be >= 1, got {self.k}")


def _format_rows(header: list[str], rows, fmt: str) -> str:
    if fmt == "bfile":
        return "".join(f"{r[0]} {r[1]}\n" for r in rows)
    if fmt == "csv":
        lines = [",".join(header)] + [",".join(map(str, r)) for r in rows]
        return "\n".join(lines) + "\n"
    rows = [list(map(str, r)) for r in rows]
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(header)]
    lines = [" ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += [" ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def _sequence_text(values: list[int], fmt: str) -> str:
    return _format_rows(["n", "G(n)"], enumerate(values, start=1), fmt)


def cmd_seq(cfg: RunConfig, out, err) -> int:
    if cfg.method != "all":
        out.write(_sequence_text(methods.sequence(cfg.method, cfg.horizon), cfg.fmt))
        return EXIT_OK
    columns = {m: methods.sequence(m, cfg.horizon) for m in methods.METHODS}
    bad = methods.first_disagreement(columns)
    if cfg.fmt == "bfile":
        out.write(_sequence_text(columns["recursion"], "bfile"))
    else:
        rows = [(n, *vals) for n, vals in enumerate(zip(*columns.values()), start=1)]
        out.write(_format_rows(["n", *columns], rows, cfg.fmt))
    if bad is not None:
        vals = ", ".join(f"{m} {columns[m][bad - 1]}" for m in columns)
        err.write(f"methods disagree first at n={bad}: {vals}\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_freq(cfg: RunConfig, out, err) -> int:
    length = cfg.horizon
    fixed = cfg.extra.get("table_horizon")
    if fixed:
        table = recurrence.eval_g(fixed)
    else:
        table = recurrence.table_for_frequencies(length)
    freq = recurrence.frequency(table)
    if length > freq.complete_upto:
        err.write(
            f"warning: horizon {table.horizon} only completes f(1..{freq.complete_upto}); "
            f"emitting {freq.complete_upto} of {length} requested terms\n"
        )
        length = freq.complete_upto
    rows = [(m, freq[m]) for m in range(1, length + 1)]
    out.write(_format_rows(["n", "f(n)"], rows, cfg.fmt))
    return EXIT_OK


def cmd_tree(cfg: RunConfig, out, err) -> int:
    height = cfg.extra["height"]
    cap = tree.EXPLICIT_CAP if cfg.fmt == "dot" else tree.RENDER_CAP
    if height > cap:
        raise UsageError(f"height {height} exceeds the cap {cap} for --format {cfg.fmt}")
    built = tree.build_explicit(height)
    out.write(tree.to_dot(built) if cfg.fmt == "dot" else tree.render_ascii(built))
    return EXIT_OK


def cmd_word(cfg: RunConfig, out, err) -> int:
    if cfg.extra.get("w") is not None:
        out.write(words.build_w(cfg.extra["w"]) + "\n")
        return EXIT_OK
    if cfg.extra.get("level") is not None:
        out.write(words.build_level_word(cfg.extra["level"]) + "\n")
        return EXIT_OK
    spec = words.parse_spec(cfg.extra.get("spec") or "")
    freq = recurrence.frequency(recurrence.table_for_frequencies(cfg.horizon))
    report = words.verify_factorization(spec, words.frequency_word(cfg.horizon, freq))
    out.write(report.summary() + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify(cfg: RunConfig, out, err) -> int:
    results = verify.run_suite(cfg.extra.get("selected"), cfg.horizon, cfg.extra["height"])
    for r in results:
        out.write(r.line() + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def kfold_report(table: recurrence.SequenceTable, spec: words.FactorizationSpec | None):
    """Observations for a k-fold run: (lines, anomaly flag)."""
    lines = [f"k={table.k} horizon={table.horizon}"]
    anomaly = False
    if table.slow:
        lines.append("slow-growing: yes")
    else:
        lines.append(f"slow-growing: no (first jump at n={table.first_jump})")
        anomaly = True
    freq = recurrence.frequency(table)
    counts = freq.complete()
    alphabet = sorted(set(counts))
    lines.append(f"frequency alphabet (f complete to {freq.complete_upto}): {alphabet}")
    if set(alphabet) - {1, 2}:
        anomaly = True
    if spec is not None:
        target = []
        for c in counts:
            if c not in (1, 2):
                break
            target.append(str(c))
        if len(target) < len(counts):
            lines.append(f"factorization target cut at symbol {len(target) + 1}: count outside {{1, 2}}")
        if not target:
            lines.append("factorization: no usable target")
            return lines, True
        report = words.verify_factorization(spec, "".join(target))
        lines.append(f"factorization: {report.summary()}")
        anomaly = anomaly or not report.ok
    return lines, anomaly


def cmd_kfold(cfg: RunConfig, out, err) -> int:
    spec_text = cfg.extra.get("spec")
    spec = words.parse_spec(spec_text) if spec_text is not None else None
    strict = cfg.extra.get("strict", False)
    try:
        table = recurrence.eval_kfold(recurrence.KFoldSpec(cfg.k, cfg.horizon))
    except EvaluationError as exc:
        err.write(f"k={cfg.k}: {exc}\n")
        return EXIT_FAIL if strict else EXIT_OK
    out.write(_sequence_text(table.terms(), cfg.fmt))
    lines, anomaly = kfold_report(table, spec)
    for line in lines:
        err.write(line + "\n")
    return EXIT_FAIL if strict and anomaly else EXIT_OK


def cmd_bench(cfg: RunConfig, out, err) -> int:
    repeat = cfg.extra.get("repeat", 1)
    rows = []
    for m in methods.METHODS:
        best = None
        for _ in range(repeat):
            start = time.perf_counter_ns()
            methods.sequence(m, cfg.horizon)
            elapsed = time.perf_counter_ns() - start
            best = elapsed if best is None else min(best, elapsed)
        rows.append((m, cfg.horizon, best))
    out.write(_format_rows(["method", "n", "nanos"], rows, cfg.fmt))
    return EXIT_OK


COMMANDS = {
    "seq": cmd_seq,
    "freq": cmd_freq,
    "tree": cmd_tree,
    "word": cmd_word,
    "verify": cmd_verify,
    "kfold": cmd_kfold,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hofg", description="Hofstadter's G-sequence: four evaluators, its tree, and its words."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, horizon, formats=FORMATS, default_fmt="table"):
        p.add_argument("-n", "--horizon", type=int, default=horizon)
        p.add_argument("--format", dest="fmt", choices=formats, default=default_fmt)
        p.add_argument("--out", help="write output to PATH instead of stdout")

    p = sub.add_parser("seq", help="print G(1..N)")
    common(p, 10_000)
    p.add_argument("--method", choices=(*methods.METHODS, "all"), default="recursion")

    p = sub.add_parser("freq", help="print the frequency sequence f(1..N)")
    common(p, 10_000)
    p.add_argument("--horizon-table", dest="table_horizon", type=int,
                   help="evaluate G only this far instead of as far as needed")

    # -h is the height here, as in `hofg tree -h 4`
    p = sub.add_parser("tree", help="draw the labelled tree", add_help=False)
    p.add_argument("--help", action="help")
    p.add_argument("-h", "--height", type=int, default=4)
    p.add_argument("--format", dest="fmt", choices=FORMATS, default="table")
    p.add_argument("--out")

    p = sub.add_parser("word", help="print w_n or W_h, or check a factorization",
                       formatter_class=argparse.RawDescriptionHelpFormatter, epilog=SPEC_HELP)
    common(p, 10_000)
    p.add_argument("--w", type=int, help="print w_N")
    p.add_argument("--level", type=int, help="print the level word W_H")
    p.add_argument("--spec", help="factorization to check against the first N symbols")

    p = sub.add_parser("verify", help="run the property suite")
    common(p, verify.DEFAULT_HORIZON)
    p.add_argument("--height", type=int, default=verify.DEFAULT_HEIGHT,
                   help="explicit tree height for structural checks")
    for name in verify.PROPERTIES:
        flag = {"cor1": "corollary1", "cor2": "corollary2"}.get(name, name)
        p.add_argument(f"--{flag}", dest="selected", action="append_const", const=name)

    p = sub.add_parser("kfold", help="explore G(n) = n - G(G^k(n-1))",
                       formatter_class=argparse.RawDescriptionHelpFormatter, epilog=SPEC_HELP)
    common(p, 10_000)
    p.add_argument("-k", type=int, default=1)
    p.add_argument("--spec", help="candidate factorization of the frequency word")
    p.add_argument("--strict", action="store_true", help="treat anomalies as failures")

    p = sub.add_parser("bench", help="time each method over 1..N")
    common(p, 1_000_000)
    p.add_argument("--repeat", type=int, default=1)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    known = {"command", "horizon", "method", "k", "fmt", "out"}
    extra = {k: v for k, v in vars(args).items() if k not in known}
    return RunConfig(
        command=args.command,
        horizon=getattr(args, "horizon", 1),
        method=getattr(args, "method", "recursion"),
        k=getattr(args, "k", 1),
        fmt=args.fmt,
        out=args.out,
        extra=extra,
    )


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    cfg.validate()
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            return COMMANDS[cfg.command](cfg, fh, err)
    return COMMANDS[cfg.command](cfg, out, err)


def main(argv=None, out=None, err=None) -> int:
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return run(_config(args), out, err)
    except (UsageError, RangeError, ValidationError, InsufficientHorizonError) as exc:
        err.write(f"hofg {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
