"""Command-line front end: ``cusptheta <subcommand> ...``."""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Callable, Sequence, TextIO

from .chars import char_table, hook_degree, mn_value, partitions, verify_orthogonality
from .cuspidal.cartan import TYPES, cartan_det, center_points
from .cuspidal.dataset import DatasetError, load_dataset
from .cuspidal.deduce import RULES, DeductionError, deduce_theta, distinct_check, type_prime_pairs
from .cyclo import format_value, render_literal
from .grp import CATALOG, Cyclic, GroupError, cycle_notation, parse_group
from .tmat import check_spectrum, t_spectrum

TABLE_GROUPS = ("Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "D8", "S3", "S4", "S5", "S3xZ2")


@dataclass
class Report:
    command: str
    header: tuple[str, ...]
    rows: list[tuple[str, ...]] = field(default_factory=list)
    statuses: list[str] = field(default_factory=list)
    details: list[list[str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, cells: Sequence[str], status: str = "", details: Sequence[str] = ()):
        self.rows.append(tuple(cells))
        self.statuses.append(status)
        self.details.append(list(details))

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "consistent": 0}
        for s in self.statuses:
            if s in out:
                out[s] += 1
        return out

    @property
    def exit_status(self) -> int:
        return 1 if self.counts()["fail"] else 0


def emit_report(report: Report, fmt: str = "human") -> str:
    if fmt == "tsv":
        lines = ["\t".join(report.header)]
        lines += ["\t".join(r) for r in report.rows]
        return "\n".join(lines) + "\n"
    widths = [len(h) for h in report.header]
    for r in report.rows:
        widths = [max(w, len(c)) for w, c in zip(widths, r)]

    def fmt_row(cells):
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    lines = [f"# {report.command}", fmt_row(report.header)]
    for r, det in zip(report.rows, report.details):
        lines.append(fmt_row(r))
        lines += [f"    {d}" for d in det]
    lines += report.notes
    if any(report.statuses):
        c = report.counts()
        lines.append(f"summary: {c['pass']} pass, {c['consistent']} consistent, {c['fail']} fail")
    return "\n".join(lines) + "\n"


def _lits(values) -> str:
    return "{" + ",".join(render_literal(v) for v in values) + "}"


def _record_status(verdict: str) -> str:
    return "consistent" if verdict == "consistent" else "pass"


def _deduction_report(command: str, records, disabled=()) -> Report:
    rep = Report(command, ("row", "class", "phi", "expected", "deduced", "verdict"))
    for r in records:
        base = (str(r.row), r.class_label, r.phi_engine, render_literal(r.theta_expected))
        try:
            t = deduce_theta(r, disabled)
        except DeductionError as exc:
            rep.add(base + ("-", "FAIL"), "fail", [str(exc)])
            continue
        det = [f"rules: {t.rules}"] + [f"{s.rule}: {s.effect}" for s in t.steps]
        rep.add(base + (_lits(t.theta_set), t.verdict), _record_status(t.verdict), det)
    return rep


def _parse_rows(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return int(a), int(b)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None


def _group_arg(text: str):
    try:
        return parse_group(text)
    except GroupError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# -- subcommands ------------------------------------------------------------

def cmd_theta(args) -> Report:
    records = [r for r in load_dataset(args.dataset)
               if r.group_type == args.group and r.p == args.p and r.class_label == args.cls
               and (args.phi is None or args.phi in (r.phi_engine, r.phi_paper))]
    if not records:
        raise LookupError(f"no record for {args.group}, p={args.p}, class {args.cls}")
    return _deduction_report(f"theta {args.group} p={args.p} {args.cls}", records)


def cmd_deduce(args) -> Report:
    records = [r for r in load_dataset(args.dataset) if r.row == args.row]
    if not records:
        raise LookupError(f"no records for table row {args.row}")
    return _deduction_report(f"deduce row {args.row}", records)


def cmd_verify(args) -> Report:
    records = load_dataset(args.dataset)
    label = "all"
    if args.rows is not None:
        lo, hi = args.rows
        records = [r for r in records if lo <= r.row <= hi]
        label = f"rows {lo}..{hi}"
    if args.disable:
        label += " without " + ",".join(args.disable)
    return _deduction_report(f"verify {label}", records, args.disable)


def cmd_distinct(args) -> Report:
    records = load_dataset(args.dataset)
    if args.group is not None or args.p is not None:
        if args.group is None or args.p is None:
            raise LookupError("--group and --p must be given together")
        pairs = [(args.group, args.p)]
    else:
        pairs = type_prime_pairs(records)
    rep = Report("distinct", ("group", "p", "row_a", "class_a", "row_b", "class_b", "theta"))
    clean = []
    for g, p in pairs:
        hits = distinct_check(records, g, p)
        if not hits:
            clean.append(f"{g}/p{p}")
        for a, b in hits:
            rep.add((g, str(p), str(a.row), a.class_label, str(b.row), b.class_label,
                     render_literal(a.theta_expected)))
    rep.notes.append(f"collisions: {len(rep.rows)}")
    rep.notes.append(f"collision-free: {' '.join(clean) if clean else '-'}")
    return rep


def cmd_tmatrix(args) -> Report:
    spec = t_spectrum(args.group)
    rep = Report(f"tmatrix {args.group}", ("class", "centralizer", "phi", "dim", "theta"))
    for obj, e in spec.entries:
        rep.add((cycle_notation(obj.x), str(obj.centralizer_label), obj.phi,
                 str(obj.dimension), render_literal(e)))
    rep.notes.append(f"objects: {len(spec.entries)}; sum of dim^2: {spec.dimension_square_sum}")
    return rep


def cmd_chartable(args) -> Report:
    T = char_table(args.group)
    rep = Report(f"chartable {args.group}",
                 ("char",) + tuple(cycle_notation(c.representative) for c in T.classes))
    rep.add(("size",) + tuple(str(c.size) for c in T.classes))
    for label, row in zip(T.labels, T.values):
        rep.add((label,) + tuple(format_value(v) for v in row))
    return rep


def _selftests() -> list[tuple[str, Callable[[], bool]]]:
    def orth():
        return all(verify_orthogonality(char_table(g)).ok for g in TABLE_GROUPS)

    def mn_hooks():
        return all(mn_value(lam, (1,) * n) == hook_degree(lam)
                   for n in range(1, 7) for lam in partitions(n))

    def spectra():
        return all(not check_spectrum(t_spectrum(g)) for g in ("S3", "S4", "S5", "D8", "S3xZ2"))

    def cartan():
        want = {"G2": 1, "F4": 1, "E6": 3, "E7": 2, "E8": 1}
        return all(cartan_det(t) == want[t] for t in TYPES) and (
            center_points("E6", 2), center_points("E6", 3),
            center_points("E7", 2), center_points("E7", 3)) == (3, 1, 1, 2)

    def table():
        return all(deduce_theta(r) for r in load_dataset())

    def catalog():
        from .grp import build_group, recognize
        return all(recognize(build_group(s)) == s for s in CATALOG if not isinstance(s, Cyclic) or s.n <= 12)

    return [("orthogonality", orth), ("mn-vs-hooks", mn_hooks), ("t-spectrum", spectra),
            ("cartan", cartan), ("recognition", catalog), ("dataset", table)]


def cmd_selftest(args) -> Report:
    rep = Report("selftest", ("suite", "result"))
    for name, check in _selftests():
        try:
            ok = bool(check())
        except Exception as exc:  # report, don't crash
            rep.add((name, f"FAIL ({exc})"), "fail")
            continue
        rep.add((name, "ok" if ok else "FAIL"), "pass" if ok else "fail")
    return rep


# -- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "tsv"), default="human")
    common.add_argument("--dataset", default=None,
                        help="dataset TSV (default: $THETA_DATASET or the shipped table)")

    parser = argparse.ArgumentParser(prog="cusptheta", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theta", parents=[common], help="theta for one cuspidal pair")
    p.add_argument("--group", required=True, choices=TYPES)
    p.add_argument("--p", required=True, type=int)
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--phi", default=None)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("deduce", parents=[common], help="deduction traces for a table row")
    p.add_argument("--row", required=True, type=int)
    p.set_defaults(func=cmd_deduce)

    p = sub.add_parser("verify", parents=[common], help="check the dataset")
    sel = p.add_mutually_exclusive_group()
    sel.add_argument("--all", action="store_true")
    sel.add_argument("--rows", type=_parse_rows, default=None, metavar="A..B")
    p.add_argument("--disable", action="append", choices=RULES, default=[],
                   help="skip a rule (ablation)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("distinct", parents=[common], help="equal thetas per (type, p)")
    p.add_argument("--all", action="store_true")
    p.add_argument("--group", choices=TYPES, default=None)
    p.add_argument("--p", type=int, default=None)
    p.set_defaults(func=cmd_distinct)

    p = sub.add_parser("tmatrix", parents=[common], help="T-spectrum of a finite group")
    p.add_argument("--group", required=True, type=_group_arg)
    p.set_defaults(func=cmd_tmatrix)

    p = sub.add_parser("chartable", parents=[common], help="character table")
    p.add_argument("--group", required=True, type=_group_arg)
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("selftest", parents=[common], help="run the invariant suites")
    p.set_defaults(func=cmd_selftest)
    return parser


def run_cli(argv: Sequence[str] | None = None, out: TextIO | None = None,
            err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.func(args)
    except (DatasetError, LookupError, GroupError, ValueError, OSError) as exc:
        err.write(f"cusptheta: error: {exc}\n")
        return 2
    out.write(emit_report(report, args.format))
    return report.exit_status


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
