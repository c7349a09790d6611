"""Loading and validation of the cuspidal local system table."""
from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field, replace
from importlib import resources
from math import gcd
from pathlib import Path
from typing import Iterable, TextIO, Union

from ..chars import char_table
from ..cyclo import CONDUCTOR, CycNum, LiteralError, cyc_galois, is_root_of_unity, parse_literal
from ..grp import GroupError, GroupSpec, Perm, build_group, center, cycle_notation, parse_cycles, parse_group
from .cartan import TYPES

COLUMNS = ("row", "group", "p", "class", "regular", "A", "phi_paper", "phi_engine",
           "twist", "theta", "derivation", "orbit", "aux", "external", "note")
DERIVATIONS = ("complete", "consistency-only")
ENV_VAR = "THETA_DATASET"


class DatasetError(ValueError):
    def __init__(self, msg: str, line: int | None = None, field_name: str | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field_name is not None:
            where.append(f"field {field_name!r}")
        super().__init__(f"{', '.join(where)}: {msg}" if where else msg)
        self.line = line
        self.field_name = field_name


@dataclass(frozen=True)
class AuxConstraint:
    phi: str
    required: CycNum
    source: str


@dataclass(frozen=True)
class ExternalFact:
    kind: str  # only "nontrivial" is defined
    citation: str


@dataclass(frozen=True)
class CuspidalRecord:
    row: int
    group_type: str
    p: int
    class_label: str
    regular: bool
    A: GroupSpec
    phi_paper: str
    phi_engine: str
    central_twist: Perm
    theta_expected: CycNum
    derivation_status: str
    galois_orbit: str | None = None
    aux_constraints: tuple[AuxConstraint, ...] = ()
    external_fact: ExternalFact | None = None
    note: str = ""
    line: int | None = None
    # theta values of every record in the same Galois orbit (self included)
    orbit_thetas: tuple[CycNum, ...] = field(default=(), compare=False)

    @property
    def name(self) -> str:
        return f"row {self.row} ({self.group_type}, p={self.p}, {self.class_label}, {self.phi_engine})"


def _parse_aux(text: str, A: GroupSpec, line: int) -> tuple[AuxConstraint, ...]:
    if text in ("", "-"):
        return ()
    out = []
    labels = char_table(A).labels
    for item in text.split(";"):
        if "=" not in item or "@" not in item:
            raise DatasetError(f"aux item {item!r} is not label=lit@source", line, "aux")
        label, rest = item.split("=", 1)
        lit, source = rest.split("@", 1)
        label = label.strip()
        if label not in labels:
            raise DatasetError(f"{label!r} is not a character of {A}", line, "aux")
        try:
            req = parse_literal(lit.strip())
        except LiteralError as exc:
            raise DatasetError(str(exc), line, "aux") from None
        out.append(AuxConstraint(label, req, source.strip()))
    return tuple(out)


def _parse_external(text: str, line: int) -> ExternalFact | None:
    if text in ("", "-"):
        return None
    kind, sep, citation = text.partition("@")
    if kind != "nontrivial" or not sep or not citation.strip():
        raise DatasetError(f"expected 'nontrivial@<citation>', got {text!r}", line, "external")
    return ExternalFact(kind, citation.strip())


def _parse_row(cells: dict[str, str], line: int) -> CuspidalRecord:
    def get(name):
        return cells[name].strip()

    def as_int(name):
        try:
            return int(get(name))
        except ValueError:
            raise DatasetError(f"not an integer: {get(name)!r}", line, name) from None

    row = as_int("row")
    if not 1 <= row <= 24:
        raise DatasetError(f"row {row} out of range 1..24", line, "row")
    kind = get("group")
    if kind not in TYPES:
        raise DatasetError(f"unknown group type {kind!r}", line, "group")
    p = as_int("p")
    if p not in (2, 3, 5):
        raise DatasetError(f"{p} is not a bad prime", line, "p")
    regular = get("regular")
    if regular not in ("yes", "no"):
        raise DatasetError("expected yes or no", line, "regular")
    try:
        A = parse_group(get("A"))
    except GroupError as exc:
        raise DatasetError(str(exc), line, "A") from None
    T = char_table(A)
    phi = get("phi_engine")
    if phi not in T.labels:
        raise DatasetError(f"{phi!r} is not a character of {A}", line, "phi_engine")
    G = build_group(A)
    try:
        twist = parse_cycles(get("twist"), G.degree)
    except GroupError as exc:
        raise DatasetError(str(exc), line, "twist") from None
    if twist not in center(G):
        raise DatasetError(f"{get('twist')} is not central in {A}", line, "twist")
    try:
        theta = parse_literal(get("theta"))
    except LiteralError as exc:
        raise DatasetError(str(exc), line, "theta") from None
    if not is_root_of_unity(theta):
        raise DatasetError("theta is not a root of unity", line, "theta")
    derivation = get("derivation")
    if derivation not in DERIVATIONS:
        raise DatasetError(f"unknown derivation status {derivation!r}", line, "derivation")
    orbit = get("orbit")
    return CuspidalRecord(
        row=row, group_type=kind, p=p, class_label=get("class"),
        regular=regular == "yes", A=A, phi_paper=get("phi_paper"), phi_engine=phi,
        central_twist=twist, theta_expected=theta, derivation_status=derivation,
        galois_orbit=None if orbit in ("", "-") else orbit,
        aux_constraints=_parse_aux(get("aux"), A, line),
        external_fact=_parse_external(get("external"), line),
        note="" if get("note") == "-" else get("note"), line=line,
    )


def galois_related(a: CycNum, b: CycNum) -> bool:
    return any(cyc_galois(a, k) == b for k in range(1, CONDUCTOR) if gcd(k, CONDUCTOR) == 1)


def _link_orbits(records: list[CuspidalRecord]) -> list[CuspidalRecord]:
    groups: dict[str, list[CuspidalRecord]] = {}
    for r in records:
        if r.galois_orbit is not None:
            groups.setdefault(r.galois_orbit, []).append(r)
    for oid, members in groups.items():
        first = members[0]
        for r in members[1:]:
            if (r.row, r.group_type, r.p) != (first.row, first.group_type, first.p):
                raise DatasetError(f"orbit {oid!r} spans several table rows", r.line, "orbit")
            if not galois_related(first.theta_expected, r.theta_expected):
                raise DatasetError(f"orbit {oid!r}: theta values are not Galois conjugate",
                                   r.line, "orbit")
    out = []
    for r in records:
        members = groups.get(r.galois_orbit, [r]) if r.galois_orbit else [r]
        thetas = []
        for m in members:
            if m.theta_expected not in thetas:
                thetas.append(m.theta_expected)
        out.append(replace(r, orbit_thetas=tuple(thetas)))
    return out


def parse_dataset(stream: TextIO) -> list[CuspidalRecord]:
    reader = csv.reader(stream, delimiter="\t", quoting=csv.QUOTE_NONE)
    try:
        header = next(reader)
    except StopIteration:
        raise DatasetError("empty dataset", 1) from None
    if tuple(h.strip() for h in header) != COLUMNS:
        raise DatasetError(f"header must be {' '.join(COLUMNS)}", 1)
    records = []
    for line, cells in enumerate(reader, start=2):
        if not cells or all(not c.strip() for c in cells):
            continue
        if len(cells) != len(COLUMNS):
            raise DatasetError(f"expected {len(COLUMNS)} columns, got {len(cells)}", line)
        records.append(_parse_row(dict(zip(COLUMNS, cells)), line))
    return _link_orbits(records)


def default_dataset_text() -> str:
    return resources.files("cusptheta").joinpath("data/cuspidal.tsv").read_text(encoding="utf-8")


def load_dataset(source: Union[str, Path, TextIO, None] = None) -> list[CuspidalRecord]:
    """Records from a path, an open stream, or the shipped table.

    With no source, ``$THETA_DATASET`` is honoured before the shipped copy.
    """
    if source is None:
        source = os.environ.get(ENV_VAR) or None
    if source is None:
        return parse_dataset(io.StringIO(default_dataset_text()))
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8", newline="") as fh:
            return parse_dataset(fh)
    return parse_dataset(source)


def dump_dataset(records: Iterable[CuspidalRecord]) -> str:
    """Inverse of parse_dataset, used to write edited copies."""
    from ..cyclo import render_literal

    lines = ["\t".join(COLUMNS)]
    for r in records:
        aux = ";".join(f"{c.phi}={render_literal(c.required)}@{c.source}"
                       for c in r.aux_constraints) or "-"
        ext = f"{r.external_fact.kind}@{r.external_fact.citation}" if r.external_fact else "-"
        cells = [str(r.row), r.group_type, str(r.p), r.class_label,
                 "yes" if r.regular else "no", str(r.A), r.phi_paper, r.phi_engine,
                 cycle_notation(r.central_twist), render_literal(r.theta_expected),
                 r.derivation_status, r.galois_orbit or "-", aux, ext, r.note or "-"]
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def table_rows(records: Iterable[CuspidalRecord]) -> set[int]:
    return {r.row for r in records}
