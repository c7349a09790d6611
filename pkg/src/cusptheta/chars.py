"""Exact character tables of catalog groups."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import NamedTuple, Union

from .cyclo import ZERO, CycNum, cyc_conj, cyc_root
from .grp import (
    ConjugacyClass, Cyclic, Dihedral, FiniteGroup, GroupError, GroupSpec,
    Perm, Product, Symmetric, build_group, center, class_of, conjugacy_classes,
    cycle_type, parse_group, spec_components,
)

Partition = tuple[int, ...]


# -- partitions and Murnaghan-Nakayama --------------------------------------

def partitions(n: int, largest: int | None = None) -> list[Partition]:
    """Partitions of n in lexicographically descending order."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out += [(first,) + rest for rest in partitions(n - first, first)]
    return out


def _beta_to_partition(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    m = len(beta)
    return tuple(p for p in (b - (m - 1 - i) for i, b in enumerate(beta)) if p > 0)


@lru_cache(maxsize=None)
def mn_value(lam: Partition, mu: Partition) -> int:
    """chi_lam at the class of cycle type mu, by border-strip recursion.

    A border strip of length r is removed by sliding one bead of the
    beta-set of lam down r places into an empty slot; its height is the
    number of beads jumped over.
    """
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"{lam} and {mu} partition different integers")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    m = len(lam)
    beta = [p + m - 1 - i for i, p in enumerate(lam)]
    beads = set(beta)
    total = 0
    for b in beta:
        if b - r < 0 or (b - r) in beads:
            continue
        height = sum(1 for c in beta if b - r < c < b)
        new = _beta_to_partition([c if c != b else b - r for c in beta])
        total += (-1) ** height * mn_value(new, rest)
    return total


def hook_lengths(lam: Partition) -> list[int]:
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def hook_degree(lam: Partition) -> int:
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    return factorial(sum(lam)) // prod


def partition_label(lam: Partition) -> str:
    return "[" + ",".join(map(str, lam)) + "]"


# -- tables -----------------------------------------------------------------

_D8_LINEAR = {"lin_pp": (1, 1), "lin_pm": (1, -1), "lin_mp": (-1, 1), "lin_mm": (-1, -1)}


def char_labels(spec: GroupSpec) -> list[str]:
    if isinstance(spec, Cyclic):
        return [f"chi{k}" for k in range(spec.n)]
    if isinstance(spec, Dihedral):
        return list(_D8_LINEAR) + ["rho2"]
    if isinstance(spec, Symmetric):
        return [partition_label(p) for p in partitions(spec.n)]
    wrap = lambda s, lab: f"({lab})" if isinstance(s, Product) else lab
    return [f"{wrap(spec.left, a)}*{wrap(spec.right, b)}"
            for a in char_labels(spec.left) for b in char_labels(spec.right)]


def _dihedral_coords(g: Perm) -> tuple[int, int]:
    # g(i) = k + (-1)^e i  (mod 4)
    k = g[0]
    e = 0 if (g[1] - g[0]) % 4 == 1 else 1
    return k, e


def _value(spec: GroupSpec, index: int, g: Perm) -> CycNum:
    if isinstance(spec, Cyclic):
        return cyc_root(spec.n, index * g[0])
    if isinstance(spec, Dihedral):
        k, e = _dihedral_coords(g)
        if index < 4:
            a, b = list(_D8_LINEAR.values())[index]
            return CycNum([a**k * b**e])
        if e:
            return ZERO
        return cyc_root(4, k) + cyc_root(4, -k)
    if isinstance(spec, Symmetric):
        lam = partitions(spec.n)[index]
        return CycNum([mn_value(lam, cycle_type(g))])
    nr = len(char_labels(spec.right))
    gl, gr = spec_components(spec, g)
    return _value(spec.left, index // nr, gl) * _value(spec.right, index % nr, gr)


@dataclass(frozen=True)
class CharacterTable:
    spec: GroupSpec
    group: FiniteGroup
    classes: tuple[ConjugacyClass, ...]
    labels: tuple[str, ...]
    values: tuple[tuple[CycNum, ...], ...]

    def row(self, label: str) -> tuple[CycNum, ...]:
        try:
            return self.values[self.labels.index(label)]
        except ValueError:
            raise KeyError(f"{label!r} is not a character of {self.spec}") from None

    def degree(self, label: str) -> int:
        d = self.row(label)[0]
        return int(d.coeffs[0])

    def value(self, label: str, g: Perm) -> CycNum:
        return self.row(label)[class_of(self.group, g)]

    @property
    def degrees(self) -> list[int]:
        return [int(r[0].coeffs[0]) for r in self.values]


@lru_cache(maxsize=None)
def _char_table(spec: GroupSpec) -> CharacterTable:
    G = build_group(spec)
    classes = tuple(conjugacy_classes(G))
    labels = tuple(char_labels(spec))
    values = tuple(
        tuple(_value(spec, i, c.representative) for c in classes)
        for i in range(len(labels))
    )
    return CharacterTable(spec, G, classes, labels, values)


def char_table(spec: Union[GroupSpec, str]) -> CharacterTable:
    if isinstance(spec, str):
        spec = parse_group(spec)
    return _char_table(spec)


def central_character(T: CharacterTable, phi: str, z: Perm) -> CycNum:
    """Scalar by which the central element z acts in the irreducible phi."""
    if z not in center(T.group):
        raise GroupError(f"element {z} is not central in {T.spec}")
    return T.value(phi, z) / T.degree(phi)


class OrthogonalityReport(NamedTuple):
    ok: bool
    violation: str | None = None

    def __bool__(self):
        return self.ok


def verify_orthogonality(T: CharacterTable) -> OrthogonalityReport:
    n = T.group.order
    sizes = [c.size for c in T.classes]
    if len(T.values) != len(T.classes):
        return OrthogonalityReport(False, "table is not square")
    conj = [[cyc_conj(v) for v in row] for row in T.values]
    for i, ri in enumerate(T.values):
        for j in range(i, len(T.values)):
            s = ZERO
            for k, size in enumerate(sizes):
                s = s + size * ri[k] * conj[j][k]
            if s != (n if i == j else 0):
                return OrthogonalityReport(
                    False, f"rows {T.labels[i]}, {T.labels[j]}: inner product {s!r}")
    for a in range(len(sizes)):
        for b in range(a, len(sizes)):
            s = ZERO
            for r, row in enumerate(T.values):
                s = s + row[a] * conj[r][b]
            want = n // sizes[a] if a == b else 0
            if s != want:
                return OrthogonalityReport(
                    False, f"columns {a}, {b}: inner product {s!r}, expected {want}")
    return OrthogonalityReport(True)
