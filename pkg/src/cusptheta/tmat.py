"""T-matrix of a finite group.

Simple equivariant objects on a finite group G are pairs (class of x,
irreducible representation phi of the centralizer of x).  The twist acts on
such an object by the scalar phi(x) / phi(1); x is central in its own
centralizer, so this is a central character.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .chars import central_character, char_table
from .cyclo import ONE, CycNum
from .grp import (
    FiniteGroup, GroupError, GroupSpec, Perm, build_group, centralizer,
    conjugacy_classes, isomorphism, parse_group, perm_order, recognize,
)


@dataclass(frozen=True)
class SimpleObject:
    group: GroupSpec
    x: Perm
    class_size: int
    centralizer_label: GroupSpec
    phi: str
    dimension: int


@dataclass(frozen=True)
class TSpectrum:
    group: GroupSpec
    entries: tuple[tuple[SimpleObject, CycNum], ...]

    @property
    def eigenvalues(self) -> list[CycNum]:
        return [e for _, e in self.entries]

    @property
    def dimension_square_sum(self) -> int:
        return sum(o.dimension**2 for o, _ in self.entries)

    def multiset(self) -> Counter:
        return Counter(self.eigenvalues)


def _as_spec(G: Union[GroupSpec, str]) -> GroupSpec:
    return parse_group(G) if isinstance(G, str) else G


@lru_cache(maxsize=None)
def _centralizer_data(spec: GroupSpec, x: Perm) -> tuple[FiniteGroup, GroupSpec, dict]:
    C = centralizer(build_group(spec), x)
    label = recognize(C)
    return C, label, isomorphism(C, label)


def simple_objects(G: Union[GroupSpec, str]) -> list[SimpleObject]:
    spec = _as_spec(G)
    group = build_group(spec)
    if group.order > 120:
        raise GroupError(f"{spec} is too large for the T-matrix enumeration")
    out = []
    for cls in conjugacy_classes(group):
        _, label, _ = _centralizer_data(spec, cls.representative)
        T = char_table(label)
        for phi in T.labels:
            out.append(SimpleObject(spec, cls.representative, cls.size, label, phi,
                                    cls.size * T.degree(phi)))
    return out


def theta_at(spec: GroupSpec, x: Perm, phi: str) -> CycNum:
    """Twist eigenvalue of (x, phi), phi read through the centralizer of x."""
    _, label, iso = _centralizer_data(spec, x)
    return central_character(char_table(label), phi, iso[x])


def theta_eigenvalue(obj: SimpleObject) -> CycNum:
    return theta_at(obj.group, obj.x, obj.phi)


def t_spectrum(G: Union[GroupSpec, str]) -> TSpectrum:
    spec = _as_spec(G)
    objs = simple_objects(spec)
    return TSpectrum(spec, tuple((o, theta_eigenvalue(o)) for o in objs))


def check_spectrum(spec: TSpectrum) -> list[str]:
    """Invariant violations of a spectrum; empty when all hold."""
    problems = []
    n = build_group(spec.group).order
    if spec.dimension_square_sum != n * n:
        problems.append(f"sum of squared dimensions {spec.dimension_square_sum} != {n * n}")
    for obj, e in spec.entries:
        if e ** perm_order(obj.x) != ONE:
            problems.append(f"eigenvalue at {obj.x} has wrong order")
        if perm_order(obj.x) == 1 and e != ONE:
            problems.append(f"identity-class object {obj.phi} has eigenvalue != 1")
    return problems
