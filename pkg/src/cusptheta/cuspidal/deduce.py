"""Constraint deduction of twist eigenvalues of cuspidal local systems.

The unknown is the image of u in the component group A.  Each rule shrinks
the set of candidates for it; the twist is then read off as the central
character of phi at every surviving candidate.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

from ..chars import central_character, char_table
from ..cyclo import CycNum
from ..grp import (
    Cyclic, GroupSpec, Perm, build_group, center, compose, cycle_notation, perm_order,
)
from .cartan import center_points
from .dataset import CuspidalRecord

RULES = ("springer-lou", "aux", "external")
VERDICT_RANK = {"consistent": 0, "derived-set": 1, "derived-unique": 2}
REQUIRED_RANK = {"consistency-only": 0, "complete": 1}


class DeductionError(Exception):
    """A rule was misapplied, or the dataset contradicts itself."""

    def __init__(self, record: CuspidalRecord | None, msg: str):
        prefix = f"{record.name}: " if record is not None else ""
        super().__init__(prefix + msg)
        self.record = record


class VerificationError(DeductionError):
    pass


class Step(NamedTuple):
    rule: str
    effect: str


@dataclass(frozen=True)
class DeductionTrace:
    record: CuspidalRecord
    steps: tuple[Step, ...]
    candidates: tuple[Perm, ...]
    theta_set: tuple[CycNum, ...]
    verdict: str

    @property
    def rules(self) -> str:
        return " + ".join(s.rule for s in self.steps)


def sort_roots(values: Iterable[CycNum]) -> tuple[CycNum, ...]:
    """Deduplicate and order by argument in [0, 2pi)."""
    uniq = []
    for v in values:
        if v not in uniq:
            uniq.append(v)

    def angle(v):
        a = cmath.phase(v.to_complex())
        return round(a if a >= -1e-12 else a + 2 * cmath.pi, 9)

    return tuple(sorted(uniq, key=angle))


def is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _fmt(cands: Iterable[Perm]) -> str:
    return "{" + ", ".join(cycle_notation(c) for c in cands) + "}"


# -- rules ------------------------------------------------------------------

def central_p_elements(A: GroupSpec, p: int) -> list[Perm]:
    G = build_group(A)
    return sorted(z for z in center(G) if is_p_power(perm_order(z), p))


def ubar_candidates(r: CuspidalRecord) -> list[Perm]:
    """twist * w for w central of p-power order."""
    return sorted(compose(r.central_twist, w) for w in central_p_elements(r.A, r.p))


def apply_springer_lou(r: CuspidalRecord, candidates: Iterable[Perm]) -> list[Perm]:
    """On a regular class the image of u generates the non-central part of A."""
    candidates = list(candidates)
    if not r.regular:
        return candidates
    if not isinstance(r.A, Cyclic):
        raise DeductionError(r, f"Springer-Lou applied to non-cyclic {r.A}")
    zg = center_points(r.group_type, r.p)
    if r.A.n % zg:
        raise DeductionError(r, f"|A| = {r.A.n} is not divisible by |Z_G| = {zg}")
    want = r.A.n // zg
    return [c for c in candidates if perm_order(c) == want]


def apply_aux(r: CuspidalRecord, candidates: Iterable[Perm]) -> list[Perm]:
    T = char_table(r.A)
    out = [z for z in candidates
           if all(central_character(T, c.phi, z) == c.required for c in r.aux_constraints)]
    if not out:
        raise VerificationError(r, "auxiliary constraints leave no candidate")
    return out


def apply_external(r: CuspidalRecord, candidates: Iterable[Perm]) -> list[Perm]:
    if r.external_fact is None:
        return list(candidates)
    ident = build_group(r.A).identity
    out = [z for z in candidates if z != ident]
    if not out:
        raise VerificationError(r, f"external fact ({r.external_fact.citation}) leaves no candidate")
    return out


# -- pipeline ---------------------------------------------------------------

def theta_values(A: GroupSpec, phi: str, candidates: Iterable[Perm]) -> tuple[CycNum, ...]:
    T = char_table(A)
    return sort_roots(central_character(T, phi, z) for z in candidates)


def deduce_theta(r: CuspidalRecord, disabled: Iterable[str] = ()) -> DeductionTrace:
    """Run every applicable rule and check the result against the record.

    Rules named in ``disabled`` are skipped; if that removes a rule the
    record relies on, only soundness (expected value among the survivors)
    is enforced.
    """
    disabled = frozenset(disabled)
    unknown = disabled - set(RULES)
    if unknown:
        raise ValueError(f"unknown rules: {', '.join(sorted(unknown))}")
    G = build_group(r.A)
    steps = []
    cands = sorted(center(G))
    steps.append(Step("central", f"{len(cands)} central elements"))
    cands = ubar_candidates(r)
    steps.append(Step("p-torsion", f"p-power order: {_fmt(cands)}"))
    if r.central_twist != G.identity:
        steps.append(Step("twist", f"shifted by {cycle_notation(r.central_twist)}"))
    ablated = False
    if r.regular:
        if "springer-lou" in disabled:
            ablated = True
        else:
            cands = apply_springer_lou(r, cands)
            steps.append(Step("Springer-Lou", f"order {r.A.n // center_points(r.group_type, r.p)}: {_fmt(cands)}"))
    if r.aux_constraints:
        if "aux" in disabled:
            ablated = True
        else:
            cands = apply_aux(r, cands)
            srcs = ", ".join(f"{c.phi}" for c in r.aux_constraints)
            steps.append(Step("aux", f"{srcs}: {_fmt(cands)}"))
    if r.external_fact is not None:
        if "external" in disabled:
            ablated = True
        else:
            cands = apply_external(r, cands)
            steps.append(Step("external", f"{r.external_fact.citation}: {_fmt(cands)}"))
    if not cands:
        raise VerificationError(r, "no candidate survives")

    thetas = theta_values(r.A, r.phi_engine, cands)
    orbit = set(r.orbit_thetas or (r.theta_expected,))
    if r.theta_expected not in thetas:
        raise VerificationError(r, "expected theta not among the deduced values")
    if len(thetas) == 1:
        verdict = "derived-unique"
    elif set(thetas) == orbit:
        verdict = "derived-set"
    else:
        verdict = "consistent"
    if not ablated and VERDICT_RANK[verdict] < REQUIRED_RANK[r.derivation_status]:
        raise VerificationError(r, f"verdict {verdict} is below status {r.derivation_status}")
    return DeductionTrace(r, tuple(steps), tuple(cands), thetas, verdict)


# -- good characteristic and distinctness -----------------------------------

class Forced(NamedTuple):
    value: bool
    reason: str

    def __bool__(self):
        return self.value


def forced_trivial(A: GroupSpec, p: int) -> Forced:
    """Whether the only central p-element of A is the identity, and why."""
    G = build_group(A)
    z = center(G)
    if len(z) == 1:
        return Forced(True, "trivial center")
    if G.order % p:
        return Forced(True, "coprime order")
    if len(central_p_elements(A, p)) == 1:
        return Forced(True, "p'-center")
    return Forced(False, "center has nontrivial p-elements")


def distinct_check(records: Iterable[CuspidalRecord], group_type: str, p: int
                   ) -> list[tuple[CuspidalRecord, CuspidalRecord]]:
    """Pairs of local systems for (type, p) with equal expected theta.

    Records of one Galois orbit are conjugate data of a single table row and
    are compared only with records outside it.
    """
    rs = [r for r in records if (r.group_type, r.p) == (group_type, p)]
    if not rs:
        raise ValueError(f"no records for {group_type}, p={p}")
    out = []
    for a, b in combinations(rs, 2):
        if a.galois_orbit is not None and a.galois_orbit == b.galois_orbit:
            continue
        if a.theta_expected == b.theta_expected:
            out.append((a, b))
    return out


def type_prime_pairs(records: Iterable[CuspidalRecord]) -> list[tuple[str, int]]:
    seen = []
    for r in records:
        if (r.group_type, r.p) not in seen:
            seen.append((r.group_type, r.p))
    return seen


def distinct_all(records: list[CuspidalRecord]) -> dict[tuple[str, int], list]:
    return {tp: distinct_check(records, *tp) for tp in type_prime_pairs(records)}
