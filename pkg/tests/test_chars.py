from dataclasses import replace
from functools import lru_cache

import numpy as np
import pytest

from cusptheta.chars import (
    char_labels, central_character, char_table, hook_degree, mn_value, partitions,
    verify_orthogonality,
)
from cusptheta.cyclo import ONE, CycNum, cyc_order, cyc_root
from cusptheta.grp import (
    Cyclic, Dihedral, GroupError, Symmetric, build_group, center, parse_cycles, parse_group,
    perm_order,
)

NAMED = ["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "D8", "S3", "S4", "S5", "S3xZ2"]


@lru_cache(maxsize=None)
def count_syt(shape):
    # standard Young tableaux, by removing the cell holding the largest entry
    if sum(shape) == 0:
        return 1
    total = 0
    for i, part in enumerate(shape):
        if part and (i + 1 == len(shape) or shape[i + 1] < part):
            total += count_syt(shape[:i] + (part - 1,) + shape[i + 1:])
    return total


def standard_rep_trace(perm):
    """Trace of perm on the sum-zero subspace of Q^3, via explicit matrices."""
    P = np.zeros((3, 3))
    for i, j in enumerate(perm):
        P[j, i] = 1
    B = np.array([[1, -1, 0], [0, 1, -1]], dtype=float).T  # basis e0-e1, e1-e2
    M, *_ = np.linalg.lstsq(B, P @ B, rcond=None)
    return round(float(np.trace(M)))


def test_mn_small_examples():
    for n in range(1, 7):
        for mu in partitions(n):
            assert mn_value((n,), mu) == 1
            assert mn_value((1,) * n, mu) == (-1) ** (n - len(mu))
    assert mn_value((2, 1), (3,)) == standard_rep_trace((1, 2, 0)) == -1
    assert mn_value((2, 1), (2, 1)) == standard_rep_trace((1, 0, 2)) == 0


def test_mn_rejects_size_mismatch():
    with pytest.raises(ValueError):
        mn_value((2, 1), (2,))


def test_hook_examples():
    assert hook_degree((3, 2)) == 5
    assert hook_degree((2, 1)) == 2
    assert hook_degree((1, 1, 1, 1, 1)) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_degrees_three_ways(n):
    for lam in partitions(n):
        assert mn_value(lam, (1,) * n) == hook_degree(lam) == count_syt(lam)


def test_s3_table_equals_hand_reference():
    T = char_table("S3")
    # classes: e, (1 2), (0 1 2); rows [3], [2,1], [1,1,1]
    assert [c.size for c in T.classes] == [1, 3, 2]
    hand = [[1, 1, 1], [2, 0, -1], [1, -1, 1]]
    assert [[int(v.coeffs[0]) for v in row] for row in T.values] == hand
    assert all(v.is_rational() for row in T.values for v in row)


def test_cyclic_table():
    T = char_table(Cyclic(4))
    gen = build_group(Cyclic(4)).generators[0]
    assert T.value("chi1", gen) == cyc_root(4, 1)
    assert len(T.labels) == 4


def test_dihedral_table():
    T = char_table(Dihedral(8))
    assert sorted(T.degrees) == [1, 1, 1, 1, 2]
    z = next(g for g in center(T.group) if g != T.group.identity)
    assert T.value("rho2", z) == CycNum([-2])
    r = (1, 2, 3, 0)
    for k in range(4):
        rk = T.group.identity
        for _ in range(k):
            rk = tuple(r[i] for i in rk)
        assert T.value("rho2", rk) == cyc_root(4, k) + cyc_root(4, -k)


def test_s3_degrees():
    assert sorted(char_table(Symmetric(3)).degrees) == [1, 1, 2]


@pytest.mark.parametrize("name", NAMED)
def test_orthogonality(name):
    T = char_table(name)
    rep = verify_orthogonality(T)
    assert rep.ok, rep.violation
    assert len(T.labels) == len(T.classes)
    assert sum(d * d for d in T.degrees) == T.group.order


def test_product_degrees_multiply():
    T = char_table("S3xZ2")
    L, R = char_table("S3"), char_table("Z2")
    want = [a * b for a in L.degrees for b in R.degrees]
    assert T.degrees == want
    assert T.labels == tuple(char_labels(parse_group("S3xZ2")))


def test_perturbed_table_fails_orthogonality():
    T = char_table("S3")
    bad_row = (T.values[1][0] + 1,) + T.values[1][1:]
    bad = replace(T, values=(T.values[0], bad_row, T.values[2]))
    rep = verify_orthogonality(bad)
    assert not rep.ok
    assert "[2,1]" in rep.violation


def test_central_character_examples():
    T = char_table("Z4")
    G = T.group
    assert central_character(T, "chi1", G.identity) == ONE
    assert central_character(T, "chi1", G.generators[0]) == cyc_root(4, 1)
    D = char_table("D8")
    z = next(g for g in center(D.group) if g != D.group.identity)
    assert central_character(D, "rho2", z) == -ONE
    S3 = char_table("S3")
    with pytest.raises(GroupError):
        central_character(S3, "[2,1]", parse_cycles("(0 1)", 3))


@pytest.mark.parametrize("name", NAMED)
def test_central_characters_are_roots_of_matching_order(name):
    T = char_table(name)
    for z in center(T.group):
        for phi in T.labels:
            c = central_character(T, phi, z)
            assert c ** perm_order(z) == ONE
            assert cyc_order(c) is not None


def test_memoized_mn_matches_uncached():
    for n in range(1, 7):
        for lam in partitions(n):
            for mu in partitions(n):
                assert mn_value(lam, mu) == mn_value.__wrapped__(lam, mu)
