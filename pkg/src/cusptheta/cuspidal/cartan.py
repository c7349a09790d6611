"""Cartan matrices of the exceptional root systems."""
from __future__ import annotations

from fractions import Fraction

TYPES = ("G2", "F4", "E6", "E7", "E8")


def _simply_laced(n: int, edges: list[tuple[int, int]]) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    return a


def cartan_matrix(kind: str) -> list[list[int]]:
    """Cartan matrix with Bourbaki node numbering."""
    if kind == "G2":
        return [[2, -1], [-3, 2]]
    if kind == "F4":
        return [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    if kind in ("E6", "E7", "E8"):
        n = int(kind[1])
        # 1-3-4-5-...-n with node 2 hanging off node 4
        edges = [(1, 3), (2, 4)] + [(k, k + 1) for k in range(3, n)]
        return _simply_laced(n, edges)
    raise ValueError(f"unknown exceptional type {kind!r}")


def integer_det(m: list[list[int]]) -> int:
    """Bareiss fraction-free elimination."""
    a = [row[:] for row in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def cartan_det(kind: str) -> int:
    return integer_det(cartan_matrix(kind))


def symmetrizer(m: list[list[int]]) -> list[Fraction] | None:
    """Positive d with d_i a_ij = d_j a_ji, or None if there is none."""
    n = len(m)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or m[i][j] == 0:
                    continue
                if m[j][i] == 0:
                    return None
                want = d[i] * m[i][j] / m[j][i]
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    return None
    if any(x <= 0 for x in d):
        return None
    return d


def prime_to_part(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def center_points(kind: str, p: int) -> int:
    """Number of k-points of the center of the simply connected group, char p."""
    return prime_to_part(cartan_det(kind), p)
