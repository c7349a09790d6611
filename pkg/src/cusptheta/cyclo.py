"""Exact arithmetic in the cyclotomic field Q(zeta_60).

Elements are stored as 16 rational coordinates in the power basis
1, x, ..., x^15 of Q[x] / Phi_60(x); zeta_60 is the class of x.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Union

CONDUCTOR = 60
DEGREE = 16  # Euler totient of 60

Rational = Union[int, Fraction]


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # Coefficient lists, lowest degree first; den must be monic.
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if c:
            q[shift] = c
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    rem = num[: len(den) - 1]
    while rem and rem[-1] == 0:
        rem.pop()
    return q, rem


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Phi_n as integer coefficients, lowest degree first.

    Uses x^n - 1 = prod_{d | n} Phi_d(x).
    """
    if n < 1:
        raise ValueError(f"cyclotomic_polynomial needs n >= 1, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    prod = [1]
    for d in range(1, n):
        if n % d == 0:
            prod = _poly_mul(prod, list(cyclotomic_polynomial(d)))
    q, rem = _poly_divmod(num, prod)
    assert not rem, "x^n - 1 not divisible by the proper-divisor product"
    return tuple(q)


_PHI = cyclotomic_polynomial(CONDUCTOR)


def _norm(c) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _reduce_slow(coeffs: list) -> list:
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, DEGREE - 1, -1):
        c = coeffs[k]
        if c:
            # x^k = x^(k-16) * (x^16 - Phi_60)
            for i in range(DEGREE):
                coeffs[k - DEGREE + i] -= c * _PHI[i]
            coeffs[k] = 0
    return coeffs[:DEGREE] + [0] * (DEGREE - len(coeffs))


# x^k reduced, for 16 <= k < 31 (enough for products of two reduced values)
_HIGH = {k: _reduce_slow([0] * k + [1]) for k in range(DEGREE, 2 * DEGREE - 1)}


def _reduce(coeffs: list) -> tuple[Rational, ...]:
    if len(coeffs) > 2 * DEGREE - 1:
        coeffs = _reduce_slow(coeffs)
    out = list(coeffs[:DEGREE]) + [0] * (DEGREE - min(len(coeffs), DEGREE))
    for k in range(DEGREE, len(coeffs)):
        c = coeffs[k]
        if c:
            for i, v in enumerate(_HIGH[k]):
                if v:
                    out[i] += c * v
    return tuple(_norm(c) for c in out)


@lru_cache(maxsize=None)
def _x_power(j: int) -> tuple[Rational, ...]:
    j %= CONDUCTOR
    return _reduce([0] * j + [1])


class CycNum:
    """Immutable element of Q(zeta_60) in canonical reduced form."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        coeffs = list(coeffs)
        if len(coeffs) > DEGREE:
            c = _reduce(coeffs)
        else:
            c = tuple(_norm(Fraction(v)) for v in coeffs) + (0,) * (DEGREE - len(coeffs))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def _make(cls, coeffs: tuple) -> "CycNum":
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    @classmethod
    def rational(cls, q: Rational) -> "CycNum":
        return cls([q])

    @staticmethod
    def _coerce(other) -> "CycNum":
        if isinstance(other, CycNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNum._make(tuple(_norm(a + b) for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum._make(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [0] * (2 * DEGREE - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycNum._make(_reduce(prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        # Division is only needed by rationals (character degrees).
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of CycNum by zero")
            return CycNum(a / other for a in self.coeffs)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        acc, base = ONE, self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / CONDUCTOR)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))

    def __repr__(self):
        try:
            return f"CycNum({format_value(self)!r})"
        except ValueError:
            return f"CycNum({[str(c) for c in self.coeffs]})"


ZERO = CycNum()
ONE = CycNum([1])


def cyc_root(n: int, k: int = 1) -> CycNum:
    """zeta_n ** k, for n dividing 60."""
    if n < 1 or CONDUCTOR % n:
        raise ValueError(f"zeta_{n} does not lie in Q(zeta_{CONDUCTOR})")
    return CycNum._make(_x_power((CONDUCTOR // n) * k))


def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def cyc_neg(a: CycNum) -> CycNum:
    return -a


def cyc_eq(a: CycNum, b: CycNum) -> bool:
    return a.coeffs == b.coeffs


def cyc_galois(a: CycNum, k: int) -> CycNum:
    """Apply the automorphism zeta_60 -> zeta_60^k (k prime to 60)."""
    if gcd(k, CONDUCTOR) != 1:
        raise ValueError(f"{k} is not a unit mod {CONDUCTOR}")
    out = ZERO
    for j, c in enumerate(a.coeffs):
        if c:
            out = out + CycNum(c * v for v in _x_power(j * k))
    return out


def cyc_conj(a: CycNum) -> CycNum:
    """Complex conjugation, x -> x^59."""
    return cyc_galois(a, CONDUCTOR - 1)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def cyc_order(a: CycNum) -> int | None:
    """Multiplicative order of a root of unity, or None if a is not one."""
    for n in divisors(CONDUCTOR):
        if a**n == ONE:
            return n
    return None


def is_root_of_unity(a: CycNum) -> bool:
    return cyc_order(a) is not None


# -- literals ---------------------------------------------------------------

class LiteralError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"bad cyclotomic literal {text!r} at position {pos}: {msg}")
        self.text = text
        self.pos = pos


_NAT = re.compile(r"[0-9]+")


def parse_literal(text: str) -> CycNum:
    """Parse ``['-'] ('1' | 'i' | 'z' nat '^' nat)``."""
    pos = 0
    neg = False
    if text.startswith("-"):
        neg, pos = True, 1
    if pos >= len(text):
        raise LiteralError(text, pos, "expected '1', 'i' or 'z'")
    ch = text[pos]
    if ch == "1":
        val, pos = ONE, pos + 1
    elif ch == "i":
        val, pos = cyc_root(4, 1), pos + 1
    elif ch == "z":
        pos += 1
        m = _NAT.match(text, pos)
        if not m:
            raise LiteralError(text, pos, "expected order after 'z'")
        n = int(m.group())
        if n == 0 or CONDUCTOR % n:
            raise LiteralError(text, pos, f"order {n} does not divide {CONDUCTOR}")
        pos = m.end()
        if pos >= len(text) or text[pos] != "^":
            raise LiteralError(text, pos, "expected '^'")
        pos += 1
        m = _NAT.match(text, pos)
        if not m:
            raise LiteralError(text, pos, "expected exponent")
        val, pos = cyc_root(n, int(m.group())), m.end()
    else:
        raise LiteralError(text, pos, f"unexpected {ch!r}")
    if pos != len(text):
        raise LiteralError(text, pos, "trailing characters")
    return -val if neg else val


def _root_candidates(a: CycNum) -> list[str]:
    out = []
    for sign, v in (("", a), ("-", -a)):
        if v == ONE:
            out.append(sign + "1")
        elif v == cyc_root(4, 1):
            out.append(sign + "i")
        n = cyc_order(v)
        if n is not None and n > 1:
            for k in range(n):
                if gcd(k, n) == 1 and cyc_root(n, k) == v:
                    out.append(f"{sign}z{n}^{k}")
    return out


def render_literal(a: CycNum) -> str:
    """Shortest grammar literal denoting a; ValueError if none exists."""
    cands = _root_candidates(a)
    if not cands:
        raise ValueError(f"{a.coeffs} is not a signed root of unity")
    return min(cands, key=lambda s: (len(s), s.startswith("-"), s))


def format_value(a: CycNum) -> str:
    """Literal for roots of unity, plain rationals otherwise.

    Character tables contain values such as 0, 2 or zeta + zeta^-1 that lie
    outside the literal grammar; those fall back to a sum over powers of
    zeta_60.
    """
    if a.is_rational():
        q = a.coeffs[0]
        if q in (1, -1):
            return render_literal(a)
        return str(q)
    try:
        return render_literal(a)
    except ValueError:
        pass
    terms = []
    for k, c in enumerate(a.coeffs):
        if c:
            base = "1" if k == 0 else f"z60^{k}"
            if c == 1:
                terms.append(base)
            elif c == -1:
                terms.append("-" + base)
            else:
                terms.append(f"{c}*{base}")
    return "+".join(terms).replace("+-", "-")
