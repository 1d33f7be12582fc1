"""Rational generating functions with integer coefficients.

Indexing convention: the coefficient of ``x**(s-1)`` is the sequence value
at ``s``, so a table starting at ``s = 1`` starts at the constant term.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import ParameterError
from .formulas import conjectured_count, count_ss1


class IntPolynomial(tuple):
    """Integer coefficients in ascending degree, trailing zeros stripped."""

    def __new__(cls, coefficients: Iterable[int] = ()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return super().__new__(cls, coeffs)

    @property
    def degree(self) -> int:
        return len(self) - 1

    def coeff(self, k: int) -> int:
        return self[k] if 0 <= k < len(self) else 0

    def __add__(self, other):
        n = max(len(self), len(other))
        return IntPolynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    def __neg__(self):
        return IntPolynomial(-c for c in self)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self)
        if not self or not other:
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self):
            if a:
                for j, b in enumerate(other):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def truncate(self, n: int) -> IntPolynomial:
        return IntPolynomial(self[:n])

    def content(self) -> int:
        g = 0
        for c in self:
            g = gcd(g, c)
        return g

    def __str__(self) -> str:
        if not self:
            return "0"
        terms = []
        for k, c in enumerate(self):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self)!r})"


@dataclass(frozen=True)
class RationalGF:
    numerator: IntPolynomial
    denominator: IntPolynomial

    def __init__(self, numerator: Iterable[int], denominator: Iterable[int]):
        num, den = IntPolynomial(numerator), IntPolynomial(denominator)
        if den.coeff(0) == 0:
            raise ParameterError("denominator must have a nonzero constant term")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def canonical(self) -> RationalGF:
        """Divide out the common content and make the denominator's constant term positive."""
        g = gcd(self.numerator.content(), self.denominator.content())
        sign = -1 if self.denominator[0] < 0 else 1
        return RationalGF([sign * c // g for c in self.numerator],
                          [sign * c // g for c in self.denominator])

    def to_dict(self) -> dict:
        return {"num": list(self.numerator), "den": list(self.denominator)}

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


def gf_from_recurrence(initial: Sequence[int], shifts: Sequence[tuple[int, int]]) -> RationalGF:
    """GF of ``a(s) = sum(c * a(s - o) for o, c in shifts)`` seeded with ``initial``.

    ``initial`` holds ``a(1), ..., a(m)``; the recurrence must take over at
    ``s = m + 1``, so ``m`` must be at least the largest offset.
    """
    if not shifts:
        raise ParameterError("a recurrence needs at least one shift")
    for offset, _ in shifts:
        if offset < 1:
            raise ParameterError(f"offsets must be >= 1, got {offset}")
    order = max(o for o, _ in shifts)
    if len(initial) < order:
        raise ParameterError(
            f"need at least {order} initial terms for a recurrence of order {order}, "
            f"got {len(initial)}")
    den = [0] * (order + 1)
    den[0] = 1
    for offset, c in shifts:
        den[offset] -= c
    den = IntPolynomial(den)
    num = (den * IntPolynomial(initial)).truncate(len(initial))
    return RationalGF(num, den).canonical()


def series_coefficients(gf: RationalGF, n: int) -> list[int]:
    """First ``n`` Taylor coefficients, unrolled exactly from the denominator."""
    num, den = gf.numerator, gf.denominator
    lead = den[0]
    out: list[int] = []
    for k in range(n):
        acc = num.coeff(k) - sum(den.coeff(j) * out[k - j] for j in range(1, min(k, den.degree) + 1))
        q, rem = divmod(acc, lead)
        if rem:
            raise ArithmeticError(f"coefficient {k} of {gf} is not an integer")
        out.append(q)
    return out


def gf_equal(a: RationalGF, b: RationalGF) -> bool:
    """Exact equality as formal series: ``a.num * b.den == b.num * a.den``."""
    return a.numerator * b.denominator == b.numerator * a.denominator


def recurrence_shifts(gf: RationalGF) -> list[tuple[int, int]]:
    """Read ``(offset, coefficient)`` pairs back off a canonical denominator."""
    den = gf.canonical().denominator
    if den[0] != 1:
        raise ParameterError(f"denominator {den} is not monic at x^0")
    return [(k, -c) for k, c in enumerate(den) if k and c]


def ss1_gf(d: int) -> RationalGF:
    return gf_from_recurrence([count_ss1(d, s) for s in range(1, d + 2)], [(1, 1), (d + 1, 1)])


def conjecture_gf(d: int, r: int) -> RationalGF:
    return gf_from_recurrence([conjectured_count(d, r, s) for s in range(1, d + 2)],
                              [(1, 1), (d + 1, 1)])
