"""Dense univariate polynomials in z over exact rationals.

These are the coefficient objects of the truncated power series used across
the package: the coefficient of t^n in every series we manipulate is a
polynomial in z with Fraction coefficients.  The class is deliberately
small: exact arithmetic, a binomial shift z -> z + c, and nothing clever.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class ZPolynomial:
    """Polynomial in z, dense coefficient list, exact rational arithmetic."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs: tuple[Fraction, ...] = _trim([Fraction(c) for c in coeffs])

    # ------------------------------------------------------------ builders
    @classmethod
    def zero(cls) -> "ZPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "ZPolynomial":
        return cls((1,))

    @classmethod
    def constant(cls, c: Scalar) -> "ZPolynomial":
        return cls((c,))

    @classmethod
    def z(cls) -> "ZPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "ZPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, Scalar]]) -> "ZPolynomial":
        """Build from (exponent, coefficient) pairs; exponents may repeat."""
        items = list(pairs)
        if not items:
            return cls.zero()
        out = [Fraction(0)] * (max(k for k, _ in items) + 1)
        for k, c in items:
            out[k] += Fraction(c)
        return cls(out)

    # ------------------------------------------------------------ queries
    def degree(self) -> int:
        """Degree, with the convention degree(0) = -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def evaluate(self, value: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # ------------------------------------------------------------ algebra
    def __add__(self, other: "ZPolynomial") -> "ZPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ZPolynomial(out)

    def __neg__(self) -> "ZPolynomial":
        return ZPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "ZPolynomial") -> "ZPolynomial":
        return self + (-other)

    def __mul__(self, other: "ZPolynomial") -> "ZPolynomial":
        if self.is_zero or other.is_zero:
            return ZPolynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ZPolynomial(out)

    def scale(self, c: Scalar) -> "ZPolynomial":
        return ZPolynomial([a * c for a in self.coeffs])

    def derivative(self) -> "ZPolynomial":
        return ZPolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def shift_z(self, c: Scalar) -> "ZPolynomial":
        """Substitute z -> z + c (binomial expansion, exact)."""
        if c == 0 or self.is_zero:
            return self
        c = Fraction(c)
        out = [Fraction(0)] * len(self.coeffs)
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            power = Fraction(1)
            for j in range(k, -1, -1):
                out[j] += a * comb(k, j) * power
                power *= c
        return ZPolynomial(out)

    # ------------------------------------------------------------ protocol
    def __eq__(self, other: object) -> bool:
        if isinstance(other, ZPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == ZPolynomial.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"ZPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*z" if c != 1 else "z")
            else:
                parts.append(f"{c}*z^{k}" if c != 1 else f"z^{k}")
        return " + ".join(parts)
