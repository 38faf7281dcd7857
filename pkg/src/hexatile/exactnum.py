"""Exact integer/rational helpers and a small exact polynomial type.

Integers are Python ints and rationals are :class:`fractions.Fraction`, which
is always kept in lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from hexatile.errors import DomainError

Number = Union[int, Fraction]


def factorial(m: int) -> int:
    if m < 0:
        raise DomainError(f"factorial of negative integer {m}; use reciprocal_factorial")
    return math.factorial(m)


def reciprocal_factorial(m: int) -> Fraction:
    """Return ``1/m!``, with the convention ``1/m! = 0`` for negative ``m``.

    This is what makes entries such as ``(x+y+i+j-1)!/((x+2i-j)!(y+2j-i)!)``
    total: a negative argument in the denominator kills the entry.
    """
    if m < 0:
        return Fraction(0)
    return Fraction(1, math.factorial(m))


def shifted_factorial(a: int, k: int) -> int:
    """Rising factorial ``(a)_k = a (a+1) ... (a+k-1)``."""
    if k < 0:
        raise DomainError(f"shifted factorial with negative length {k}")
    out = 1
    for t in range(a, a + k):
        out *= t
    return out


def binomial(m: int, k: int) -> int:
    """Falling-factorial binomial ``m(m-1)...(m-k+1)/k!``; zero for ``k < 0``.

    Valid for negative ``m`` so that matrix entries stay polynomial in ``m``.
    """
    if k < 0:
        return 0
    if m >= 0:
        return math.comb(m, k)
    num = 1
    for t in range(k):
        num *= m - t
    return num // math.factorial(k)


def as_integer(value: Number, what: str = "value") -> int:
    """Return ``value`` as an int, raising if it is not integral."""
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError(f"{what} = {value} is not an integer")
    return value.numerator


def format_rational(value: Number) -> str:
    """Render as ``"p"`` or ``"p/q"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


class Polynomial:
    """Univariate polynomial with exact rational coefficients.

    ``coeffs[d]`` is the coefficient of ``t**d``.  Trailing zeros are dropped
    so the zero polynomial has an empty coefficient tuple and equality is
    structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        return cls([c])

    @classmethod
    def linear(cls, slope: Number, intercept: Number) -> "Polynomial":
        return cls([intercept, slope])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, t: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial | Number") -> "Polynomial":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial | Number") -> "Polynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "Polynomial | Number") -> "Polynomial":
        return _as_poly(other) - self

    def __mul__(self, other: "Polynomial | Number") -> "Polynomial":
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Return ``self(inner(t))``."""
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __repr__(self) -> str:
        return f"Polynomial({[format_rational(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.to_string()

    def to_string(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if d == 0:
                body = format_rational(mag)
            else:
                mono = var if d == 1 else f"{var}^{d}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(p: "Polynomial | Number") -> Polynomial:
    return p if isinstance(p, Polynomial) else Polynomial.constant(p)


def interpolate(points: Sequence[tuple[Number, Number]]) -> Polynomial:
    """The unique polynomial of degree ``< len(points)`` through ``points``.

    Newton divided differences over exact rationals.
    """
    xs = [Fraction(p[0]) for p in points]
    ys = [Fraction(p[1]) for p in points]
    if len(set(xs)) != len(xs):
        raise DomainError("interpolation abscissae must be pairwise distinct")
    n = len(xs)
    coef = list(ys)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    # Horner-style expansion of the Newton form.
    poly = Polynomial()
    for i in range(n - 1, -1, -1):
        poly = poly * Polynomial.linear(1, -xs[i]) + coef[i]
    return poly
