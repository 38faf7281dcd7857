"""Named binomial/factorial matrices and exact determinant engines.

Two engines are provided: fraction-free (Bareiss) elimination, which is the
reference, and Dodgson condensation over contiguous minors.  A Leibniz
expansion is kept as a brute-force oracle for small matrices.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional, Sequence

from hexatile.errors import DomainError
from hexatile.exactnum import Number, binomial, factorial, reciprocal_factorial

MATRIX_NAMES = ("K", "B", "C", "R", "W", "w")


class RationalMatrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("n_rows", "n_cols", "_rows")

    def __init__(self, rows: Iterable[Iterable[Number]]):
        rows = tuple(tuple(Fraction(e) for e in r) for r in rows)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise DomainError("ragged matrix rows")
        self._rows = rows
        self.n_rows = len(rows)
        self.n_cols = widths.pop() if widths else 0

    @classmethod
    def from_function(cls, n: int, entry) -> "RationalMatrix":
        return cls([[entry(i, j) for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_function(n, lambda i, j: int(i == j))

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def entries(self) -> tuple[Fraction, ...]:
        """Row-major flat entries."""
        return tuple(e for r in self._rows for e in r)

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._rows == other._rows and self.n_cols == other.n_cols

    def __hash__(self) -> int:
        return hash((self.n_cols, self._rows))

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise DomainError("shape mismatch")
        return RationalMatrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix([[self._rows[i][j] for j in cols] for i in rows])

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self._rows)
        return f"RationalMatrix([{body}])"


def _k_entry(x: int, y: int, i: int, j: int) -> Fraction:
    return (
        factorial(x + y + i + j - 1)
        * reciprocal_factorial(x + 2 * i - j)
        * reciprocal_factorial(y + 2 * j - i)
    )


_ENTRY = {
    "B": lambda x, i, j: binomial(x + i + j, i),
    "C": lambda x, i, j: binomial(x + i + j, 2 * j - i),
    "R": lambda x, i, j: binomial(x + i + j, 2 * i - j) + 2 * binomial(x + i + j + 2, 2 * i - j + 1),
    "W": lambda x, i, j: binomial(x + i + j + 1, 2 * i - j + 1) + binomial(x + i + j, 2 * i - j),
    "w": lambda x, i, j: binomial(x + i + j + 1, 2 * i - j) + binomial(x + i + j, 2 * i - j - 1),
}


def build(name: str, n: int, x: int, y: Optional[int] = None) -> RationalMatrix:
    """Build the ``n x n`` matrix called ``name`` at parameter ``x`` (and ``y`` for K).

    ``K`` is the factorial-ratio matrix ``(x+y+i+j-1)!/((x+2i-j)!(y+2j-i)!)``;
    ``B``, ``C``, ``R``, ``W``, ``w`` are the binomial matrices whose
    determinants count cyclically symmetric and related plane partitions.
    """
    if n < 0:
        raise DomainError(f"matrix size must be >= 0, got {n}")
    if name == "K":
        if y is None:
            raise DomainError("matrix K needs both x and y")
        if x + y <= 0:
            raise DomainError(f"matrix K needs x + y > 0, got x={x}, y={y}")
        return RationalMatrix.from_function(n, lambda i, j: _k_entry(x, y, i, j))
    if name not in _ENTRY:
        raise DomainError(f"unknown matrix name {name!r}; expected one of {MATRIX_NAMES}")
    if y is not None:
        raise DomainError(f"matrix {name} takes only x")
    f = _ENTRY[name]
    return RationalMatrix.from_function(n, lambda i, j: f(x, i, j))


def _require_square(M: RationalMatrix) -> None:
    if not M.is_square:
        raise DomainError(f"determinant of non-square {M.n_rows}x{M.n_cols} matrix")


def _bareiss(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant(M: RationalMatrix) -> Fraction:
    """Exact determinant by fraction-free elimination.

    Each row is scaled to integers by the lcm of its denominators, the
    integer determinant is computed with Bareiss' algorithm, and the scale is
    divided back out.
    """
    _require_square(M)
    scale = 1
    int_rows = []
    for r in M.rows:
        l = reduce(math.lcm, (e.denominator for e in r), 1)
        scale *= l
        int_rows.append([e.numerator * (l // e.denominator) for e in r])
    return Fraction(_bareiss(int_rows), scale)


def determinant_condensation(M: RationalMatrix) -> tuple[Fraction, str]:
    """Determinant by the Desnanot-Jacobi recurrence on contiguous minors.

    Returns ``(value, "condensation")``, or ``(value, "fallback")`` when a
    vanishing interior minor made the recurrence undefined and the value was
    recomputed by elimination.
    """
    _require_square(M)
    n = M.n_rows
    if n == 0:
        return Fraction(1), "condensation"
    prev2 = [[Fraction(1)] * (n + 1) for _ in range(n + 1)]
    prev1 = [list(r) for r in M.rows]
    for size in range(2, n + 1):
        m = n - size + 1
        cur = [[Fraction(0)] * m for _ in range(m)]
        for i in range(m):
            for j in range(m):
                divisor = prev2[i + 1][j + 1]
                if divisor == 0:
                    return determinant(M), "fallback"
                cur[i][j] = (
                    prev1[i][j] * prev1[i + 1][j + 1] - prev1[i][j + 1] * prev1[i + 1][j]
                ) / divisor
        prev2, prev1 = prev1, cur
    return prev1[0][0], "condensation"


def determinant_leibniz(M: RationalMatrix) -> Fraction:
    """Brute-force permutation expansion; only sensible for n <= 7."""
    _require_square(M)
    n = M.n_rows
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        prod = Fraction(1)
        for i, p in enumerate(perm):
            prod *= M[i, p]
            if prod == 0:
                break
        else:
            total += permutation_sign(perm) * prod
    return total


def permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def sum_principal_minors(M: RationalMatrix) -> Fraction:
    """Sum of all principal minors of ``M``, i.e. ``det(I + M)``."""
    _require_square(M)
    return determinant(RationalMatrix.identity(M.n_rows) + M)


def principal_minor(M: RationalMatrix, index_set: Iterable[int]) -> Fraction:
    idx = sorted(index_set)
    return determinant(M.submatrix(idx, idx))


def sum_principal_minors_bruteforce(M: RationalMatrix) -> Fraction:
    """Explicit sum over all ``2**n`` index subsets (oracle for the identity above)."""
    _require_square(M)
    n = M.n_rows
    return sum(
        (principal_minor(M, S) for k in range(n + 1) for S in itertools.combinations(range(n), k)),
        Fraction(0),
    )
