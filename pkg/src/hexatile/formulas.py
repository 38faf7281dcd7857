"""Closed product formulas for the symmetry-class counts.

All products are evaluated over exact rationals; results documented as
integers are checked to be integral before being returned.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache

from hexatile.errors import DomainError
from hexatile.exactnum import (
    Polynomial,
    as_integer,
    factorial,
    interpolate,
    shifted_factorial,
)


class ClassTag(str, enum.Enum):
    BASE = "base"
    CS = "cs"
    CSTC = "cstc"
    CSSC = "cssc"
    TSSC = "tssc"
    TC = "tc"
    SC = "sc"


def detK_closed(n: int, x: int, y: int) -> Fraction:
    """Product evaluation of ``det K_n(x, y)``."""
    if n < 0 or x < 0 or y < 0 or x + y <= 0:
        raise DomainError(f"detK_closed needs n, x, y >= 0 and x + y > 0 (got {n}, {x}, {y})")
    out = Fraction(1)
    for i in range(n):
        out *= Fraction(
            factorial(i)
            * factorial(x + y + i - 1)
            * shifted_factorial(2 * x + y + 2 * i, i)
            * shifted_factorial(x + 2 * y + 2 * i, i),
            factorial(x + 2 * i) * factorial(y + 2 * i),
        )
    return out


def L_closed(kind: str, n: int, x: int) -> Fraction:
    """Tiling generating function of ``A_{n,x}`` or ``B_{n,x}`` in product form.

    ``2**-n * det K_n(x, 0)`` times ``prod (x + 3i)`` for A, ``prod (2x + 3i)`` for B.
    """
    if kind not in ("A", "B"):
        raise DomainError(f"L_closed is defined for kinds A and B, got {kind!r}")
    if n < 1:
        raise DomainError(f"L_closed needs n >= 1, got {n}")
    if x < 1:
        raise DomainError("L_closed needs x >= 1; use the lattice-path route for x = 0")
    out = detK_closed(n, x, 0) / 2**n
    for i in range(n):
        out *= (x + 3 * i) if kind == "A" else (2 * x + 3 * i)
    return out


def _cs_even(m: int, t: int) -> Fraction:
    # CS(2m, 2t+1), m, t >= 1
    out = Fraction(factorial(m) * factorial(t - 1), factorial(2 * m))
    for i in range(m + 1):
        out *= Fraction(shifted_factorial(t + 2 * i, i + 1), factorial(t + m + i))
    for i in range(m):
        out *= Fraction(
            factorial(i) ** 2
            * shifted_factorial(2 * t + 2 * i + 2, i + 1) ** 2
            * factorial(t + i)
            * shifted_factorial(t + 2 * i + 1, i),
            factorial(2 * i) ** 2,
        )
    return out


def _cs_odd(m: int, t: int) -> Fraction:
    # CS(2m-1, 2t+1), m, t >= 1
    out = Fraction(factorial(t - 1) * shifted_factorial(2 * t + 2 * m, m), factorial(t + m - 1))
    for i in range(m):
        out *= Fraction(
            factorial(i) ** 2
            * shifted_factorial(2 * t + 2 * i, i) ** 2
            * factorial(t + i)
            * shifted_factorial(t + 2 * i, i + 1)
            * shifted_factorial(t + 2 * i + 1, i),
            factorial(2 * i) ** 2 * factorial(t + m + i),
        )
    return out


def cs_formula_direct(n: int, x: int) -> int:
    """``CS(n, x)`` from the product formulas, valid for odd ``x >= 3``."""
    if n < 1:
        raise DomainError(f"CS needs n >= 1, got {n}")
    if x < 3 or x % 2 == 0:
        raise DomainError(f"direct CS product needs odd x >= 3, got {x}")
    t = (x - 1) // 2
    val = _cs_even(n // 2, t) if n % 2 == 0 else _cs_odd((n + 1) // 2, t)
    return as_integer(val, f"CS({n},{x})")


def cs_degree_bound(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def cs_polynomial(n: int, extra: int = 0) -> Polynomial:
    """``P_n(t)`` with ``CS(n, 2t+1) = P_n(t)``, interpolated from ``t = 1, 2, ...``.

    Uses ``deg + 1 + extra`` samples, ``deg = n(n-1)/2``.
    """
    if n < 1:
        raise DomainError(f"P_n needs n >= 1, got {n}")
    pts = [(t, cs_formula_direct(n, 2 * t + 1)) for t in range(1, cs_degree_bound(n) + 2 + extra)]
    return interpolate(pts)


def CS_closed(n: int, x: int) -> int:
    """Number of cyclically symmetric tilings of the cored hexagon ``H_{n,x}``."""
    if n < 0 or x < 0:
        raise DomainError(f"CS needs n, x >= 0 (got {n}, {x})")
    if n == 0:
        return 1
    if x % 2 == 1 and x >= 3:
        return cs_formula_direct(n, x)
    return as_integer(cs_polynomial(n)(Fraction(x - 1, 2)), f"CS({n},{x})")


def CSTC_closed(n: int, x: int) -> int:
    """Cyclically symmetric transpose-complementary tilings of ``H_{n,x}``.

    Zero unless ``n`` and ``x`` are both even; otherwise the telescoping
    product ``2**(-n/2) prod_k CS(2k+1, x) / CS(2k, x)``.
    """
    if n < 0 or x < 0:
        raise DomainError(f"CSTC needs n, x >= 0 (got {n}, {x})")
    if n % 2 or x % 2:
        return 0
    half = n // 2
    out = Fraction(1, 2**half)
    for k in range(half):
        out *= Fraction(CS_closed(2 * k + 1, x), CS_closed(2 * k, x))
    return as_integer(out, f"CSTC({n},{x})")


def _check_even_size(two_n: int) -> int:
    if two_n < 2 or two_n % 2:
        raise DomainError(f"self-complementary classes need an even size >= 2, got {two_n}")
    return two_n // 2


def TSSC_closed(two_n: int) -> int:
    n = _check_even_size(two_n)
    out = Fraction(1)
    for i in range(n):
        out *= Fraction(factorial(3 * i + 1), factorial(n + i))
    return as_integer(out, f"TSSC({two_n})")


def CSSC_closed(two_n: int) -> int:
    n = _check_even_size(two_n)
    out = Fraction(1)
    for i in range(n):
        out *= Fraction(factorial(3 * i + 1), factorial(n + i))
    return as_integer(out * out, f"CSSC({two_n})")


def TC_closed(a: int, b: int) -> int:
    """Transpose-complementary tilings of ``H(a, a, 2b)``.

    Bases ``b+j`` (over ``j``) and ``2b+2j+1`` (over ``2j+1``) with exponents
    rising by one to the middle and falling back.
    """
    if a < 1 or b < 0:
        raise DomainError(f"TC needs a >= 1, b >= 0 (got {a}, {b})")
    out = Fraction(1)
    for j in range(1, a):
        out *= Fraction(b + j, j) ** min(j, a - j)
    for j in range(1, a - 1):
        out *= Fraction(2 * b + 2 * j + 1, 2 * j + 1) ** min(j, a - 1 - j)
    return as_integer(out, f"TC({a},{a},{2 * b})")


def macmahon_PP(a: int, b: int, c: int) -> int:
    """MacMahon's box formula: plane partitions in an ``a x b x c`` box."""
    if min(a, b, c) < 0:
        raise DomainError(f"PP needs nonnegative sides, got {(a, b, c)}")
    out = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                out *= Fraction(i + j + k - 1, i + j + k - 2)
    return as_integer(out, f"PP({a},{b},{c})")


def SC_closed(a: int, c: int) -> int:
    """Self-complementary tilings of ``H(a, a, c)``."""
    if a < 0 or c < 0:
        raise DomainError(f"SC needs a, c >= 0 (got {a}, {c})")
    if a % 2 and c % 2:
        return 0
    if a % 2 == 0 and c % 2 == 0:
        x, y = a // 2, c // 2
        return macmahon_PP(x, x, y) ** 2
    if a % 2 == 0:
        x, y = a // 2, (c - 1) // 2
        return macmahon_PP(x, x, y) * macmahon_PP(x, x, y + 1)
    x, y = (a - 1) // 2, c // 2
    return macmahon_PP(x, x + 1, y) ** 2
