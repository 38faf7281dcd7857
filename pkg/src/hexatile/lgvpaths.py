"""Non-intersecting lattice paths with north/east steps.

A :class:`PathSystem` fixes start points, end points and a rule weighting a
whole path by its first or last step.  ``lgv_count`` is the Gessel-Viennot
determinant of single-path counts; ``brute_families`` enumerates path tuples
directly and is the oracle for it.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from hexatile.errors import DomainError, ResourceError
from hexatile.exactnum import binomial
from hexatile.matrices import RationalMatrix, determinant

Point = tuple[int, int]

HALF = Fraction(1, 2)


class StepRule(str, enum.Enum):
    PLAIN = "plain"
    HALF_LAST_HORIZONTAL = "half_last_horizontal"
    HALF_FIRST_VERTICAL = "half_first_vertical"


@dataclass(frozen=True)
class PathSystem:
    starts: tuple[Point, ...]
    ends: tuple[Point, ...]
    rule: StepRule = StepRule.PLAIN
    kind: str = "custom"

    def __post_init__(self):
        if len(self.starts) != len(self.ends):
            raise DomainError("a path system needs as many starts as ends")

    def __len__(self) -> int:
        return len(self.starts)


_KIND_RULE = {
    "A": StepRule.HALF_LAST_HORIZONTAL,
    "B": StepRule.HALF_FIRST_VERTICAL,
    "C": StepRule.PLAIN,
}


def pentagon_points(n: int, x: int) -> tuple[tuple[Point, ...], tuple[Point, ...]]:
    """Starts ``(i, 2n-2i-1)`` and ends ``(x+2i, 2n-i-1)`` for ``i < n``."""
    starts = tuple((i, 2 * n - 2 * i - 1) for i in range(n))
    ends = tuple((x + 2 * i, 2 * n - i - 1) for i in range(n))
    return starts, ends


def path_system(kind: str, n: int, x: int, index_set: Optional[Iterable[int]] = None,
                **params) -> PathSystem:
    """Build one of the path systems used by the enumeration arguments.

    kind ``"A"``/``"B"``/``"C"``: the pentagon systems, weighted by last-east,
    first-north, or not at all.  kind ``"minor"``: starts ``(n-i-1, 0)`` and
    ends ``(n-1, x+i)`` for ``i`` in ``index_set``; its determinant is the
    principal minor of ``build("B", n, x)`` on that set.  kind ``"box"``:
    the ``n`` paths encoding tilings of the hexagon ``H(n, x, params["c"])``.
    """
    if kind in _KIND_RULE:
        if n < 1 or x < 0:
            raise DomainError(f"pentagon path system needs n >= 1, x >= 0 (n={n}, x={x})")
        starts, ends = pentagon_points(n, x)
        return PathSystem(starts, ends, _KIND_RULE[kind], kind)
    if kind == "minor":
        if n < 0 or x < 0:
            raise DomainError(f"minor path system needs n, x >= 0 (n={n}, x={x})")
        S = sorted(set(index_set if index_set is not None else range(n)))
        if any(i < 0 or i >= n for i in S):
            raise DomainError(f"index set {S} not contained in 0..{n - 1}")
        starts = tuple((n - i - 1, 0) for i in S)
        ends = tuple((n - 1, x + i) for i in S)
        return PathSystem(starts, ends, StepRule.PLAIN, "minor")
    if kind == "box":
        a, b, c = n, x, params.get("c", 0)
        if min(a, b, c) < 0:
            raise DomainError("box path system needs nonnegative sides")
        starts = tuple((-i, i) for i in range(a))
        ends = tuple((b - i, c + i) for i in range(a))
        return PathSystem(starts, ends, StepRule.PLAIN, "box")
    raise DomainError(f"unknown path system kind {kind!r}")


@lru_cache(maxsize=None)
def _plain_count(dx: int, dy: int) -> int:
    if dx < 0 or dy < 0:
        return 0
    if dx == 0 or dy == 0:
        return 1
    # recursive on purpose: this is the oracle for the binomial closed forms
    return _plain_count(dx - 1, dy) + _plain_count(dx, dy - 1)


def path_count(u: Point, v: Point, rule: StepRule = StepRule.PLAIN) -> Fraction:
    """Weighted number of north/east lattice paths from ``u`` to ``v``."""
    dx, dy = v[0] - u[0], v[1] - u[1]
    if dx < 0 or dy < 0:
        return Fraction(0)
    if dx == 0 and dy == 0:
        return Fraction(1)
    rule = StepRule(rule)
    if rule is StepRule.PLAIN:
        return Fraction(_plain_count(dx, dy))
    if rule is StepRule.HALF_LAST_HORIZONTAL:
        last_east = _plain_count(dx - 1, dy)
        last_north = _plain_count(dx, dy - 1)
        return HALF * last_east + last_north
    first_north = _plain_count(dx, dy - 1)
    first_east = _plain_count(dx - 1, dy)
    return HALF * first_north + first_east


def lgv_matrix(sys: PathSystem) -> RationalMatrix:
    """Entry ``(i, j)`` is the weighted path count from start ``i`` to end ``j``."""
    return RationalMatrix(
        [[path_count(u, v, sys.rule) for v in sys.ends] for u in sys.starts]
    )


def pentagon_entry_closed(kind: str, x: int, i: int, j: int) -> Fraction:
    """Binomial closed form of the A/B/C pentagon matrix entries.

    Agrees with the path count except for the empty path at ``x = i = j = 0``,
    where the binomial form carries a spurious weight.
    """
    m = x + i + j - 1
    if kind == "A":
        return HALF * binomial(m, 2 * i - j) + binomial(m, 2 * i - j - 1)
    if kind == "B":
        return HALF * binomial(m, 2 * i - j - 1) + binomial(m, 2 * i - j)
    if kind == "C":
        return Fraction(binomial(m + 1, 2 * i - j))
    raise DomainError(f"unknown pentagon kind {kind!r}")


def lgv_count(sys: PathSystem) -> Fraction:
    """Determinant of :func:`lgv_matrix`: the weighted count of non-intersecting
    families, valid because every system built here is nonpermutable."""
    return determinant(lgv_matrix(sys))


def _paths(u: Point, v: Point) -> Iterator[tuple[Point, ...]]:
    dx, dy = v[0] - u[0], v[1] - u[1]
    if dx < 0 or dy < 0:
        return

    def rec(p: Point, acc: list[Point]):
        if p == v:
            yield tuple(acc)
            return
        if p[0] < v[0]:
            q = (p[0] + 1, p[1])
            acc.append(q)
            yield from rec(q, acc)
            acc.pop()
        if p[1] < v[1]:
            q = (p[0], p[1] + 1)
            acc.append(q)
            yield from rec(q, acc)
            acc.pop()

    yield from rec(u, [u])


def path_weight(path: tuple[Point, ...], rule: StepRule) -> Fraction:
    if len(path) < 2 or rule is StepRule.PLAIN:
        return Fraction(1)
    if rule is StepRule.HALF_LAST_HORIZONTAL:
        a, b = path[-2], path[-1]
        return HALF if b[0] == a[0] + 1 else Fraction(1)
    a, b = path[0], path[1]
    return HALF if b[1] == a[1] + 1 else Fraction(1)


BRUTE_MAX_PATHS = 4
BRUTE_MAX_COORD = 12


def _check_brute_budget(sys: PathSystem) -> None:
    if len(sys) > BRUTE_MAX_PATHS:
        raise ResourceError(f"brute_families limited to {BRUTE_MAX_PATHS} paths, got {len(sys)}")
    coords = [abs(c) for p in sys.starts + sys.ends for c in p]
    if coords and max(coords) > BRUTE_MAX_COORD:
        raise ResourceError(f"brute_families limited to coordinates <= {BRUTE_MAX_COORD}")


def brute_families(sys: PathSystem, pairing: Optional[tuple[int, ...]] = None) -> Fraction:
    """Sum of weight products over vertex-disjoint path tuples, enumerated directly.

    Path ``i`` runs from ``starts[i]`` to ``ends[pairing[i]]`` (identity by default).
    """
    _check_brute_budget(sys)
    k = len(sys)
    pairing = tuple(range(k)) if pairing is None else pairing
    options = [
        [(set(p), path_weight(p, sys.rule)) for p in _paths(sys.starts[i], sys.ends[pairing[i]])]
        for i in range(k)
    ]

    def rec(i: int, used: set) -> Fraction:
        if i == k:
            return Fraction(1)
        total = Fraction(0)
        for pts, w in options[i]:
            if used.isdisjoint(pts):
                total += w * rec(i + 1, used | pts)
        return total

    return rec(0, set())


def is_nonpermutable(sys: PathSystem) -> bool:
    """True if only the identity pairing admits a vertex-disjoint family."""
    k = len(sys)
    for perm in itertools.permutations(range(k)):
        if perm == tuple(range(k)):
            continue
        if brute_families(PathSystem(sys.starts, sys.ends, StepRule.PLAIN), perm) != 0:
            return False
    return True
