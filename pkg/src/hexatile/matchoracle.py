"""Brute-force ground truth: perfect matchings of the dual graph of a region.

Cells are numbered in canonical order (row by row) and a state is the bit
mask of covered cells.  The search always branches on the first uncovered
cell.  In row-major order its earlier neighbours are already covered, so it
has at most two open partners and dead ends surface immediately.

Invariant tilings under a symmetry group are enumerated directly: choosing a
lozenge places its whole orbit at once, so only unions of orbits are built.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from hexatile.errors import DomainError, ResourceError
from hexatile.regions import (
    Cell,
    Lozenge,
    Orient,
    Region,
    normalize_symmetry,
    symmetry_cell_map,
    tiling_key,
)

DEFAULT_CELL_BUDGET = 250
BUDGET_ENV = "HEXATILE_CELL_BUDGET"


def cell_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_CELL_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def _check_budget(region: Region, budget: Optional[int]) -> None:
    budget = cell_budget() if budget is None else budget
    if len(region.cells) > budget:
        raise ResourceError(
            f"region {region.name} has {len(region.cells)} cells, over the oracle budget of {budget}"
        )


@dataclass(frozen=True)
class DualGraph:
    """Vertices are the cells (canonical order); edges are weighted lozenge positions."""

    vertices: tuple[Cell, ...]
    edges: tuple[tuple[Lozenge, Fraction], ...]

    def is_bipartite(self) -> bool:
        return all(l.up.orient is Orient.UP and l.down.orient is Orient.DOWN for l, _ in self.edges)


def dual_graph(region: Region) -> DualGraph:
    return DualGraph(
        tuple(region.sorted_cells()),
        tuple((l, region.weight(l)) for l in region.lozenge_positions()),
    )


@dataclass(frozen=True)
class MatchingCount:
    value: Fraction
    cardinality: int


class _Search:
    """Precomputed bit masks for one region and one symmetry group."""

    def __init__(self, region: Region, group: Sequence = ()):
        self.region = region
        self.cells = region.sorted_cells()
        self.index = {c: i for i, c in enumerate(self.cells)}
        self.n = len(self.cells)
        positions = region.lozenge_positions()
        # options[i]: moves whose chosen lozenge covers cell i, in a fixed order
        self.options: list[list[tuple[int, Fraction, tuple[Lozenge, ...]]]] = [
            [] for _ in range(self.n)
        ]
        for loz in positions:
            orbit = {loz}
            for g in group:
                orbit.add(Lozenge.of(g(loz.up), g(loz.down)))
            orbit_cells = [c for l in orbit for c in l]
            if len(orbit_cells) != len(set(orbit_cells)):
                continue  # two images overlap: never part of an invariant tiling
            mask = 0
            for c in orbit_cells:
                mask |= 1 << self.index[c]
            weight = Fraction(1)
            for l in orbit:
                weight *= region.weight(l)
            members = tuple(sorted(orbit, key=Lozenge.key))
            for c in (loz.up, loz.down):
                self.options[self.index[c]].append((mask, weight, members))
        for opts in self.options:
            opts.sort(key=lambda o: [l.key() for l in o[2]])
        self.full = (1 << self.n) - 1

    def first_free(self, covered: int) -> int:
        free = ~covered & self.full
        return (free & -free).bit_length() - 1

    def moves(self, covered: int):
        i = self.first_free(covered)
        seen = set()
        for mask, weight, members in self.options[i]:
            if mask & covered or members in seen:
                continue
            seen.add(members)
            yield mask, weight, members

    def enumerate(self) -> Iterator[tuple[Lozenge, ...]]:
        chosen: list[tuple[Lozenge, ...]] = []

        def rec(covered: int):
            if covered == self.full:
                yield tuple(l for grp in chosen for l in grp)
                return
            for mask, _, members in self.moves(covered):
                chosen.append(members)
                yield from rec(covered | mask)
                chosen.pop()

        yield from rec(0)

    def count(self) -> tuple[Fraction, int]:
        """Weighted and unweighted totals, memoized on the covered mask."""
        memo: dict[int, tuple[Fraction, int]] = {self.full: (Fraction(1), 1)}
        # iterative DFS to stay clear of the recursion limit on large regions
        stack = [(0, None)]
        while stack:
            covered, pending = stack[-1]
            if covered in memo:
                stack.pop()
                continue
            if pending is None:
                pending = list(self.moves(covered))
                stack[-1] = (covered, pending)
                missing = [covered | m for m, _, _ in pending if (covered | m) not in memo]
                if missing:
                    stack.extend((c, None) for c in missing)
                    continue
            value, card = Fraction(0), 0
            for mask, weight, _ in pending:
                v, k = memo[covered | mask]
                value += weight * v
                card += k
            memo[covered] = (value, card)
            stack.pop()
        return memo[0]


def enumerate_tilings(region: Region, budget: Optional[int] = None) -> list[frozenset]:
    """All tilings of ``region``, sorted lexicographically by their sorted cell keys."""
    _check_budget(region, budget)
    if len(region.cells) % 2:
        return []
    found = [frozenset(t) for t in _Search(region).enumerate()]
    found.sort(key=tiling_key)
    return found


def tiling_weight(region: Region, tiling: Iterable[Lozenge]) -> Fraction:
    w = Fraction(1)
    for l in tiling:
        w *= region.weight(l)
    return w


def matching_count(region: Region, budget: Optional[int] = None) -> MatchingCount:
    _check_budget(region, budget)
    if len(region.cells) % 2:
        return MatchingCount(Fraction(0), 0)
    value, card = _Search(region).count()
    return MatchingCount(value, card)


def tiling_gen_fn(region: Region, budget: Optional[int] = None) -> Fraction:
    """Sum over tilings of the product of occupied-position weights."""
    return matching_count(region, budget).value


def count_tilings(region: Region, budget: Optional[int] = None) -> int:
    return matching_count(region, budget).cardinality


def symmetry_group(region: Region, syms: Iterable[str]) -> list:
    """All cell maps in the group generated by ``syms``, identity excluded."""
    gens = [symmetry_cell_map(normalize_symmetry(s), region) for s in syms]
    cells = region.sorted_cells()
    idx = {c: i for i, c in enumerate(cells)}

    def as_perm(g):
        return tuple(idx[g(c)] for c in cells)

    ident = tuple(range(len(cells)))
    perms = {ident}
    frontier = [ident]
    gen_perms = [as_perm(g) for g in gens]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gen_perms:
                q = tuple(g[i] for i in p)
                if q not in perms:
                    perms.add(q)
                    nxt.append(q)
        frontier = nxt
    perms.discard(ident)
    out = []
    for p in sorted(perms):
        out.append(lambda c, p=p: cells[p[idx[c]]])
    return out


def count_invariant(region: Region, syms: Iterable[str], budget: Optional[int] = None) -> int:
    """Number of tilings of ``region`` fixed by every symmetry in ``syms``."""
    _check_budget(region, budget)
    syms = [normalize_symmetry(s) for s in syms]
    if len(region.cells) % 2:
        return 0
    group = symmetry_group(region, syms)
    return _Search(region, group).count()[1]


def enumerate_invariant(region: Region, syms: Iterable[str],
                        budget: Optional[int] = None) -> list[frozenset]:
    _check_budget(region, budget)
    syms = [normalize_symmetry(s) for s in syms]
    if len(region.cells) % 2:
        return []
    group = symmetry_group(region, syms)
    found = [frozenset(t) for t in _Search(region, group).enumerate()]
    found.sort(key=tiling_key)
    return found
