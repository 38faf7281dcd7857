"""Regions of the triangular lattice, their lozenge positions and symmetries.

Lattice vertices are integer pairs ``(a, b)`` standing for ``a*e0 + b*e1``
with ``e0 = (1, 0)`` and ``e1 = (1/2, sqrt(3)/2)``.  The rhombic lattice cell
``(u, v)`` spanned by ``e0`` and ``e1`` is split by its short diagonal into

* ``Up(u, v)`` with vertices ``(u, v), (u+1, v), (u, v+1)`` and
* ``Down(u, v)`` with vertices ``(u+1, v), (u, v+1), (u+1, v+1)``.

``Up(u, v)`` shares an edge with ``Down(u, v)``, ``Down(u-1, v)`` and
``Down(u, v-1)``.  Every geometric map below is an exact integer map on
vertices; no floating point is involved.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, NamedTuple, Optional

from hexatile.errors import DomainError
from hexatile.lgvpaths import HALF, path_system

Vertex = tuple[int, int]


class Orient(enum.IntEnum):
    UP = 0
    DOWN = 1


class Cell(NamedTuple):
    u: int
    v: int
    orient: Orient

    def vertices(self) -> tuple[Vertex, Vertex, Vertex]:
        u, v = self.u, self.v
        if self.orient is Orient.UP:
            return (u, v), (u + 1, v), (u, v + 1)
        return (u + 1, v), (u, v + 1), (u + 1, v + 1)

    def centroid(self) -> tuple[Fraction, Fraction]:
        off = Fraction(1, 3) if self.orient is Orient.UP else Fraction(2, 3)
        return self.u + off, self.v + off

    def neighbours(self) -> tuple["Cell", "Cell", "Cell"]:
        u, v = self.u, self.v
        if self.orient is Orient.UP:
            return Down(u, v), Down(u - 1, v), Down(u, v - 1)
        return Up(u, v), Up(u + 1, v), Up(u, v + 1)


def Up(u: int, v: int) -> Cell:
    return Cell(u, v, Orient.UP)


def Down(u: int, v: int) -> Cell:
    return Cell(u, v, Orient.DOWN)


def cell_key(c: Cell) -> tuple[int, int, int]:
    """Canonical sort key: row ``v`` first, then ``u``, Up before Down."""
    return (c.v, c.u, int(c.orient))


def cell_from_vertices(verts: Iterable[Vertex]) -> Cell:
    verts = list(verts)
    sums = sorted(a + b for a, b in verts)
    u = min(a for a, _ in verts)
    v = min(b for _, b in verts)
    if sums[1] == sums[2] == sums[0] + 1:
        return Up(u, v)
    if sums[0] == sums[1] == sums[2] - 1:
        return Down(u, v)
    raise DomainError(f"vertices {verts} do not bound a unit triangle")


class Lozenge(NamedTuple):
    """A lozenge position: an Up cell and an edge-adjacent Down cell."""

    up: Cell
    down: Cell

    @classmethod
    def of(cls, a: Cell, b: Cell) -> "Lozenge":
        if a.orient == b.orient:
            raise DomainError(f"cells {a} and {b} have the same orientation")
        up, down = (a, b) if a.orient is Orient.UP else (b, a)
        if down not in up.neighbours():
            raise DomainError(f"cells {a} and {b} are not edge-adjacent")
        return cls(up, down)

    def key(self) -> tuple:
        return tuple(sorted((cell_key(self.up), cell_key(self.down))))

    def vertices(self) -> tuple[Vertex, Vertex, Vertex, Vertex]:
        """Corners of the rhombus in cyclic order."""
        a = self.up.vertices()
        b = self.down.vertices()
        shared = [p for p in a if p in b]
        (ua,) = [p for p in a if p not in b]
        (db,) = [p for p in b if p not in a]
        return ua, shared[0], db, shared[1]

    def kind(self) -> int:
        """Which of the three lozenge orientations this is (0, 1 or 2)."""
        up, down = self.up, self.down
        if (down.u, down.v) == (up.u, up.v):
            return 0
        if (down.u, down.v) == (up.u - 1, up.v):
            return 1
        return 2


Tiling = frozenset  # frozenset[Lozenge]


def tiling_key(tiling: Iterable[Lozenge]) -> tuple:
    return tuple(sorted(l.key() for l in tiling))


@dataclass(frozen=True)
class Region:
    """A finite set of unit triangles with weights on some lozenge positions.

    Positions absent from ``weights`` have weight 1.  ``holes`` lists vertex
    triples of removed triangles (used only for drawing).
    """

    cells: frozenset
    weights: Mapping[Lozenge, Fraction] = field(default_factory=dict)
    name: str = "region"
    holes: tuple = ()

    def __post_init__(self):
        for loz, w in self.weights.items():
            if loz.up not in self.cells or loz.down not in self.cells:
                raise DomainError(f"weighted position {loz} is not inside the region")
            if w <= 0:
                raise DomainError(f"weight of {loz} must be positive, got {w}")

    def __len__(self) -> int:
        return len(self.cells)

    def weight(self, loz: Lozenge) -> Fraction:
        return Fraction(self.weights.get(loz, 1))

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells, key=cell_key)

    def count_orient(self, orient: Orient) -> int:
        return sum(1 for c in self.cells if c.orient is orient)

    def lozenge_positions(self) -> list[Lozenge]:
        """All positions with both cells inside, in canonical order."""
        out = []
        for c in self.sorted_cells():
            if c.orient is Orient.UP:
                for d in c.neighbours():
                    if d in self.cells:
                        out.append(Lozenge(c, d))
        return sorted(out, key=Lozenge.key)


def _cells_where(pred: Callable[[Fraction, Fraction], bool], u_range, v_range) -> frozenset:
    out = set()
    for u in u_range:
        for v in v_range:
            for c in (Up(u, v), Down(u, v)):
                a, b = c.centroid()
                if pred(a, b):
                    out.add(c)
    return frozenset(out)


def _hexagon_cells(s: tuple[int, int, int, int, int, int]) -> frozenset:
    """Cells of the hexagon whose sides, walked counter-clockwise from the
    origin, have lengths ``s`` along directions 0, 60, ..., 300 degrees."""
    s1, s2, s3, s4, s5, s6 = s
    amax, top = s1, s2 + s3
    amin = s1 - s3 - s4
    diag = s1 + s2

    def inside(a, b):
        return amin < a < amax and 0 < b < top and 0 < a + b < diag

    return _cells_where(inside, range(amin - 1, amax + 1), range(-1, top + 1))


def hexagon(a: int, b: int, c: int) -> Region:
    """The hexagon ``H(a, b, c)``: sides a, b, c, a, b, c with 120 degree angles.

    Its corners are ``(0,0), (a,0), (a,b), (a-c,b+c), (-c,b+c), (-c,c)``; the
    sides of lengths ``a`` and ``b`` meet at ``(a, 0)``.
    """
    if min(a, b, c) < 0:
        raise DomainError(f"hexagon sides must be nonnegative, got {(a, b, c)}")
    if a == b == c == 0:
        raise DomainError("hexagon with all sides zero")
    cells = _hexagon_cells((a, b, c, a, b, c))
    return Region(cells, {}, f"H({a},{b},{c})")


def cored_hexagon(n: int, x: int) -> Region:
    """Hexagon with sides n, n+x, n, n+x, n, n+x minus a central triangle of side x.

    The removed triangle points down, so its corners point at the three
    sides of length ``n``.
    """
    if n < 1 or x < 0:
        raise DomainError(f"cored hexagon needs n >= 1, x >= 0 (n={n}, x={x})")
    cells = _hexagon_cells((n, n + x, n, n + x, n, n + x))
    # core corners (0, n), (-x, n+x), (0, n+x); centroid is the hexagon centre
    core = {c for c in cells if _in_core(c, n, x)}
    holes = (((0, n), (-x, n + x), (0, n + x)),) if x > 0 else ()
    return Region(cells - core, {}, f"H_{{{n},{x}}}", holes)


def _in_core(c: Cell, n: int, x: int) -> bool:
    a, b = c.centroid()
    return a < 0 and b < n + x and a + b > n


# Gessel-Viennot encoding of pentagon tilings.  The path lattice point
# p = (a, b) owns the pair of cells U_p = Up(a-1, b) and D_p = Down(a-1, b).
# An east step p -> p+(1,0) is the lozenge {D_p, U_{p+(1,0)}}, a north step
# p -> p+(0,1) is {D_p, U_{p+(0,1)}}, and {U_p, D_p} is the lozenge at a
# point no path visits.  Starts lack U, ends lack D.

def _U(p: tuple[int, int]) -> Cell:
    return Up(p[0] - 1, p[1])


def _D(p: tuple[int, int]) -> Cell:
    return Down(p[0] - 1, p[1])


def region_from_paths(starts, ends) -> tuple[frozenset, set]:
    """Cells of the region whose tilings are the non-intersecting families.

    Returns the cell set and the set of lattice points used.
    """
    pts = set()
    for u in starts:
        for v in ends:
            for a in range(u[0], v[0] + 1):
                for b in range(u[1], v[1] + 1):
                    pts.add((a, b))
    starts_s, ends_s = set(starts), set(ends)
    cells = set()
    for p in pts:
        if p not in starts_s:
            cells.add(_U(p))
        if p not in ends_s:
            cells.add(_D(p))
    return frozenset(cells), pts


def weighted_pentagon(kind: str, n: int, x: int) -> Region:
    """The pentagon ``A_{n,x}``, ``B_{n,x}`` or ``C_{n,x}`` with its 1/2 weights.

    The cell set is the one forced by the lattice-path encoding with starts
    ``(i, 2n-2i-1)`` and ends ``(x+2i, 2n-i-1)``.  A halves the final east
    step into each end, B halves the first north step out of each start, C
    has no weights.
    """
    if kind not in ("A", "B", "C"):
        raise DomainError(f"unknown pentagon kind {kind!r}")
    sys = path_system(kind, n, x)
    cells, pts = region_from_paths(sys.starts, sys.ends)
    weights = {}
    if kind == "A":
        for v in sys.ends:
            p = (v[0] - 1, v[1])
            if p in pts and p not in sys.ends:
                weights[Lozenge.of(_D(p), _U(v))] = HALF
    elif kind == "B":
        for u in sys.starts:
            q = (u[0], u[1] + 1)
            if q in pts and q not in sys.starts and u not in sys.ends:
                weights[Lozenge.of(_D(u), _U(q))] = HALF
    return Region(cells, weights, f"{kind}_{{{n},{x}}}")


# ---------------------------------------------------------------------------
# symmetries

SYMMETRIES = ("t", "t'", "r", "k")
_SYM_ALIASES = {"t′": "t'", "tp": "t'", "tprime": "t'"}

Linear = tuple[tuple[int, int], tuple[int, int]]


def _mat_mul(A: Linear, B: Linear) -> Linear:
    return (
        (A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
        (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]),
    )


_IDENT: Linear = ((1, 0), (0, 1))
# (a, b) -> (-b, a + b), rotation by 60 degrees, as a matrix acting on columns
_ROT60: Linear = ((0, -1), (1, 1))
# (a, b) -> (a + b, -b), reflection in the horizontal axis
_REFL0: Linear = ((1, 1), (0, -1))


def _rot(k: int) -> Linear:
    M = _IDENT
    for _ in range(k % 6):
        M = _mat_mul(_ROT60, M)
    return M


def _reflection(half_turns: int) -> Linear:
    """Reflection in the line at ``30 * half_turns`` degrees."""
    return _mat_mul(_rot(half_turns), _REFL0)


def normalize_symmetry(s: str) -> str:
    s = _SYM_ALIASES.get(s, s)
    if s not in SYMMETRIES:
        raise DomainError(f"unknown symmetry {s!r}; expected one of {SYMMETRIES}")
    return s


def region_center(region: Region) -> tuple[Fraction, Fraction]:
    if not region.cells:
        raise DomainError("empty region has no centre")
    sa = sum((c.centroid()[0] for c in region.cells), Fraction(0))
    sb = sum((c.centroid()[1] for c in region.cells), Fraction(0))
    n = len(region.cells)
    return sa / n, sb / n


def _affine_cell_map(M: Linear, center) -> Callable[[Cell], Cell]:
    ca, cb = center

    def vmap(p: Vertex) -> Vertex:
        da, db = p[0] - ca, p[1] - cb
        a = M[0][0] * da + M[0][1] * db + ca
        b = M[1][0] * da + M[1][1] * db + cb
        if a.denominator != 1 or b.denominator != 1:
            raise DomainError("symmetry does not map lattice vertices to lattice vertices")
        return int(a), int(b)

    def cmap(c: Cell) -> Cell:
        return cell_from_vertices(vmap(p) for p in c.vertices())

    return cmap


def _preserves(region: Region, cmap: Callable[[Cell], Cell]) -> bool:
    try:
        if any(cmap(c) not in region.cells for c in region.cells):
            return False
    except DomainError:
        return False
    for loz, w in region.weights.items():
        if region.weight(_map_lozenge(cmap, loz)) != w:
            return False
    return True


def _map_lozenge(cmap: Callable[[Cell], Cell], loz: Lozenge) -> Lozenge:
    return Lozenge.of(cmap(loz.up), cmap(loz.down))


# Candidate axes through the centre, in order of preference.  For ``t`` the
# axis runs parallel to a lattice direction (it contains lattice vertices);
# 120 degrees first, which is the diagonal of H(a, a, c) through the corner
# where the a- and b-sides meet.  For ``t'`` the axis is perpendicular to a
# lattice direction; 30 degrees first, perpendicular to the c-sides.
_AXES = {"t": (4, 0, 2), "t'": (1, 3, 5)}


def symmetry_cell_map(s: str, region: Region) -> Callable[[Cell], Cell]:
    """The cell permutation induced by ``s`` on ``region``.

    Raises :class:`DomainError` if the region is not closed under ``s``.
    """
    s = normalize_symmetry(s)
    center = region_center(region)
    if s == "r":
        candidates = [_rot(2)]
    elif s == "k":
        candidates = [_rot(3)]
    else:
        candidates = [_reflection(h) for h in _AXES[s]]
    for M in candidates:
        cmap = _affine_cell_map(M, center)
        if _preserves(region, cmap):
            return cmap
    raise DomainError(f"region {region.name} is not closed under symmetry {s}")


def apply_symmetry(s: str, region: Region, tiling: Iterable[Lozenge]) -> frozenset:
    """Image of ``tiling`` under the symmetry ``s`` of ``region``."""
    cmap = symmetry_cell_map(s, region)
    return frozenset(_map_lozenge(cmap, loz) for loz in tiling)


def is_invariant(s: str, region: Region, tiling: Iterable[Lozenge]) -> bool:
    tiling = frozenset(tiling)
    return apply_symmetry(s, region, tiling) == tiling


def cells_of(tiling: Iterable[Lozenge]) -> list[Cell]:
    return [c for loz in tiling for c in loz]


def is_tiling(region: Region, tiling: Iterable[Lozenge]) -> bool:
    cells = cells_of(tiling)
    return len(cells) == len(set(cells)) and set(cells) == set(region.cells)


def region_from_cells(cells: Iterable[Cell], weights: Optional[Mapping] = None,
                      name: str = "region") -> Region:
    return Region(frozenset(cells), dict(weights or {}), name)
