"""Command-line front end: ``count``, ``verify`` and ``render``.

Exit codes: 0 success, 1 an identity failed, 2 usage or domain error,
3 the brute-force oracle's cell budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence

from hexatile import formulas, lgvpaths, matchoracle, matrices, regions, verify
from hexatile.errors import DomainError, ResourceError
from hexatile.exactnum import format_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

CLASSES = ("base", "cs", "cstc", "cssc", "tssc", "tc", "sc", "la", "lb", "lc")
METHODS = ("formula", "det", "brute")


class UsageError(Exception):
    pass


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"class {args.cls} needs {' '.join(missing)}")
    return [getattr(args, n) for n in names]


def _box_lgv(a: int, b: int, c: int) -> Fraction:
    return lgvpaths.lgv_count(lgvpaths.path_system("box", a, b, c=c))


def _even_size(size: int) -> Optional[str]:
    if size < 0:
        raise DomainError(f"size must be nonnegative, got {size}")
    if size % 2 or size == 0:
        return f"no self-complementary tilings for size {size}: the size must be even and positive"
    return None


def _count(args) -> tuple[Fraction, Optional[str]]:
    """Return (value, note); a note accompanies the parity-forced zeros."""
    cls, method = args.cls, args.method
    budget = matchoracle.cell_budget()

    if cls == "base":
        a, b, c = _need(args, "a", "b", "c")
        if method == "formula":
            return Fraction(formulas.macmahon_PP(a, b, c)), None
        if method == "det":
            return _box_lgv(a, b, c), None
        return Fraction(matchoracle.count_tilings(regions.hexagon(a, b, c), budget)), None

    if cls in ("cs", "cstc"):
        n, x = _need(args, "n", "x")
        if n < 0 or x < 0:
            raise DomainError(f"{cls} needs n, x >= 0")
        if cls == "cstc" and (n % 2 or x % 2):
            return Fraction(0), f"no CSTC tilings of H_{{{n},{x}}}: n and x must both be even"
        if n == 0:
            return Fraction(1), None
        if method == "formula":
            f = formulas.CS_closed if cls == "cs" else formulas.CSTC_closed
            return Fraction(f(n, x)), None
        if method == "det":
            if cls == "cs":
                return matrices.sum_principal_minors(matrices.build("B", n, x)), None
            return matrices.determinant(matrices.build("C", n // 2, x // 2)), None
        syms = ["r"] if cls == "cs" else ["r", "t'"]
        return Fraction(matchoracle.count_invariant(regions.cored_hexagon(n, x), syms, budget)), None

    if cls in ("cssc", "tssc"):
        (size,) = _need(args, "size")
        note = _even_size(size)
        if note:
            return Fraction(0), note
        if method == "formula":
            f = formulas.CSSC_closed if cls == "cssc" else formulas.TSSC_closed
            return Fraction(f(size)), None
        if method == "det":
            w = matrices.determinant(matrices.build("W", size // 2 - 1, 2))
            if cls == "cssc":
                return w, None
            root = math.isqrt(int(w))
            if root * root != w:
                raise ArithmeticError(f"det W = {w} is not a perfect square")
            return Fraction(root), None
        syms = ["r", "k"] if cls == "cssc" else ["t", "r", "k"]
        H = regions.hexagon(size, size, size)
        return Fraction(matchoracle.count_invariant(H, syms, budget)), None

    if cls == "tc":
        a, b = _need(args, "a", "b")
        if method == "formula":
            return Fraction(formulas.TC_closed(a, b)), None
        if method == "det":
            raise UsageError("class tc has no determinant route; use --method formula or brute")
        if a < 1 or b < 0:
            raise DomainError(f"TC needs a >= 1, b >= 0 (got {a}, {b})")
        H = regions.hexagon(a, a, 2 * b)
        return Fraction(matchoracle.count_invariant(H, ["t'"], budget)), None

    if cls == "sc":
        a, c = _need(args, "a", "c")
        if a < 0 or c < 0:
            raise DomainError(f"SC needs a, c >= 0 (got {a}, {c})")
        if a % 2 and c % 2:
            return Fraction(0), f"no self-complementary tilings of H({a},{a},{c}): a and c are both odd"
        if method == "formula":
            return Fraction(formulas.SC_closed(a, c)), None
        if method == "det":
            x = a // 2
            if a % 2 == 0 and c % 2 == 0:
                return _box_lgv(x, x, c // 2) ** 2, None
            if a % 2 == 0:
                y = (c - 1) // 2
                return _box_lgv(x, x, y) * _box_lgv(x, x, y + 1), None
            return _box_lgv(x, x + 1, c // 2) ** 2, None
        return Fraction(matchoracle.count_invariant(regions.hexagon(a, a, c), ["k"], budget)), None

    # weighted pentagons
    kind = cls[1].upper()
    n, x = _need(args, "n", "x")
    if method == "formula":
        if kind == "C":
            if n < 1 or x < 0:
                raise DomainError(f"C pentagon needs n >= 1, x >= 0 (n={n}, x={x})")
            return Fraction(formulas.CSTC_closed(2 * n, 2 * x)), None
        return formulas.L_closed(kind, n, x), None
    if method == "det":
        return lgvpaths.lgv_count(lgvpaths.path_system(kind, n, x)), None
    return matchoracle.tiling_gen_fn(regions.weighted_pentagon(kind, n, x), budget), None


def cmd_count(args) -> int:
    value, note = _count(args)
    if note:
        print(f"note: {note}", file=sys.stderr)
    print(format_rational(value))
    return EXIT_OK


def _report_text(r: verify.IdentityReport) -> str:
    params = ", ".join(f"{k}={v}" for k, v in r.params.items())
    d = r.to_json()
    status = "ok" if r.ok else "FAIL"
    return f"{status:4} {r.id}({params}): {d['lhs']} [{r.lhs_route}] vs {d['rhs']} [{r.rhs_route}]"


def cmd_verify(args) -> int:
    if args.all == (args.id is not None):
        raise UsageError("give exactly one of --id or --all")
    if args.all:
        bounds = verify.Bounds(args.max_n, args.max_x, args.max_y)
        reports = verify.run_suite(bounds, brute=args.brute)
    elif args.id in verify.POLY_IDS:
        if args.n is None:
            raise UsageError(f"{args.id} needs --n")
        reports = [verify.check_poly_identity(args.id, args.n, y=args.y or 0, brute=args.brute)]
    else:
        if args.id not in verify.REGISTRY:
            raise UsageError(f"unknown identity {args.id!r}; known: {', '.join(verify.identity_ids())}")
        params = {k: getattr(args, k) for k in verify.REGISTRY[args.id].signature}
        missing = [f"--{k}" for k, v in params.items() if v is None]
        if missing:
            raise UsageError(f"{args.id} needs {' '.join(missing)}")
        reports = [verify.check_identity(args.id, params, brute=args.brute)]

    if args.json:
        payload = [r.to_json() for r in reports]
        doc = payload[0] if args.id is not None else payload
        print(json.dumps(doc, indent=2))
    else:
        for r in reports:
            print(_report_text(r))
        if args.all:
            bad = sum(not r.ok for r in reports)
            print(f"{len(reports) - bad}/{len(reports)} identities ok")
    return EXIT_OK if verify.all_ok(reports) else EXIT_FAIL


# ---------------------------------------------------------------------------
# SVG rendering

UNIT_PX = 40
MARGIN_PX = 10
SQRT3_2 = math.sqrt(3) / 2
FILLS = ("#f2c14e", "#5b8e7d", "#bc4b51")


def _region_for(args) -> regions.Region:
    kind = args.region
    if kind == "hexagon":
        a, b, c = _need(args, "a", "b", "c")
        return regions.hexagon(a, b, c)
    n, x = _need(args, "n", "x")
    if kind == "cored":
        return regions.cored_hexagon(n, x)
    return regions.weighted_pentagon(kind, n, x)


def _xy(p) -> tuple[float, float]:
    a, b = p
    return UNIT_PX * (a + b / 2), -UNIT_PX * b * SQRT3_2


def render_svg(region: regions.Region, tiling) -> str:
    """SVG 1.1 document drawing ``tiling`` of ``region``; output bytes depend only on the input."""
    pts = [_xy(v) for c in region.cells for v in c.vertices()]
    min_x = min(p[0] for p in pts) - MARGIN_PX
    min_y = min(p[1] for p in pts) - MARGIN_PX
    width = max(p[0] for p in pts) + MARGIN_PX - min_x
    height = max(p[1] for p in pts) + MARGIN_PX - min_y

    def fmt(p) -> str:
        x, y = _xy(p)
        return f"{x - min_x:.3f},{y - min_y:.3f}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.3f}" height="{height:.3f}" viewBox="0 0 {width:.3f} {height:.3f}">',
        f"<title>{region.name}</title>",
    ]
    for loz in sorted(tiling, key=regions.Lozenge.key):
        corners = " ".join(fmt(p) for p in loz.vertices())
        lines.append(
            f'<polygon class="lozenge" points="{corners}" fill="{FILLS[loz.kind()]}" '
            f'stroke="#222222" stroke-width="1"/>'
        )
    for hole in region.holes:
        corners = " ".join(fmt(p) for p in hole)
        lines.append(f'<polygon class="hole" points="{corners}" fill="#ffffff" stroke="#222222" stroke-width="2"/>')
    for loz in sorted(region.weights, key=regions.Lozenge.key):
        vs = [_xy(p) for p in loz.vertices()]
        cx = sum(v[0] for v in vs) / 4 - min_x
        cy = sum(v[1] for v in vs) / 4 - min_y
        lines.append(
            f'<ellipse class="marker" cx="{cx:.3f}" cy="{cy:.3f}" rx="6" ry="6" '
            f'fill="none" stroke="#1d3557" stroke-width="2">'
            f"<title>weight {format_rational(region.weight(loz))}</title></ellipse>"
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cmd_render(args) -> int:
    region = _region_for(args)
    tilings = matchoracle.enumerate_tilings(region)
    if not 0 <= args.tiling_index < len(tilings):
        raise UsageError(f"tiling index {args.tiling_index} out of range: {region.name} has {len(tilings)} tilings")
    svg = render_svg(region, tilings[args.tiling_index])
    if args.out is None or args.out == "-":
        sys.stdout.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
        print(f"wrote tiling {args.tiling_index} of {len(tilings)} for {region.name} to {args.out}")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hexatile", description="Exact lozenge tiling counts and identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count tilings in a symmetry class")
    p.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    p.add_argument("--method", choices=METHODS, default="formula")
    for name in ("a", "b", "c", "n", "x", "size"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="check identities along two independent routes")
    p.add_argument("--id")
    p.add_argument("--all", action="store_true")
    for name in ("n", "x", "y", "a", "b", "c"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--max-n", type=int, default=2)
    p.add_argument("--max-x", type=int, default=2)
    p.add_argument("--max-y", type=int)
    p.add_argument("--brute", choices=("auto", "always", "never"), default="auto")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw one tiling as SVG")
    p.add_argument("--region", required=True, choices=("hexagon", "cored", "A", "B", "C"))
    for name in ("a", "b", "c", "n", "x"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--tiling-index", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
