"""Registry of checkable identities, each evaluated along two independent routes.

A route is one of: brute-force enumeration (tilings, invariant tilings, path
families or a Leibniz expansion), a determinant, or a closed product.  For
the quantities that have a brute-force route, ``brute="auto"`` uses it when
the region fits the oracle's cell budget and falls back to the determinant
otherwise; ``"always"`` raises :class:`ResourceError` instead of falling back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Union

from hexatile import formulas, lgvpaths, matchoracle, matrices, regions
from hexatile.errors import DomainError, ResourceError
from hexatile.exactnum import Polynomial, factorial, format_rational, interpolate

Value = Union[Fraction, Polynomial]

LEIBNIZ_MAX_N = 5


@dataclass(frozen=True)
class IdentityReport:
    id: str
    params: Mapping[str, int]
    lhs: Value
    rhs: Value
    lhs_route: str
    rhs_route: str
    ok: bool

    def to_json(self) -> dict:
        def render(v):
            return v.to_string("x") if isinstance(v, Polynomial) else format_rational(v)

        return {
            "id": self.id,
            "params": dict(self.params),
            "lhs": render(self.lhs),
            "rhs": render(self.rhs),
            "lhs_route": self.lhs_route,
            "rhs_route": self.rhs_route,
            "ok": self.ok,
        }


# ---------------------------------------------------------------------------
# quantities with several routes; each returns (value, route description)


class _Ctx:
    def __init__(self, brute: str = "auto", budget: Optional[int] = None):
        if brute not in ("auto", "always", "never"):
            raise DomainError(f"brute must be auto, always or never, got {brute!r}")
        self.brute = brute
        self.budget = matchoracle.cell_budget() if budget is None else budget

    def use_brute(self, n_cells: int) -> bool:
        if self.brute == "never":
            return False
        if n_cells <= self.budget:
            return True
        if self.brute == "always":
            raise ResourceError(f"{n_cells} cells exceed the oracle budget of {self.budget}")
        return False

    def require_brute(self, n_cells: int) -> None:
        if n_cells > self.budget:
            raise ResourceError(f"{n_cells} cells exceed the oracle budget of {self.budget}")


def _det(name: str, n: int, x: int, ctx: _Ctx, y: Optional[int] = None) -> tuple[Fraction, str]:
    M = matrices.build(name, n, x, y)
    label = f"det {name}_{n}({x}{'' if y is None else f',{y}'})"
    if ctx.brute != "never" and n <= LEIBNIZ_MAX_N:
        return matrices.determinant_leibniz(M), f"brute: Leibniz expansion of {label}"
    return matrices.determinant(M), f"{label} by fraction-free elimination"


def _cs(n: int, x: int, ctx: _Ctx) -> tuple[Fraction, str]:
    if n == 0:
        return Fraction(1), "CS(0,x) = 1 (empty determinant)"
    if ctx.use_brute(6 * n * (n + x)):
        R = regions.cored_hexagon(n, x)
        return Fraction(matchoracle.count_invariant(R, ["r"], ctx.budget)), \
            f"brute: r-invariant tilings of H_{{{n},{x}}}"
    return matrices.sum_principal_minors(matrices.build("B", n, x)), f"det(I+B_{n}({x}))"


def _cstc(n: int, x: int, ctx: _Ctx) -> tuple[Fraction, str]:
    if n == 0:
        return Fraction(1), "CSTC(0,x) = 1"
    if n % 2 or x % 2:
        return Fraction(0), "parity: no r,t'-invariant tilings"
    if ctx.use_brute(6 * n * (n + x)):
        R = regions.cored_hexagon(n, x)
        return Fraction(matchoracle.count_invariant(R, ["r", "t'"], ctx.budget)), \
            f"brute: r,t'-invariant tilings of H_{{{n},{x}}}"
    return matrices.determinant(matrices.build("C", n // 2, x // 2)), f"det C_{n // 2}({x // 2})"


def _pentagon(kind: str, n: int, x: int, ctx: _Ctx, lgv_only: bool = False) -> tuple[Fraction, str]:
    sys = lgvpaths.path_system(kind, n, x)
    if not lgv_only:
        R = regions.weighted_pentagon(kind, n, x)
        if ctx.use_brute(len(R.cells)):
            return matchoracle.tiling_gen_fn(R, ctx.budget), f"brute: tilings of {kind}_{{{n},{x}}}"
    return lgvpaths.lgv_count(sys), f"Gessel-Viennot determinant for {kind}_{{{n},{x}}}"


def _cssc(two_n: int, ctx: _Ctx, closed_fallback: bool = False) -> tuple[Fraction, str]:
    if ctx.use_brute(6 * two_n * two_n):
        H = regions.hexagon(two_n, two_n, two_n)
        return Fraction(matchoracle.count_invariant(H, ["r", "k"], ctx.budget)), \
            f"brute: r,k-invariant tilings of H({two_n},{two_n},{two_n})"
    if closed_fallback:
        return Fraction(formulas.CSSC_closed(two_n)), "CSSC product formula"
    n = two_n // 2
    return matrices.determinant(matrices.build("W", n - 1, 2)), f"det W_{n - 1}(2)"


def _brute_count(region: regions.Region, syms, ctx: _Ctx) -> Fraction:
    ctx.require_brute(len(region.cells))
    return Fraction(matchoracle.count_invariant(region, syms, ctx.budget))


# ---------------------------------------------------------------------------
# identity definitions

Evaluator = Callable[[dict, _Ctx], tuple[Fraction, str, Fraction, str]]


@dataclass(frozen=True)
class Identity:
    id: str
    signature: tuple[str, ...]
    description: str
    evaluate: Evaluator
    domain: Callable[[dict], bool]
    suite: Callable[[int, int, int], Iterable[tuple[int, ...]]]


REGISTRY: dict[str, Identity] = {}


def _register(id, signature, description, domain, suite):
    def deco(fn):
        REGISTRY[id] = Identity(id, tuple(signature), description, fn, domain, suite)
        return fn

    return deco


def _r(lo: int, hi: int) -> range:
    return range(lo, hi + 1)


@_register("I2.2", ("n", "x", "y"), "det K_n(x,y) equals its product formula",
           lambda p: p["n"] >= 0 and p["x"] >= 0 and p["y"] >= 0 and p["x"] + p["y"] > 0,
           lambda N, X, Y: ((n, x, y) for n in _r(1, N) for x in _r(0, X) for y in _r(0, Y) if x + y))
def _i2_2(p, ctx):
    n, x, y = p["n"], p["x"], p["y"]
    M = matrices.build("K", n, x, y)
    if ctx.brute != "never" and n <= LEIBNIZ_MAX_N:
        lhs, lr = matrices.determinant_leibniz(M), f"brute: Leibniz expansion of det K_{n}({x},{y})"
    else:
        lhs, tag = matrices.determinant_condensation(M)
        lr = f"det K_{n}({x},{y}) by Dodgson condensation ({tag})"
    return lhs, lr, formulas.detK_closed(n, x, y), "closed product for det K_n(x,y)"


def _L_identity(kind):
    def ev(p, ctx):
        n, x = p["n"], p["x"]
        lhs, lr = _pentagon(kind, n, x, ctx)
        return lhs, lr, formulas.L_closed(kind, n, x), f"2^-n det K_n(x,0) product for {kind}"

    return ev


_register("I2.4", ("n", "x"), "L(A_{n,x}) product formula",
          lambda p: p["n"] >= 1 and p["x"] >= 1,
          lambda N, X, Y: ((n, x) for n in _r(1, N) for x in _r(1, X)))(_L_identity("A"))
_register("I2.5", ("n", "x"), "L(B_{n,x}) product formula",
          lambda p: p["n"] >= 1 and p["x"] >= 1,
          lambda N, X, Y: ((n, x) for n in _r(1, N) for x in _r(1, X)))(_L_identity("B"))


@_register("I3.1", ("n", "x"), "r-invariant tilings of H_{n,x} = det(I + B)",
           lambda p: p["n"] >= 1 and p["x"] >= 0,
           lambda N, X, Y: ((n, x) for n in _r(1, N) for x in _r(0, X)))
def _i3_1(p, ctx):
    n, x = p["n"], p["x"]
    lhs = _brute_count(regions.cored_hexagon(n, x), ["r"], ctx)
    rhs = matrices.sum_principal_minors(matrices.build("B", n, x))
    return lhs, f"brute: r-invariant tilings of H_{{{n},{x}}}", rhs, f"det(I+B_{n}({x}))"


@_register("I3.2", ("n", "x"), "CS product formulas at odd x >= 3",
           lambda p: p["n"] >= 1 and p["x"] >= 3 and p["x"] % 2 == 1,
           lambda N, X, Y: ((n, 2 * t + 1) for n in _r(1, N) for t in _r(1, X)))
def _i3_2(p, ctx):
    n, x = p["n"], p["x"]
    rhs, rr = _cs(n, x, ctx)
    return Fraction(formulas.cs_formula_direct(n, x)), "CS product formula (direct)", rhs, rr


@_register("I3.3", ("n", "x"), "CS(n,x) = P_n((x-1)/2) for every x",
           lambda p: p["n"] >= 1 and p["x"] >= 0,
           lambda N, X, Y: ((n, x) for n in _r(1, N) for x in _r(0, X)))
def _i3_3(p, ctx):
    n, x = p["n"], p["x"]
    rhs, rr = _cs(n, x, ctx)
    return Fraction(formulas.CS_closed(n, x)), "CS via interpolated P_n((x-1)/2)", rhs, rr


@_register("I3.4", ("n", "x"), "CS(2n,2x+1) = 2^(2n+1) L(A_{n+1,x}) L(B_{n,x+1})",
           lambda p: p["n"] >= 1 and p["x"] >= 1,
           lambda N, X, Y: ((n, x) for n in _r(1, N) for x in _r(1, X)))
def _i3_4(p, ctx):
    n, x = p["n"], p["x"]
    lhs, lr = _cs(2 * n, 2 * x + 1, ctx)
    a, ar = _pentagon("A", n + 1, x, ctx, lgv_only=True)
    b, br = _pentagon("B", n, x + 1, ctx, lgv_only=True)
    return lhs, lr, 2 ** (2 * n + 1) * a * b, f"2^{2 * n + 1} * [{ar}] * [{br}]"


@_register("I3.6", ("n", "x"), "CS(2n-1,2x+1) = 2^(2n) L(A_{n,x}) L(B_{n,x+1})",
           lambda p: p["n"] >= 1 and p["x"] >= 1,
           lambda N, X, Y: ((n, x) for n in _r(1, N) for x in _r(1, X)))
def _i3_6(p, ctx):
    n, x = p["n"], p["x"]
    lhs, lr = _cs(2 * n - 1, 2 * x + 1, ctx)
    a, ar = _pentagon("A", n, x, ctx, lgv_only=True)
    b, br = _pentagon("B", n, x + 1, ctx, lgv_only=True)
    return lhs, lr, 2 ** (2 * n) * a * b, f"2^{2 * n} * [{ar}] * [{br}]"


@_register("I4.1", ("n", "x"), "CSTC(2n,2x) = L(C_{n,x})",
           lambda p: p["n"] >= 1 and p["x"] >= 0,
           lambda N, X, Y: ((n, x) for n in _r(1, N) for x in _r(0, X)))
def _i4_1(p, ctx):
    n, x = p["n"], p["x"]
    lhs = _brute_count(regions.cored_hexagon(2 * n, 2 * x), ["r", "t'"], ctx)
    rhs, rr = _pentagon("C", n, x, ctx, lgv_only=True)
    return lhs, f"brute: r,t'-invariant tilings of H_{{{2 * n},{2 * x}}}", rhs, rr


@_register("I4.2", ("n", "x"), "2 CSTC(2n+2,2x)/CSTC(2n,2x) = CS(2n+1,2x)/CS(2n,2x)",
           lambda p: p["n"] >= 0 and p["x"] >= 0,
           lambda N, X, Y: ((n, x) for n in _r(1, N) for x in _r(0, X)))
def _i4_2(p, ctx):
    n, x = p["n"], p["x"]
    top, tr = _cstc(2 * n + 2, 2 * x, ctx)
    bot, br = _cstc(2 * n, 2 * x, ctx)
    cs_top, ctr = _cs(2 * n + 1, 2 * x, ctx)
    cs_bot, cbr = _cs(2 * n, 2 * x, ctx)
    return 2 * top / bot, f"2 * [{tr}] / [{br}]", cs_top / cs_bot, f"[{ctr}] / [{cbr}]"


@_register("I4.6", ("n", "x"), "CSTC(2n,2x) telescoping product over CS ratios",
           lambda p: p["n"] >= 0 and p["x"] >= 0,
           lambda N, X, Y: ((n, x) for n in _r(1, N) for x in _r(0, X)))
def _i4_6(p, ctx):
    n, x = p["n"], p["x"]
    rhs, rr = _cstc(2 * n, 2 * x, ctx)
    return Fraction(formulas.CSTC_closed(2 * n, 2 * x)), "CSTC telescoped CS product", rhs, rr


@_register("I4.7", ("n", "x"), "L(C_{n,x}) = det C_n(x)",
           lambda p: p["n"] >= 1 and p["x"] >= 0,
           lambda N, X, Y: ((n, x) for n in _r(1, N) for x in _r(0, X)))
def _i4_7(p, ctx):
    n, x = p["n"], p["x"]
    lhs, lr = _pentagon("C", n, x, ctx)
    rhs, rr = _det("C", n, x, ctx)
    return lhs, lr, rhs, rr


@_register("I4.5a", ("n", "x"), "Z_{2n}(2x) = T_n(x) R_n(x)",
           lambda p: p["n"] >= 0 and p["x"] >= 0,
           lambda N, X, Y: ((n, x) for n in _r(1, N) for x in _r(0, X)))
def _i4_5a(p, ctx):
    n, x = p["n"], p["x"]
    lhs, lr = _cs(2 * n, 2 * x, ctx)
    t, tr = _det("C", n, x, ctx)
    r, rr = _det("R", n, x, ctx)
    return lhs, lr, t * r, f"[{tr}] * [{rr}]"


@_register("I4.5b", ("n", "x"), "Z_{2n+1}(2x) = 2 T_{n+1}(x) R_n(x)",
           lambda p: p["n"] >= 0 and p["x"] >= 0,
           lambda N, X, Y: ((n, x) for n in _r(1, N) for x in _r(0, X)))
def _i4_5b(p, ctx):
    n, x = p["n"], p["x"]
    lhs, lr = _cs(2 * n + 1, 2 * x, ctx)
    t, tr = _det("C", n + 1, x, ctx)
    r, rr = _det("R", n, x, ctx)
    return lhs, lr, 2 * t * r, f"2 * [{tr}] * [{rr}]"


@_register("I5.1", ("n",), "CSSC(2n) product formula",
           lambda p: p["n"] >= 1,
           lambda N, X, Y: ((n,) for n in _r(1, N)))
def _i5_1(p, ctx):
    n = p["n"]
    rhs, rr = _cssc(2 * n, ctx)
    return Fraction(formulas.CSSC_closed(2 * n)), "CSSC product formula", rhs, rr


@_register("I5.2", ("n",), "CSSC(2n) = 2^n L(A_{n,1})",
           lambda p: p["n"] >= 1,
           lambda N, X, Y: ((n,) for n in _r(1, N)))
def _i5_2(p, ctx):
    n = p["n"]
    lhs, lr = _cssc(2 * n, ctx)
    a, ar = _pentagon("A", n, 1, ctx, lgv_only=True)
    return lhs, lr, 2**n * a, f"2^{n} * [{ar}]"


@_register("I5.3", ("n", "x"), "det W_{n-1}(x+2) = det w_n(x)",
           lambda p: p["n"] >= 1 and p["x"] >= 0,
           lambda N, X, Y: ((n, x) for n in _r(1, N) for x in _r(0, X)))
def _i5_3(p, ctx):
    n, x = p["n"], p["x"]
    lhs, lr = _det("W", n - 1, x + 2, ctx)
    rhs, rr = _det("w", n, x, ctx)
    return lhs, lr, rhs, rr


@_register("I5.4", ("n", "x"), "det w_n(x) = 2^n L(A_{n,x+1})",
           lambda p: p["n"] >= 1 and p["x"] >= 0,
           lambda N, X, Y: ((n, x) for n in _r(1, N) for x in _r(0, X)))
def _i5_4(p, ctx):
    n, x = p["n"], p["x"]
    lhs, lr = _det("w", n, x, ctx)
    a, ar = _pentagon("A", n, x + 1, ctx)
    return lhs, lr, 2**n * a, f"2^{n} * [{ar}]"


@_register("I5.W", ("n",), "det W_{n-1}(2) = CSSC(2n)",
           lambda p: p["n"] >= 1,
           lambda N, X, Y: ((n,) for n in _r(1, N)))
def _i5_w(p, ctx):
    n = p["n"]
    lhs, lr = _det("W", n - 1, 2, ctx)
    rhs, rr = _cssc(2 * n, ctx, closed_fallback=True)
    return lhs, lr, rhs, rr


@_register("I5.5", ("n", "x"), "CS(2n,2x+1)/CS(2n-1,2x+1) = 2 L(A_{n+1,x})/L(A_{n,x})",
           lambda p: p["n"] >= 1 and p["x"] >= 1,
           lambda N, X, Y: ((n, x) for n in _r(1, N) for x in _r(1, X)))
def _i5_5(p, ctx):
    n, x = p["n"], p["x"]
    top, tr = _cs(2 * n, 2 * x + 1, ctx)
    bot, br = _cs(2 * n - 1, 2 * x + 1, ctx)
    a1, a1r = _pentagon("A", n + 1, x, ctx)
    a0, a0r = _pentagon("A", n, x, ctx)
    return top / bot, f"[{tr}] / [{br}]", 2 * a1 / a0, f"2 * [{a1r}] / [{a0r}]"


@_register("I5.6", ("n",), "CSSC(2n+2)/CSSC(2n) = CS(2n,3)/CS(2n-1,3)",
           lambda p: p["n"] >= 1,
           lambda N, X, Y: ((n,) for n in _r(1, N)))
def _i5_6(p, ctx):
    n = p["n"]
    top, tr = _cssc(2 * n + 2, ctx, closed_fallback=True)
    bot, br = _cssc(2 * n, ctx, closed_fallback=True)
    cs_top, ctr = _cs(2 * n, 3, ctx)
    cs_bot, cbr = _cs(2 * n - 1, 3, ctx)
    return top / bot, f"[{tr}] / [{br}]", cs_top / cs_bot, f"[{ctr}] / [{cbr}]"


@_register("I5.TS", ("n",), "CSSC(2n) = TSSC(2n)^2",
           lambda p: p["n"] >= 1,
           lambda N, X, Y: ((n,) for n in _r(1, N)))
def _i5_ts(p, ctx):
    s = 2 * p["n"]
    H = regions.hexagon(s, s, s)
    lhs = _brute_count(H, ["r", "k"], ctx)
    ts = _brute_count(H, ["t", "r", "k"], ctx)
    return (lhs, f"brute: r,k-invariant tilings of H({s},{s},{s})",
            ts * ts, f"(brute: t,r,k-invariant tilings of H({s},{s},{s}))^2")


@_register("I6.1", ("a", "b"), "TC(a,a,2b) product formula",
           lambda p: p["a"] >= 1 and p["b"] >= 0,
           lambda N, X, Y: ((a, b) for a in (_r(1, N + 1) if N >= 1 else ()) for b in _r(0, X)))
def _i6_1(p, ctx):
    a, b = p["a"], p["b"]
    lhs = _brute_count(regions.hexagon(a, a, 2 * b), ["t'"], ctx)
    return (lhs, f"brute: t'-invariant tilings of H({a},{a},{2 * b})",
            Fraction(formulas.TC_closed(a, b)), "TC product formula")


def _sc_identity(a_of, c_of, rhs_of, rhs_label):
    def ev(p, ctx):
        x, y = p["x"], p["y"]
        a, c = a_of(x), c_of(y)
        lhs = _brute_count(regions.hexagon(a, a, c), ["k"], ctx)
        return (lhs, f"brute: k-invariant tilings of H({a},{a},{c})",
                Fraction(rhs_of(x, y)), rhs_label)

    return ev


_SC_SUITE = lambda N, X, Y: ((x, y) for x in _r(1, N) for y in _r(0, X))  # noqa: E731
_SC_DOMAIN = lambda p: p["x"] >= 0 and p["y"] >= 0  # noqa: E731

_register("I7.1", ("x", "y"), "SC(2x,2x,2y) = PP(x,x,y)^2", _SC_DOMAIN, _SC_SUITE)(
    _sc_identity(lambda x: 2 * x, lambda y: 2 * y,
                 lambda x, y: formulas.macmahon_PP(x, x, y) ** 2, "PP(x,x,y)^2"))
_register("I7.2", ("x", "y"), "SC(2x,2x,2y+1) = PP(x,x,y) PP(x,x,y+1)", _SC_DOMAIN, _SC_SUITE)(
    _sc_identity(lambda x: 2 * x, lambda y: 2 * y + 1,
                 lambda x, y: formulas.macmahon_PP(x, x, y) * formulas.macmahon_PP(x, x, y + 1),
                 "PP(x,x,y) * PP(x,x,y+1)"))
_register("I7.3", ("x", "y"), "SC(2x+1,2x+1,2y) = PP(x,x+1,y)^2", _SC_DOMAIN, _SC_SUITE)(
    _sc_identity(lambda x: 2 * x + 1, lambda y: 2 * y,
                 lambda x, y: formulas.macmahon_PP(x, x + 1, y) ** 2, "PP(x,x+1,y)^2"))


@_register("IBASE", ("a", "b", "c"), "tilings of H(a,b,c) = MacMahon's box formula",
           lambda p: min(p["a"], p["b"], p["c"]) >= 0 and max(p["a"], p["b"], p["c"]) > 0,
           lambda N, X, Y: ((a, b, c) for a in _r(1, N) for b in _r(0, X) for c in _r(0, Y)))
def _ibase(p, ctx):
    a, b, c = p["a"], p["b"], p["c"]
    H = regions.hexagon(a, b, c)
    ctx.require_brute(len(H.cells))
    lhs = Fraction(matchoracle.count_tilings(H, ctx.budget))
    return (lhs, f"brute: tilings of H({a},{b},{c})",
            Fraction(formulas.macmahon_PP(a, b, c)), "MacMahon box product")


# ---------------------------------------------------------------------------
# public API


def identity_ids() -> list[str]:
    return sorted(REGISTRY)


def _normalize_params(ident: Identity, params: Mapping[str, int]) -> dict:
    missing = [k for k in ident.signature if k not in params or params[k] is None]
    if missing:
        raise DomainError(f"identity {ident.id} needs parameters {ident.signature}; missing {missing}")
    p = {k: int(params[k]) for k in ident.signature}
    if not ident.domain(p):
        raise DomainError(f"parameters {p} outside the domain of identity {ident.id}")
    return p


def check_identity(id: str, params: Optional[Mapping[str, int]] = None, brute: str = "auto",
                   budget: Optional[int] = None, **kw) -> IdentityReport:
    """Evaluate both sides of identity ``id`` and compare them exactly."""
    if id not in REGISTRY:
        raise DomainError(f"unknown identity {id!r}")
    ident = REGISTRY[id]
    p = _normalize_params(ident, {**(params or {}), **kw})
    ctx = _Ctx(brute, budget)
    lhs, lr, rhs, rr = ident.evaluate(p, ctx)
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    return IdentityReport(id, p, lhs, rhs, lr, rr, lhs == rhs)


# polynomial identities -------------------------------------------------------

POLY_IDS = ("I3.3", "I2.2-poly", "I4.7-poly")
POLY_MAX_N = 8


def _k_normalized_poly_side(n: int, y: int) -> Polynomial:
    """``prod_i i! (2x+y+2i)_i (x+2y+2i)_i / (y+2i)!`` built as an exact polynomial in x."""
    out = Polynomial.constant(1)
    for i in range(n):
        const = Fraction(factorial(i), factorial(y + 2 * i))
        out = out * const
        for k in range(i):
            out = out * Polynomial.linear(2, y + 2 * i + k)
            out = out * Polynomial.linear(1, 2 * y + 2 * i + k)
    return out


def _k_normalized_det(n: int, x: int, y: int) -> Fraction:
    # det K_n(x,y) with row i scaled by (x+2i)!/(x+y+i-1)!; polynomial in x
    d = matrices.determinant(matrices.build("K", n, x, y))
    for i in range(n):
        d *= Fraction(factorial(x + 2 * i), factorial(x + y + i - 1))
    return d


def check_poly_identity(id: str, n: int, y: int = 0, brute: str = "auto",
                        budget: Optional[int] = None) -> IdentityReport:
    """Compare both sides of a polynomial identity coefficient by coefficient.

    Each side is interpolated through ``deg + 1`` samples and then checked
    against one further sample, which certifies the degree bound.
    """
    if id not in POLY_IDS:
        raise DomainError(f"unknown polynomial identity {id!r}; expected one of {POLY_IDS}")
    if n < 1 or n > POLY_MAX_N:
        raise DomainError(f"polynomial identities are checked for 1 <= n <= {POLY_MAX_N}")
    ctx = _Ctx(brute, budget)

    if id == "I3.3":
        d = formulas.cs_degree_bound(n)
        P = interpolate([(t, formulas.cs_formula_direct(n, 2 * t + 1)) for t in range(1, d + 2)])
        certified = P(d + 2) == formulas.cs_formula_direct(n, 2 * d + 5)
        lhs = P.compose(Polynomial.linear(Fraction(1, 2), Fraction(-1, 2)))
        z = lambda x: matrices.sum_principal_minors(matrices.build("B", n, x))  # noqa: E731
        rhs = interpolate([(x, z(x)) for x in range(d + 1)])
        certified = certified and rhs(d + 1) == z(d + 1)
        return IdentityReport(
            id, {"n": n}, lhs, rhs,
            f"P_{n}((x-1)/2), P_{n}(t) = {P} interpolated from the CS product at x = 3..{2 * d + 3}",
            f"det(I+B_{n}(x)) interpolated at x = 0..{d}",
            certified and lhs == rhs,
        )

    if id == "I2.2-poly":
        d = n * (n - 1)
        x0 = 0 if y > 0 else 1
        xs = list(range(x0, x0 + d + 1))
        lhs = interpolate([(x, _k_normalized_det(n, x, y)) for x in xs])
        certified = lhs(x0 + d + 1) == _k_normalized_det(n, x0 + d + 1, y)
        rhs = _k_normalized_poly_side(n, y)
        return IdentityReport(
            id, {"n": n, "y": y}, lhs, rhs,
            f"det K_{n}(x,{y}) * prod (x+2i)!/(x+y+i-1)! interpolated at x = {xs[0]}..{xs[-1]}",
            "prod i! (2x+y+2i)_i (x+2y+2i)_i / (y+2i)! as a product of linear factors",
            certified and lhs == rhs,
        )

    # I4.7-poly
    d = n * (n - 1)
    xs = list(range(d + 1))
    T = lambda x: matrices.determinant(matrices.build("C", n, x))  # noqa: E731
    lhs = interpolate([(x, T(x)) for x in xs])
    certified = lhs(d + 1) == T(d + 1)
    samples, routes = [], set()
    for x in xs + [d + 1]:
        v, r = _pentagon("C", n, x, ctx)
        samples.append((x, v))
        routes.add(r.split(" of ")[0].split(" for ")[0])
    rhs = interpolate(samples[:-1])
    certified = certified and rhs(d + 1) == samples[-1][1]
    return IdentityReport(
        id, {"n": n}, lhs, rhs,
        f"det C_{n}(x) interpolated at x = 0..{d}",
        f"L(C_{{{n},x}}) ({' / '.join(sorted(routes))}) interpolated at x = 0..{d}",
        certified and lhs == rhs,
    )


# suite -------------------------------------------------------------------------


@dataclass(frozen=True)
class Bounds:
    max_n: int = 2
    max_x: int = 2
    max_y: Optional[int] = None

    @property
    def y(self) -> int:
        return self.max_x if self.max_y is None else self.max_y


def suite_cases(bounds: Bounds, ids: Optional[Iterable[str]] = None) -> list[tuple[str, dict]]:
    cases = []
    for id in sorted(ids if ids is not None else REGISTRY):
        ident = REGISTRY[id]
        for values in ident.suite(bounds.max_n, bounds.max_x, bounds.y):
            cases.append((id, dict(zip(ident.signature, values))))
    cases.sort(key=lambda c: (c[0], tuple(c[1].values())))
    return cases


def run_suite(bounds: Union[Bounds, Mapping, None] = None, ids: Optional[Iterable[str]] = None,
              brute: str = "auto", budget: Optional[int] = None) -> list[IdentityReport]:
    """Check every registered identity at every parameter tuple inside ``bounds``.

    ``max_n`` bounds the size parameter (``n``, ``a`` or the half-side ``x``
    of the self-complementary identities); ``max_x``/``max_y`` bound the rest.
    """
    if bounds is None:
        bounds = Bounds()
    elif not isinstance(bounds, Bounds):
        bounds = Bounds(**bounds)
    return [check_identity(id, p, brute=brute, budget=budget) for id, p in suite_cases(bounds, ids)]


def all_ok(reports: Iterable[IdentityReport]) -> bool:
    return all(r.ok for r in reports)
