"""Hyperelliptic curves of odd degree over Q(x) and their Jacobians.

A curve is ``t^2 = f(s)`` with ``f`` monic, squarefree, of odd degree in the
curve variable and coefficients in Q(x); the genus is ``(deg f - 1)/2``.
Jacobian points are handled through Mumford representation: a semi-reduced
divisor is a pair ``(u, v)`` with ``u`` monic, ``deg v < deg u`` and
``u | v^2 - f``; it is reduced when ``deg u <= genus``, giving a unique class
representative.  The group law is Cantor composition followed by reduction.

Polynomials in the curve variable reuse the generic dense ``Poly`` with
``RatFunc`` coefficients (exported here as ``PolyY``).  Every intermediate
coefficient is a fully reduced fraction of polynomials, which keeps the
severe coefficient growth of reduction under control.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exact import Poly, euclid_divmod, poly_gcd, poly_xgcd, parse_poly, format_poly
from .funcfield import RatFunc, ratfunc_is_square, parse_ratfunc, format_ratfunc

__all__ = [
    "PolyY",
    "polyy",
    "Curve",
    "MumfordDivisor",
    "new_curve",
    "mumford_validate",
    "identity_divisor",
    "cantor_add",
    "cantor_sub",
    "negate",
    "scalar_mul",
    "reduce_divisor",
    "two_torsion",
    "parse_polyy",
    "format_polyy",
    "parse_divisor",
    "format_divisor",
]

# Polynomial in the curve variable with RatFunc coefficients.
PolyY = Poly


def polyy(coeffs) -> Poly:
    """Build a PolyY, coercing ints / rationals / Poly-in-x to RatFunc."""
    return Poly(tuple(c if isinstance(c, RatFunc) else RatFunc(c) for c in coeffs))


_RF_ZERO = RatFunc(0)
_RF_ONE = RatFunc(1)


@dataclass(frozen=True)
class Curve:
    """Validated odd-degree hyperelliptic model t^2 = f(s) over Q(x)."""

    f: PolyY

    @property
    def genus(self) -> int:
        return (self.f.degree - 1) // 2


def _specialize(p: PolyY, c) -> Poly | None:
    """Evaluate the RatFunc coefficients at x = c; None if a pole is hit."""
    out = []
    for coeff in p.coeffs:
        if isinstance(coeff, RatFunc):
            den = coeff.den(c)
            if not den:
                return None
            out.append(coeff.num(c) / den)
        else:
            out.append(coeff)
    return Poly(out)


def polyy_coprime(a: PolyY, b: PolyY) -> bool:
    """Exact coprimality over Q(x) via specialization.

    The gcd degree can only grow when x is specialized (away from poles and
    leading-coefficient vanishing), and gcd(a, b) is nontrivial iff the
    resultant res_s(a, b) -- a rational function of bounded degree in x --
    vanishes identically.  So a single specialization with trivial gcd proves
    coprimality, and more than deg_x(res) specializations with nontrivial gcd
    prove the opposite.  This avoids the severe coefficient blowup of a
    Euclidean remainder sequence over Q(x).
    """
    if a.is_zero() or b.is_zero():
        raise ValueError("coprimality test with zero polynomial")
    def _w(p):
        return sum(c.num.degree + c.den.degree
                   for c in p.coeffs if isinstance(c, RatFunc) and c)
    weight = _w(a) + _w(b)
    bound = (a.degree + b.degree) * weight + (a.degree + b.degree) + 2
    failures = 0
    c = 0
    while failures <= bound:
        sa = _specialize(a, c)
        sb = _specialize(b, c)
        c += 1
        if sa is None or sb is None:
            continue
        if sa.degree < a.degree or sb.degree < b.degree:
            continue  # leading coefficient vanished; gcd bound unreliable
        if sa.is_zero() or sb.is_zero():
            failures += 1
            continue
        if poly_gcd(sa, sb).degree == 0:
            return True
        failures += 1
    return False


def polyy_squarefree(f: PolyY) -> bool:
    return polyy_coprime(f, f.derivative())


def new_curve(f: PolyY) -> Curve:
    if f.is_zero() or f.degree < 1:
        raise ValueError("curve polynomial must be nonconstant")
    if f.lc() != _RF_ONE:
        raise ValueError("curve polynomial must be monic")
    if f.degree % 2 == 0:
        raise ValueError("curve polynomial must have odd degree")
    if not polyy_squarefree(f):
        raise ValueError("curve polynomial must be squarefree")
    return Curve(f)


@dataclass(frozen=True)
class MumfordDivisor:
    """Semi-reduced divisor div(u, v) on a fixed curve."""

    curve: Curve
    u: PolyY
    v: PolyY

    def is_identity(self) -> bool:
        return self.u.degree == 0

    def is_reduced(self) -> bool:
        return self.u.degree <= self.curve.genus

    def __str__(self):
        return format_divisor(self)


def mumford_validate(u: PolyY, v: PolyY, c: Curve) -> MumfordDivisor:
    """Check the Mumford invariants and build the divisor."""
    if u.is_zero():
        raise ValueError("u must be nonzero")
    if u.lc() != _RF_ONE:
        raise ValueError("u must be monic")
    if not v.is_zero() and v.degree >= u.degree:
        raise ValueError("deg v must be smaller than deg u")
    if not euclid_divmod(v * v - c.f, u)[1].is_zero():
        raise ValueError("u does not divide v^2 - f")
    return MumfordDivisor(c, u, v)


def identity_divisor(c: Curve) -> MumfordDivisor:
    return MumfordDivisor(c, polyy([1]), Poly())


def _check_same_curve(a: MumfordDivisor, b: MumfordDivisor):
    if a.curve != b.curve:
        raise ValueError("divisors live on different curves")


def reduce_divisor(D: MumfordDivisor) -> MumfordDivisor:
    """Cantor reduction: replace (u, v) by an equivalent pair with
    deg u <= genus."""
    u, v, f = D.u, D.v, D.curve.f
    g = D.curve.genus
    while u.degree > g:
        u = ((f - v * v) // u).monic()
        v = euclid_divmod(-v, u)[1]
    return MumfordDivisor(D.curve, u, v)


def cantor_add(D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
    """Cantor composition + reduction."""
    _check_same_curve(D1, D2)
    f = D1.curve.f
    u1, v1, u2, v2 = D1.u, D1.v, D2.u, D2.v
    g1, e1, e2 = poly_xgcd(u1, u2)
    vs = v1 + v2
    if vs.is_zero():
        d, c1 = g1, g1._one()
        c2 = Poly()
    else:
        d, c1, c2 = poly_xgcd(g1, vs)
    # d = c1*(e1*u1 + e2*u2) + c2*(v1+v2)
    u = (u1 * u2) // (d * d)
    num = c1 * (e1 * u1 * v2 + e2 * u2 * v1) + c2 * (v1 * v2 + f)
    v = euclid_divmod(num // d, u)[1]
    return reduce_divisor(MumfordDivisor(D1.curve, u.monic(), v))


def negate(D: MumfordDivisor) -> MumfordDivisor:
    v = euclid_divmod(-D.v, D.u)[1]
    return MumfordDivisor(D.curve, D.u, v)


def cantor_sub(D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
    return cantor_add(D1, negate(D2))


def scalar_mul(n: int, D: MumfordDivisor) -> MumfordDivisor:
    if n < 0:
        return scalar_mul(-n, negate(D))
    acc = identity_divisor(D.curve)
    base = D
    while n:
        if n & 1:
            acc = cantor_add(acc, base)
        n >>= 1
        if n:
            base = cantor_add(base, base)
    return acc


def _certify_irreducible(factor: PolyY, certified_quartics) -> None:
    """Accept degree 1 always, degree 2 with non-square discriminant, and
    degree 4 only when the caller has certified it (see two_torsion)."""
    if factor.degree == 1:
        return
    if factor.degree == 2:
        b, c = factor.coeff(1), factor.coeff(0)
        disc = b * b - 4 * c
        if disc.is_zero() or ratfunc_is_square(disc):
            raise ValueError(
                f"degree-2 factor {format_polyy(factor)} is reducible over Q(x)")
        return
    if factor.degree == 4:
        if certified_quartics is not None and any(factor == q for q in certified_quartics):
            return
        raise ValueError("degree-4 factor lacks an irreducibility certificate")
    raise ValueError(f"no irreducibility certificate for degree {factor.degree}")


def two_torsion(c: Curve, factors, certified_quartics=None):
    """All 2-torsion points <u, 0>, given the irreducible factorization of f.

    ``factors`` must be monic, pairwise coprime, with product f; their
    irreducibility is certified (degree 1 trivially, degree 2 by non-square
    discriminant, degree 4 by caller-supplied certificates — the library does
    not factor over Q(x)).  The points are the <prod(subset), 0> of degree at
    most the genus; the group is (Z/2)^(#factors - 1).
    """
    factors = list(factors)
    prod = polyy([1])
    for p in factors:
        if p.is_zero() or p.lc() != _RF_ONE:
            raise ValueError("factors must be monic and nonzero")
        _certify_irreducible(p, certified_quartics)
        prod = prod * p
    if prod != c.f:
        raise ValueError("product of factors differs from the curve polynomial")
    for a, b in combinations(factors, 2):
        if not polyy_coprime(a, b):
            raise ValueError("factors are not pairwise coprime")
    g = c.genus
    points = []
    for r in range(len(factors) + 1):
        for subset in combinations(range(len(factors)), r):
            u = polyy([1])
            for i in subset:
                u = u * factors[i]
            if u.degree <= g:
                points.append(MumfordDivisor(c, u, Poly()))
    return points


# -- text format ------------------------------------------------------
#
# A PolyY prints with its RatFunc coefficients in parentheses, e.g.
# ``s^2 + (2*x / x + 1)*s + (-1)``; bare rational coefficients are accepted
# on input.  A divisor prints as ``<u ; v>``.


def format_polyy(p: PolyY, var: str = "s", coeff_var: str = "x") -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for i in range(p.degree, -1, -1):
        c = p.coeff(i)
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if c == _RF_ONE and mono:
            body = mono
        else:
            body = f"({format_ratfunc(c, coeff_var)})"
            if mono:
                body += f"*{mono}"
        pieces.append(body)
    return " + ".join(pieces)


def _split_top_level(text: str, seps: str):
    """Split on separators not enclosed in parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced parentheses")
        if depth == 0 and ch in seps and cur:
            parts.append("".join(cur))
            cur = [ch]
        else:
            cur.append(ch)
    if depth:
        raise ValueError("unbalanced parentheses")
    parts.append("".join(cur))
    return parts


def parse_polyy(text: str, var: str = "s", coeff_var: str = "x") -> PolyY:
    """Parse the PolyY text format (see format_polyy)."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    coeffs: dict[int, RatFunc] = {}
    for term in _split_top_level(text, "+-"):
        term = term.strip()
        if not term:
            continue
        sign = 1
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:].strip()
        # split coefficient (parenthesized or bare rational) from the monomial
        coeff = _RF_ONE
        if term.startswith("("):
            depth, idx = 0, 0
            for idx, ch in enumerate(term):
                depth += ch == "("
                depth -= ch == ")"
                if depth == 0:
                    break
            coeff = parse_ratfunc(term[1:idx], coeff_var)
            term = term[idx + 1:].strip().lstrip("*").strip()
        elif term and not term.startswith(var):
            # bare rational or polynomial-in-x coefficient
            head = term.split("*", 1)
            if len(head) == 2 and head[1].strip().startswith(var):
                coeff = parse_ratfunc(head[0].strip(), coeff_var)
                term = head[1].strip()
            else:
                coeff = parse_ratfunc(term, coeff_var)
                term = ""
        if not term:
            exp = 0
        elif term == var:
            exp = 1
        elif term.startswith(var + "^"):
            exp = int(term[len(var) + 1:])
        else:
            raise ValueError(f"cannot parse monomial {term!r}")
        prev = coeffs.get(exp, _RF_ZERO)
        coeffs[exp] = prev + (coeff if sign > 0 else -coeff)
    out = [_RF_ZERO] * (max(coeffs) + 1)
    for e, cf in coeffs.items():
        out[e] = cf
    return Poly(out)


def format_divisor(D: MumfordDivisor, var: str = "s", coeff_var: str = "x") -> str:
    return f"<{format_polyy(D.u, var, coeff_var)} ; {format_polyy(D.v, var, coeff_var)}>"


def parse_divisor(text: str, c: Curve, var: str = "s", coeff_var: str = "x") -> MumfordDivisor:
    text = text.strip()
    if not (text.startswith("<") and text.endswith(">")):
        raise ValueError("divisor text must look like <u ; v>")
    body = text[1:-1]
    parts = _split_top_level(body, ";")
    if len(parts) != 2:
        raise ValueError("divisor text must contain exactly one ';'")
    u = parse_polyy(parts[0].strip(), var, coeff_var)
    vtxt = parts[1].lstrip(";").strip()
    v = Poly() if vtxt == "0" else parse_polyy(vtxt, var, coeff_var)
    return mumford_validate(u, v, c)
