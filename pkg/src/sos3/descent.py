"""2-descent toolkit.

For a hyperelliptic curve t^2 = f(s) with f monic and split into monic,
pairwise coprime factors f_1 ... f_k, a semi-reduced divisor div(u, v) with
u coprime to f maps to the tuple of square classes of the norms

    N_i((-1)^{deg u} u(y_i)) = (-1)^{deg u . deg f_i} res(f_i, u),

one per factor (y_i the root of f_i in its residue algebra).  This induces a
homomorphism on the divisor class group whose kernel contains the doubles and
whose image lies in the kernel of the norm map: the product of the
components of any image tuple is a square.  2-torsion points <f_j, 0> are
not coprime to f; their tuple is computed from the complementary factors
using that the sum of all Weierstrass points is principal.

The module also provides the genus-1 descent map and its 2-isogeny dual, the
(2,2)-isogeny dual of a genus-2 curve built from bracket polynomials, and
the constructors of the four auxiliary curves attached to a pair (B, C) and
a twist delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exact import Poly, resultant
from .funcfield import RatFunc, SquareClass, square_class
from .jacobian import (
    Curve,
    MumfordDivisor,
    PolyY,
    cantor_add,
    format_polyy,
    new_curve,
    polyy,
    polyy_coprime,
    polyy_squarefree,
    reduce_divisor,
)

__all__ = [
    "SchaeferContext",
    "ClassTuple",
    "schaefer_context",
    "xi",
    "xi_is_2torsion_image",
    "elliptic_dual",
    "elliptic_gamma",
    "richelot_dual",
    "split_family",
    "SplitCurve",
    "FamilySplit",
]

_RF_ONE = RatFunc(1)
_TRIVIAL = square_class(RatFunc(1))


@dataclass(frozen=True)
class SchaeferContext:
    """A curve together with a monic pairwise-coprime splitting of f."""

    curve: Curve
    factors: tuple


def schaefer_context(curve: Curve, factors) -> SchaeferContext:
    factors = tuple(factors)
    prod = polyy([1])
    for p in factors:
        if p.is_zero() or p.lc() != _RF_ONE or p.degree < 1:
            raise ValueError("factors must be monic and nonconstant")
        prod = prod * p
    if prod != curve.f:
        raise ValueError("product of factors differs from the curve polynomial")
    for a, b in combinations(factors, 2):
        if not polyy_coprime(a, b):
            raise ValueError("factors are not pairwise coprime")
    return SchaeferContext(curve, factors)


@dataclass(frozen=True)
class ClassTuple:
    """One square class per factor; their product is always trivial."""

    components: tuple

    def __post_init__(self):
        prod = _TRIVIAL
        for c in self.components:
            prod = prod * c
        if not prod.is_trivial():
            raise ValueError("class tuple violates the norm-kernel condition")

    def is_trivial(self) -> bool:
        return all(c.is_trivial() for c in self.components)

    def __mul__(self, other: "ClassTuple") -> "ClassTuple":
        if len(self.components) != len(other.components):
            raise ValueError("class tuples of different lengths")
        return ClassTuple(tuple(a * b for a, b in
                                zip(self.components, other.components)))

    def __str__(self):
        return "(" + ", ".join(f"[{c}]" for c in self.components) + ")"


def _norm_class(factor: PolyY, u: PolyY) -> SquareClass:
    """Square class of (-1)^{deg u . deg factor} res(factor, u)."""
    r = resultant(factor, u)
    if not r:
        raise ValueError("resultant vanished: polynomials share a factor")
    if (u.degree * factor.degree) % 2:
        r = -r
    return square_class(r)


def _two_torsion_factor_tuple(j: int, ctx: SchaeferContext) -> ClassTuple:
    """Image of the 2-torsion point <f_j, 0>.

    The component at i != j is the norm class of (-1)^{deg f_j} f_j(y_i).
    The component at j comes from the identity <f_j, 0> = sum over i != j of
    <f_i, 0> (the sum of all Weierstrass points is the divisor of t), so it
    is the product of the norm classes of (-1)^{deg f_i} f_i(y_j).
    """
    comps = []
    for i, fi in enumerate(ctx.factors):
        if i != j:
            comps.append(_norm_class(fi, ctx.factors[j]))
        else:
            cls = _TRIVIAL
            for k, fk in enumerate(ctx.factors):
                if k != j:
                    cls = cls * _norm_class(ctx.factors[j], fk)
            comps.append(cls)
    return ClassTuple(tuple(comps))


def _subset_tuple(subset, ctx: SchaeferContext) -> ClassTuple:
    out = ClassTuple(tuple(_TRIVIAL for _ in ctx.factors))
    for j in subset:
        out = out * _two_torsion_factor_tuple(j, ctx)
    return out


def _factor_subset_of(u: PolyY, ctx: SchaeferContext):
    """Indices of the factors whose product is u, or None."""
    for r in range(len(ctx.factors) + 1):
        for subset in combinations(range(len(ctx.factors)), r):
            prod = polyy([1])
            for i in subset:
                prod = prod * ctx.factors[i]
            if prod == u:
                return subset
    return None


def xi(D: MumfordDivisor, ctx: SchaeferContext) -> ClassTuple:
    """Descent image of a semi-reduced divisor.

    When u shares a factor with f, the divisor passes through a Weierstrass
    point; a 2-torsion point is added to move it off (the image of the shift
    is divided back out), or -- for a pure 2-torsion point -- the direct
    complementary-factor formula is used.
    """
    if D.curve != ctx.curve:
        raise ValueError("divisor lives on a different curve")
    u = D.u
    if u.degree == 0:
        return ClassTuple(tuple(_TRIVIAL for _ in ctx.factors))
    if polyy_coprime(u, ctx.curve.f):
        return ClassTuple(tuple(_norm_class(fi, u) for fi in ctx.factors))
    if D.v.is_zero():
        subset = _factor_subset_of(u, ctx)
        if subset is not None:
            return _subset_tuple(subset, ctx)
    # shift by a 2-torsion point until u is coprime to f
    n = len(ctx.factors)
    for r in range(1, n):
        for subset in combinations(range(n), r):
            t_u = polyy([1])
            for i in subset:
                t_u = t_u * ctx.factors[i]
            t = MumfordDivisor(ctx.curve, t_u, Poly())
            shifted = cantor_add(reduce_divisor(D), t)
            if polyy_coprime(shifted.u, ctx.curve.f):
                base = ClassTuple(tuple(_norm_class(fi, shifted.u)
                                        for fi in ctx.factors))
                return base * _subset_tuple(subset, ctx)
    raise ValueError("u is not coprime to f and no 2-torsion shift fixes it")


def xi_is_2torsion_image(t: ClassTuple, ctx: SchaeferContext) -> bool:
    """Whether the tuple is the image of a sum of 2-torsion points."""
    n = len(ctx.factors)
    if len(t.components) != n:
        raise ValueError("tuple length differs from the number of factors")
    for r in range(n):
        for subset in combinations(range(n), r):
            if _subset_tuple(subset, ctx) == t:
                return True
    return False


# -- genus 1 ----------------------------------------------------------


def elliptic_dual(S: RatFunc, T: RatFunc):
    """Coefficients of the curve 2-isogenous to z^2 = y(y^2 + S y + T).

    Composing twice gives (4S, 16T), the [2]-scaled model.
    """
    S = S if isinstance(S, RatFunc) else RatFunc(S)
    T = T if isinstance(T, RatFunc) else RatFunc(T)
    if T.is_zero() or (S * S - 4 * T).is_zero():
        raise ValueError("degenerate curve: T (S^2 - 4T) must be nonzero")
    return (-2 * S, S * S - 4 * T)


def elliptic_gamma(point, S: RatFunc, T: RatFunc) -> SquareClass:
    """Descent class of a point of z^2 = y(y^2 + S y + T).

    ``point`` is None for the neutral element, else a pair (y, z); the map
    sends a finite point with y != 0 to [y], the point (0, 0) to [T], and
    the neutral element to [1].
    """
    S = S if isinstance(S, RatFunc) else RatFunc(S)
    T = T if isinstance(T, RatFunc) else RatFunc(T)
    if point is None:
        return _TRIVIAL
    y, z = point
    y = y if isinstance(y, RatFunc) else RatFunc(y)
    z = z if isinstance(z, RatFunc) else RatFunc(z)
    if z * z != y * (y * y + S * y + T):
        raise ValueError("point is not on the curve")
    if y.is_zero():
        return square_class(T)
    return square_class(y)


# -- genus 2 ----------------------------------------------------------


def _bracket(p: PolyY, q: PolyY) -> PolyY:
    return p.derivative() * q - p * q.derivative()


def richelot_dual(G1: PolyY, G2: PolyY, G3: PolyY):
    """Bracket polynomials and splitting determinant of a quadratic
    splitting G1 G2 G3 of a quintic.

    Returns (Delta, L1, L2, L3) with L1 = [G2, G3], L2 = [G3, G1],
    L3 = [G1, G2] and Delta the determinant of the 3x3 coefficient matrix;
    the dual curve is Delta zhat^2 = L1 L2 L3.
    """
    gs = (G1, G2, G3)
    for g in gs:
        if g.is_zero() or g.degree > 2:
            raise ValueError("degree violation: each factor must have degree <= 2")
    if G1.degree + G2.degree + G3.degree != 5:
        raise ValueError("degree violation: the product must be a quintic")
    rows = [[_as_rf(g.coeff(i)) for i in range(3)] for g in gs]
    delta = (rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
             - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
             + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]))
    if delta.is_zero():
        raise ValueError("singular splitting: the coefficient determinant vanishes")
    return (delta, _bracket(G2, G3), _bracket(G3, G1), _bracket(G1, G2))


def _as_rf(c) -> RatFunc:
    return c if isinstance(c, RatFunc) else RatFunc(c)


# -- the four auxiliary curves ---------------------------------------


@dataclass(frozen=True)
class SplitCurve:
    """A validated curve together with its defining factorization."""

    curve: Curve
    factors: tuple


@dataclass(frozen=True)
class FamilySplit:
    cplus: SplitCurve
    cminus: SplitCurve
    cplus_hat: SplitCurve
    cminus_hat: SplitCurve


def _build_split(name: str, factors) -> SplitCurve:
    prod = polyy([1])
    for g in factors:
        if not polyy_squarefree(g):
            raise ValueError(
                f"{name}: factor {format_polyy(g, 'y')} is not squarefree")
        prod = prod * g
    for a, b in combinations(factors, 2):
        if not polyy_coprime(a, b):
            raise ValueError(
                f"{name}: factors {format_polyy(a, 'y')} and "
                f"{format_polyy(b, 'y')} share a root")
    return SplitCurve(new_curve(prod), tuple(factors))


def split_family(B, C, delta) -> FamilySplit:
    """The two genus-2 curves and two genus-1 curves attached to (B, C)
    twisted by delta:

        cplus:      z^2 = (y + d(1+C)/2) (y^2 - (d(1-C)/2)^2)
                          (y^2 - d^2 ((1+C)^2 - 4B)/4)
        cplus_hat:  z^2 = (y + d(1+C)) (y^2 - 4 d^2 B) (y^2 - 4 d^2 C)
        cminus:     z^2 = y (y^2 - d((1-C)^2 - 2(B-C)) y + d^2 (B-C)^2)
        cminus_hat: z^2 = y (y + d(1-C)^2) (y + d((1-C)^2 - 4(B-C)))

    Each right side must be squarefree; a violation is reported with the
    offending factor named.
    """
    B, C, delta = (_as_rf(v) for v in (B, C, delta))
    if delta.is_zero():
        raise ValueError("delta must be nonzero")
    if (B - C).is_zero():
        raise ValueError("cminus: factor B - C vanishes identically")
    one_m_c = 1 - C
    one_p_c = 1 + C
    disc = one_p_c * one_p_c - 4 * B
    d2 = delta * delta
    y = polyy([0, 1])

    cplus = _build_split("cplus", (
        polyy([delta * one_p_c / 2, 1]),
        y * y - polyy([(delta * one_m_c / 2) ** 2]),
        y * y - polyy([d2 * disc / 4]),
    ))
    cplus_hat = _build_split("cplus_hat", (
        polyy([delta * one_p_c, 1]),
        y * y - polyy([4 * d2 * B]),
        y * y - polyy([4 * d2 * C]),
    ))
    cminus = _build_split("cminus", (
        y,
        polyy([d2 * (B - C) ** 2,
               -delta * (one_m_c * one_m_c - 2 * (B - C)), 1]),
    ))
    cminus_hat = _build_split("cminus_hat", (
        y,
        polyy([delta * one_m_c * one_m_c, 1]),
        polyy([delta * (one_m_c * one_m_c - 4 * (B - C)), 1]),
    ))
    return FamilySplit(cplus, cminus, cplus_hat, cminus_hat)
