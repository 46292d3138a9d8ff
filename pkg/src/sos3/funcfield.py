"""The rational function field Q(x): reduced fractions, places and
valuations, canonical square classes, residue equivalence modulo linear
places, the square test in a quadratic extension, and the
positive-semidefiniteness test (equivalent to being a sum of two squares in
R(x)).

Square classes are represented canonically by a squarefree polynomial with
integer coefficients whose content is squarefree and positive and whose sign
is carried by the leading coefficient; with this normalization class equality
is structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint

from .exact import (
    Poly,
    Q,
    euclid_divmod,
    is_perfect_square_poly,
    poly_gcd,
    poly_sqrt,
    rational_is_square,
    squarefree_decomposition,
    sturm_count_real_roots,
    parse_poly,
    format_poly,
    _as_rational,
)

__all__ = [
    "RatFunc",
    "Place",
    "SquareClass",
    "valuation",
    "square_class",
    "equiv_mod_place",
    "quad_ext_square_test",
    "is_psd",
    "ratfunc_is_square",
    "ratfunc_sqrt",
    "parse_ratfunc",
    "format_ratfunc",
]


class RatFunc:
    """Reduced fraction of rational polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        num = self._to_poly(num)
        den = Poly.const(1) if den is None else self._to_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = Poly.const(1)
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num // g
                    den = den // g
                lc = den.lc()
                if lc != 1:
                    inv = Q(1) / lc
                    num = num * inv
                    den = den * inv
        self.num = num
        self.den = den

    @staticmethod
    def _to_poly(value) -> Poly:
        if isinstance(value, Poly):
            return value
        return Poly.const(value)

    @classmethod
    def x(cls) -> "RatFunc":
        return cls(Poly.x())

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def as_rational(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_term()

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Poly)) or type(other) is type(Q(1)):
            return self.den == Poly.const(1) and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash(("RatFunc", self.num, self.den))

    def __repr__(self):
        return f"RatFunc({format_ratfunc(self)})"

    # -- field arithmetic -------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            # only rational-coefficient polynomials embed in Q(x); a
            # polynomial in the curve variable must handle the product itself
            return RatFunc(other) if other._is_rational() else None
        if isinstance(other, int) or type(other) is type(Q(1)):
            return RatFunc(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("zero to a negative power")
            return RatFunc(self.den**(-n), self.num**(-n))
        return RatFunc(self.num**n, self.den**n, _reduced=True)

    def __call__(self, value):
        """Evaluate at a rational point (denominator must not vanish)."""
        d = self.den(value)
        if not d:
            raise ZeroDivisionError("pole at evaluation point")
        return self.num(value) / d


@dataclass(frozen=True)
class Place:
    """A place of Q(x): a monic irreducible polynomial, or infinity.

    Finite places of degree 1 are always accepted; degree 2 is accepted only
    with a non-square discriminant (irreducibility certificate); degree >= 3
    is rejected -- residue fields beyond Q are out of scope and every place
    the pipeline needs is linear.
    """

    kind: str  # "finite" | "infinite"
    prime: Poly | None = None

    @classmethod
    def infinity(cls) -> "Place":
        return cls("infinite", None)

    @classmethod
    def finite(cls, prime: Poly) -> "Place":
        if prime.is_zero() or prime.is_constant():
            raise ValueError("place prime must be nonconstant")
        prime = prime.monic()
        if prime.degree == 2:
            b, c = prime.coeff(1), prime.coeff(0)
            disc = b * b - 4 * c
            if rational_is_square(disc):
                raise ValueError("degree-2 prime is reducible (square discriminant)")
        elif prime.degree > 2:
            raise ValueError("places of degree >= 3 are not supported")
        return cls("finite", prime)

    @classmethod
    def at(cls, root) -> "Place":
        """The linear place x = root."""
        return cls.finite(Poly.rational([-_as_rational(root), 1]))

    def __str__(self):
        if self.kind == "infinite":
            return "inf"
        return f"({format_poly(self.prime)})"


def _multiplicity(a: Poly, prime: Poly) -> int:
    m = 0
    while True:
        q, r = euclid_divmod(a, prime)
        if not r.is_zero():
            return m
        a = q
        m += 1


def valuation(f: RatFunc, p: Place) -> int:
    """Order of vanishing of ``f`` at the place ``p``."""
    if f.is_zero():
        raise ValueError("valuation of zero")
    if p.kind == "infinite":
        return f.den.degree - f.num.degree
    return _multiplicity(f.num, p.prime) - _multiplicity(f.den, p.prime)


@lru_cache(maxsize=None)
def _squarefree_int(n: int) -> int:
    """Largest squarefree divisor of a positive integer."""
    out = 1
    for p, e in factorint(n).items():
        if e % 2:
            out *= p
    return out


@dataclass(frozen=True)
class SquareClass:
    """Canonical representative of an element of Q(x)^x modulo squares."""

    rep: Poly

    def is_trivial(self) -> bool:
        return self.rep == Poly.const(1)

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        return square_class(RatFunc(self.rep * other.rep))

    def __str__(self):
        return format_poly(self.rep)


def square_class(f) -> SquareClass:
    """Canonical square class of a nonzero rational function.

    The representative is squarefree with integer coefficients, its content
    is squarefree and positive, and the sign sits in the leading coefficient.
    """
    if not isinstance(f, RatFunc):
        f = RatFunc(f)
    if f.is_zero():
        raise ValueError("square class of zero")
    g = f.num * f.den  # same class as f, polynomial
    dec = squarefree_decomposition(g)
    m = Poly.const(1)
    for part, mult in dec.parts:
        if mult % 2:
            m = m * part
    # split m = (c0/D) * M with M primitive integer; (c0/D) ~ c0*D mod squares
    denoms = [int(c.denominator) for c in m.coeffs]
    D = 1
    for d in denoms:
        D = D * d // _gcd(D, d)
    ints = [int(c * D) for c in m.coeffs]
    c0 = 0
    for c in ints:
        c0 = _gcd(c0, abs(c))
    M = Poly.rational([c // c0 for c in ints])
    unit = dec.unit * Q(c0 * D)
    sign = -1 if unit < 0 else 1
    n = abs(int(unit.numerator)) * int(unit.denominator)
    content = _squarefree_int(n)
    return SquareClass(M * Q(sign * content))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def equiv_mod_place(a: RatFunc, b: RatFunc, p: Place) -> bool:
    """Whether a/b is a square in the residue field at a linear place."""
    if p.kind != "finite" or p.prime.degree != 1:
        raise ValueError("residue equivalence supported only at linear places")
    if valuation(a, p) != 0 or valuation(b, p) != 0:
        raise ValueError("residue equivalence needs valuation 0 at the place")
    root = -p.prime.coeff(0)
    return rational_is_square(a(root) / b(root))


def ratfunc_is_square(f: RatFunc) -> bool:
    """Squareness in Q(x): f = num/den is a square iff num*den is one."""
    if f.is_zero():
        raise ValueError("square test on zero")
    return is_perfect_square_poly(f.num * f.den, "over-Q")


def ratfunc_sqrt(f: RatFunc) -> RatFunc:
    """Exact square root of a square in Q(x)."""
    return RatFunc(poly_sqrt(f.num * f.den), f.den)


def quad_ext_square_test(alpha: RatFunc, beta: RatFunc, delta: RatFunc) -> bool:
    """Decide whether alpha*U + beta is a square in Q(x)[U]/(U^2 - delta).

    For alpha != 0 this holds iff the norm beta^2 - delta*alpha^2 is a square
    gamma^2 in Q(x) with (beta + gamma)/2 also a square; both signs of gamma
    are tried.  For alpha = 0 it holds iff beta or delta*beta is a square.
    """
    alpha, beta, delta = (v if isinstance(v, RatFunc) else RatFunc(v)
                          for v in (alpha, beta, delta))
    if ratfunc_is_square(delta):
        raise ValueError("delta must not be a square in Q(x)")
    if alpha.is_zero():
        if beta.is_zero():
            return True
        return ratfunc_is_square(beta) or ratfunc_is_square(delta * beta)
    norm = beta * beta - delta * alpha * alpha
    if norm.is_zero() or not ratfunc_is_square(norm):
        return False
    gamma = ratfunc_sqrt(norm)
    for g in (gamma, -gamma):
        half = (beta + g) / 2
        if not half.is_zero() and ratfunc_is_square(half):
            return True
    return False


def is_psd(f: RatFunc) -> bool:
    """True iff ``f`` takes only nonnegative values on R, i.e. is a sum of
    two squares in R(x)."""
    if f.is_zero():
        raise ValueError("PSD test on zero")
    dec = squarefree_decomposition(f.num * f.den)
    odd = Poly.const(1)
    for part, mult in dec.parts:
        if mult % 2:
            odd = odd * part
    if dec.unit < 0:
        return False
    if odd.is_constant():
        return True
    return sturm_count_real_roots(odd) == 0


# -- text format ------------------------------------------------------


def parse_ratfunc(text: str, var: str = "x") -> RatFunc:
    """Parse ``num / den`` (separator is a slash surrounded by spaces, to
    keep it distinct from the slashes inside rational coefficients)."""
    parts = text.split(" / ")
    if len(parts) == 1:
        return RatFunc(parse_poly(parts[0], var))
    if len(parts) == 2:
        return RatFunc(parse_poly(parts[0], var), parse_poly(parts[1], var))
    raise ValueError(f"cannot parse rational function: {text!r}")


def format_ratfunc(f: RatFunc, var: str = "x") -> str:
    if f.den == Poly.const(1):
        return format_poly(f.num, var)
    return f"{format_poly(f.num, var)} / {format_poly(f.den, var)}"
