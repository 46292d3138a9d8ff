"""Exact arithmetic core: rationals, dense univariate polynomials, Euclidean
structure, squarefree decomposition, resultants and Sturm root counting.

Everything here is exact.  Scalars are arbitrary-precision rationals
(``gmpy2.mpq`` when available, ``fractions.Fraction`` otherwise -- the two are
interchangeable for our purposes and ``mpq`` is considerably faster under the
coefficient growth produced by divisor reduction).

``Poly`` is a dense immutable univariate polynomial.  The coefficient domain
is generic: any field elements supporting ``+ - * /``, equality with ``0`` and
``bool`` work, so the same class serves polynomials over the rationals and,
one level up, polynomials over the rational function field.  The operations
that need an ordered coefficient field (Sturm chains) or rational coefficients
(squarefree decomposition, square tests) live as module functions and assume
rational coefficients.

Conventions:
  * the zero polynomial has degree -1;
  * ``resultant(a, b) = lc(a)^deg(b) * prod b(alpha)`` over the roots ``alpha``
    of ``a`` counted with multiplicity (the classical Sylvester-determinant
    value); ``sylvester_resultant`` computes the determinant directly and is
    used as an independent cross-check in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
import re
from typing import Sequence

try:  # pragma: no cover - which backend is present depends on the host
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

__all__ = [
    "Q",
    "Poly",
    "SquarefreeDecomposition",
    "euclid_divmod",
    "poly_gcd",
    "poly_xgcd",
    "squarefree_decomposition",
    "squarefree_part",
    "is_perfect_square_poly",
    "poly_sqrt",
    "resultant",
    "sylvester_resultant",
    "sturm_count_real_roots",
    "rational_is_square",
    "rational_sqrt",
    "parse_rational",
    "parse_poly",
    "format_poly",
]

_ZERO = Q(0)
_ONE = Q(1)


def _as_rational(value):
    """Coerce ints / strings / rationals to the scalar backend type."""
    if isinstance(value, type(_ONE)):
        return value
    return Q(value)


class Poly:
    """Immutable dense univariate polynomial.

    Coefficients are stored little-endian (index = monomial degree) with the
    top coefficient nonzero; the zero polynomial stores an empty tuple.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Sequence = ()):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self._c = tuple(c)

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, value) -> "Poly":
        return cls((_as_rational(value),))

    @classmethod
    def rational(cls, coeffs: Sequence) -> "Poly":
        """Build a polynomial with rational coefficients, coercing ints."""
        return cls(tuple(_as_rational(c) for c in coeffs))

    @classmethod
    def x(cls) -> "Poly":
        return cls((_ZERO, _ONE))

    # -- basic structure ----------------------------------------------

    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def lc(self):
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._c[-1]

    def coeff(self, i: int):
        return self._c[i] if 0 <= i < len(self._c) else _ZERO

    def constant_term(self):
        return self._c[0] if self._c else _ZERO

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._c == other._c
        if not self._c:
            return other == 0
        if len(self._c) == 1:
            return self._c[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self._c))

    def __repr__(self):
        return f"Poly({format_poly(self)})" if self._c else "Poly(0)"

    # -- ring operations ----------------------------------------------

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self._c))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            # scalar multiplication by a coefficient-domain element
            if not other:
                return Poly()
            return Poly(tuple(c * other for c in self._c))
        a, b = self._c, other._c
        if not a or not b:
            return Poly()
        out = [_ZERO * a[0]] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.const(1) if self._is_rational() else self._one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def _one(self) -> "Poly":
        if not self._c:
            return Poly.const(1)
        lc = self._c[-1]
        return Poly((lc / lc,))

    def _is_rational(self) -> bool:
        return not self._c or isinstance(self._c[-1], type(_ONE))

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, type(_ONE))):
            return Poly.const(other) if isinstance(other, int) else Poly((other,))
        # scalar from a non-rational coefficient domain (e.g. RatFunc)
        try:
            return Poly((other,))
        except Exception:  # pragma: no cover
            return NotImplemented

    def __divmod__(self, other: "Poly"):
        return euclid_divmod(self, other)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return euclid_divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return euclid_divmod(self, other)[1]

    # -- calculus and evaluation --------------------------------------

    def derivative(self) -> "Poly":
        return Poly(tuple(c * i for i, c in enumerate(self._c) if i))

    def __call__(self, value):
        """Horner evaluation; ``value`` may live in any commutative ring
        that multiplies with the coefficients (rationals, rational functions,
        or polynomials -- the latter giving composition)."""
        if not self._c:
            return _ZERO
        acc = self._c[-1]
        if isinstance(value, Poly):
            acc = Poly((acc,))
        for c in reversed(self._c[:-1]):
            acc = acc * value + c
        return acc

    def monic(self) -> "Poly":
        if not self._c:
            raise ValueError("cannot normalize the zero polynomial")
        lc = self._c[-1]
        if lc == 1:
            return self
        inv = (lc / lc) / lc
        return Poly(tuple(c * inv for c in self._c))

    def shift_mul_x(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self._c or k == 0:
            return self
        zero = self._c[0] * 0
        return Poly((zero,) * k + self._c)


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """``unit * prod(factor^multiplicity)`` with monic pairwise-coprime
    squarefree factors."""

    unit: object
    parts: tuple  # of (Poly, int)

    def reconstruct(self) -> Poly:
        acc = Poly.const(1) * self.unit
        for f, m in self.parts:
            acc = acc * f**m
        return acc


def euclid_divmod(a: Poly, b: Poly):
    """Euclidean division: ``a = q*b + r`` with ``deg r < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero() or a.degree < b.degree:
        return Poly(), a
    bc = b.coeffs
    inv_lc = (bc[-1] / bc[-1]) / bc[-1]
    rem = list(a.coeffs)
    db = b.degree
    quot = [rem[0] * 0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if not c:
            continue
        q = c * inv_lc
        quot[i - db] = q
        rem[i] = c * 0
        for j in range(db):
            rem[i - db + j] = rem[i - db + j] - q * bc[j]
    return Poly(quot), Poly(rem[:db])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials")
    while not b.is_zero():
        a, b = b, euclid_divmod(a, b)[1]
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Extended Euclid: returns (g, s, t) with g monic and s*a + t*b = g."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials")
    one = (a if not a.is_zero() else b)._one()
    r0, r1 = a, b
    s0, s1 = one, Poly()
    t0, t1 = Poly(), one
    while not r1.is_zero():
        q, r = euclid_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.lc()
    inv = (lc / lc) / lc
    return r0.monic(), s0 * inv, t0 * inv


def squarefree_part(a: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of ``a``."""
    if a.is_zero():
        raise ValueError("squarefree part of zero")
    if a.is_constant():
        return a.monic()
    return (a // poly_gcd(a, a.derivative())).monic()


def squarefree_decomposition(a: Poly) -> SquarefreeDecomposition:
    """Yun's algorithm over a characteristic-0 coefficient field."""
    if a.is_zero():
        raise ValueError("squarefree decomposition of zero")
    unit = a.lc()
    a = a.monic()
    if a.is_constant():
        return SquarefreeDecomposition(unit, ())
    parts = []
    g = poly_gcd(a, a.derivative())
    c = a // g
    d = a.derivative() // g - c.derivative()
    m = 1
    while c.degree > 0:
        p = poly_gcd(c, d)
        if p.degree > 0:
            parts.append((p, m))
        c2 = c // p
        d = d // p - c2.derivative()
        c = c2
        m += 1
    return SquarefreeDecomposition(unit, tuple(parts))


def rational_is_square(q) -> bool:
    """True iff ``q`` is the square of a rational number."""
    q = _as_rational(q)
    if q < 0:
        return False
    num, den = int(q.numerator), int(q.denominator)
    return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den


def rational_sqrt(q):
    """Exact nonnegative square root of a rational square."""
    q = _as_rational(q)
    if not rational_is_square(q):
        raise ValueError(f"{q} is not a rational square")
    return Q(isqrt(int(q.numerator)), isqrt(int(q.denominator)))


def is_perfect_square_poly(a: Poly, mode: str = "over-Q") -> bool:
    """Squareness of ``a`` in C(x) or Q(x).

    Over C(x) a polynomial is a square iff every multiplicity in its
    squarefree decomposition is even; over Q(x) the unit must additionally be
    a rational square.
    """
    if a.is_zero():
        raise ValueError("square test on zero")
    if mode not in ("over-Q", "over-C"):
        raise ValueError(f"unknown mode {mode!r}")
    dec = squarefree_decomposition(a)
    if any(m % 2 for _, m in dec.parts):
        return False
    if mode == "over-Q":
        return rational_is_square(dec.unit)
    return True


def poly_sqrt(a: Poly) -> Poly:
    """Exact square root of a polynomial that is a square in Q[x]."""
    if not is_perfect_square_poly(a, "over-Q"):
        raise ValueError("polynomial is not a square over Q")
    dec = squarefree_decomposition(a)
    root = Poly.const(rational_sqrt(dec.unit))
    for f, m in dec.parts:
        root = root * f ** (m // 2)
    return root


def resultant(a: Poly, b: Poly):
    """Resultant via the Euclidean polynomial remainder sequence.

    Convention: ``res(a, b) = lc(a)^deg(b) * prod_{a(alpha)=0} b(alpha)``,
    which is the Sylvester determinant with the rows of ``a`` on top.
    Works over any exact coefficient field.
    """
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant of zero polynomial")
    one = a._one().lc()
    acc = one
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2:
            acc = -acc
        a, b = b, a
    while True:
        if b.degree == 0:
            return acc * b.lc() ** a.degree
        r = euclid_divmod(a, b)[1]
        if r.is_zero():
            return acc * 0
        if (a.degree * b.degree) % 2:
            acc = -acc
        acc = acc * b.lc() ** (a.degree - r.degree)
        a, b = b, r


def sylvester_resultant(a: Poly, b: Poly):
    """Resultant as the determinant of the Sylvester matrix (reference
    implementation, O(n^3) exact Gaussian elimination)."""
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant of zero polynomial")
    m, n = a.degree, b.degree
    one = a._one().lc()
    size = m + n
    if size == 0:
        return one
    rows = []
    ac = list(reversed(a.coeffs))
    bc = list(reversed(b.coeffs))
    zero = one * 0
    for i in range(n):
        rows.append([zero] * i + ac + [zero] * (n - 1 - i))
    for i in range(m):
        rows.append([zero] * i + bc + [zero] * (m - 1 - i))
    det = one
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            return zero
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        pv = rows[col][col]
        det = det * pv
        inv = one / pv
        for r in range(col + 1, size):
            factor = rows[r][col] * inv
            if not factor:
                continue
            rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return det


def _sign_at_plus_inf(p: Poly) -> int:
    c = p.lc()
    return 1 if c > 0 else -1


def _sign_at_minus_inf(p: Poly) -> int:
    s = _sign_at_plus_inf(p)
    return s if p.degree % 2 == 0 else -s


def sturm_count_real_roots(a: Poly) -> int:
    """Number of distinct real roots of a squarefree rational polynomial."""
    if a.is_zero():
        raise ValueError("Sturm count of zero")
    if a.is_constant():
        return 0
    if poly_gcd(a, a.derivative()).degree > 0:
        raise ValueError("Sturm count requires squarefree input")
    chain = [a, a.derivative()]
    while chain[-1].degree > 0:
        r = euclid_divmod(chain[-2], chain[-1])[1]
        if r.is_zero():
            break
        chain.append(-r)
    def variations(signs):
        signs = [s for s in signs if s]
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)
    lo = variations([_sign_at_minus_inf(p) for p in chain if not p.is_zero()])
    hi = variations([_sign_at_plus_inf(p) for p in chain if not p.is_zero()])
    return lo - hi


# -- text format ------------------------------------------------------
#
# Terms like ``x^2 + 14063/22*x + 196743825/1936``; the ``*`` is optional and
# whitespace is ignored.  parse(format(p)) round-trips exactly.

_TERM_RE = re.compile(
    r"""(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>\d+(?:/\d+)?)\s*(?:\*\s*)?(?P<var1>[A-Za-z_]\w*)?
          | (?P<var2>[A-Za-z_]\w*)
        )
        (?:\s*\^\s*(?P<exp>\d+))?\s*""",
    re.VERBOSE,
)


def parse_rational(text: str):
    """Parse an exact rational literal ``p``, ``-p`` or ``p/q``."""
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(?:\s*/\s*\d+)?", text):
        raise ValueError(f"not an exact rational literal: {text!r}")
    return Q(text.replace(" ", ""))


def parse_poly(text: str, var: str = "x") -> Poly:
    """Parse the polynomial text format (see module docstring)."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    pos = 0
    coeffs: dict[int, object] = {}
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign = m.group("sign")
        if sign is None and not first:
            raise ValueError(f"missing +/- before {text[pos:]!r}")
        name = m.group("var1") or m.group("var2")
        if name is not None and name != var:
            raise ValueError(f"unexpected symbol {name!r} (variable is {var!r})")
        coeff = Q(m.group("coeff")) if m.group("coeff") else _ONE
        if sign == "-":
            coeff = -coeff
        if name is None:
            exp = 0
            if m.group("exp"):
                raise ValueError("exponent without variable")
        else:
            exp = int(m.group("exp")) if m.group("exp") else 1
        coeffs[exp] = coeffs.get(exp, _ZERO) + coeff
        pos = m.end()
        first = False
    if not coeffs:
        return Poly()
    out = [_ZERO] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return Poly(out)


def format_poly(p: Poly, var: str = "x") -> str:
    """Render in the canonical text format, highest degree first."""
    if p.is_zero():
        return "0"
    pieces = []
    for i in range(p.degree, -1, -1):
        c = p.coeff(i)
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        if i == 0:
            body = str(mag)
        else:
            x = var if i == 1 else f"{var}^{i}"
            body = x if mag == 1 else f"{mag}*{x}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)
