"""The explicit two-parameter-plus-one family of positive polynomials

    P(x^2, y^2) = (y^2+1) (y^2+C(x^2)) (y^4 + (1+C(x^2)) y^2 + B(x^2)),

built from rational parameters (eta, omega, rho) through

    b1 = (rho^2-eta^2)/(omega^2-eta^2) + (eta^2-omega^2)/4,
    B(x) = (x+b1)^2 - eta^2,    C(x) = 2(x+b1) + omega^2 - eta^2 - 1,

together with the full certification pipeline: positivity, the
non-vanishing and non-square hypothesis suites, the torsion certificate on
the odd-degree model (2-torsion enumeration, the 8-torsion identities, the
conjugation-invariance and obstruction analysis), the 2-descent
certificate on the four auxiliary curves, and the sum-of-three-squares
product identity verifier.

A run produces a deterministic certificate: an ordered list of named
checks, each with an exact witness, and a verdict -- PROVED when every
check passes, INCONCLUSIVE otherwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .exact import (
    Poly,
    Q,
    euclid_divmod,
    format_poly,
    is_perfect_square_poly,
    poly_gcd,
    rational_is_square,
    squarefree_decomposition,
    sturm_count_real_roots,
    _as_rational,
)
from .funcfield import RatFunc, format_ratfunc, is_psd, square_class
from .jacobian import (
    MumfordDivisor,
    cantor_add,
    format_divisor,
    format_polyy,
    identity_divisor,
    polyy,
    scalar_mul,
    two_torsion,
)
from .antineutral import (
    TildeModel,
    build_tilde,
    is_sigma_invariant,
    sigma_invariant_oracle,
    varpi_antineutral,
)
from .descent import (
    richelot_dual,
    schaefer_context,
    split_family,
    xi,
    xi_is_2torsion_image,
)

__all__ = [
    "FamilyParams",
    "FamilyInstance",
    "MultiPoly",
    "Check",
    "Certificate",
    "build_family",
    "tilde_split",
    "check_positivity",
    "check_nonvanishing",
    "check_nonsquares",
    "torsion_certificate",
    "descent_certificate",
    "verify_sos3_identity",
    "prove_not_sos3",
]


@dataclass(frozen=True)
class FamilyParams:
    eta: object
    omega: object
    rho: object

    def __post_init__(self):
        object.__setattr__(self, "eta", _as_rational(self.eta))
        object.__setattr__(self, "omega", _as_rational(self.omega))
        object.__setattr__(self, "rho", _as_rational(self.rho))


@dataclass(frozen=True)
class FamilyInstance:
    params: FamilyParams
    b1: object
    B: Poly
    C: Poly
    P_factors: tuple

    @property
    def tilde(self) -> TildeModel:
        """Odd-degree model of the curve, built (and validated) on first
        use; construction is much more expensive than the instance itself."""
        cached = self.__dict__.get("_tilde")
        if cached is None:
            x2 = Poly([0, 0, 1])
            Bx2, Cx2 = RatFunc(self.B(x2)), RatFunc(self.C(x2))
            QT = polyy([Cx2, 1]) * polyy([Bx2, 1 + Cx2, 1])
            cached = build_tilde(QT)
            object.__setattr__(self, "_tilde", cached)
        return cached


@dataclass(frozen=True)
class Check:
    id: str
    statement: str
    passed: bool
    witness: str


@dataclass(frozen=True)
class Certificate:
    params: FamilyParams
    verdict: str
    checks: tuple
    notes: tuple

    def to_json(self) -> str:
        doc = {
            "params": {
                "eta": str(self.params.eta),
                "omega": str(self.params.omega),
                "rho": str(self.params.rho),
            },
            "verdict": self.verdict,
            "notes": list(self.notes),
            "checks": [
                {
                    "id": c.id,
                    "statement": c.statement,
                    "status": "pass" if c.passed else "fail",
                    "witness": c.witness,
                }
                for c in self.checks
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"params: eta={self.params.eta} omega={self.params.omega} "
            f"rho={self.params.rho}",
            f"verdict: {self.verdict}",
        ]
        lines += [f"note: {n}" for n in self.notes]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"[{mark}] {c.id}: {c.statement} -- witness: {c.witness}")
        return "\n".join(lines) + "\n"


# -- construction ------------------------------------------------------


def build_family(p: FamilyParams) -> FamilyInstance:
    eta, omega, rho = p.eta, p.omega, p.rho
    if omega * omega == eta * eta:
        raise ValueError("parameter degeneracy: |omega| must differ from |eta|")
    b1 = (rho * rho - eta * eta) / (omega * omega - eta * eta) \
        + (eta * eta - omega * omega) / 4
    x = Poly.x()
    B = (x + b1) * (x + b1) - Poly.const(eta * eta)
    C = 2 * (x + b1) + Poly.const(omega * omega - eta * eta - 1)
    x2 = Poly([0, 0, 1])
    Bx2, Cx2 = RatFunc(B(x2)), RatFunc(C(x2))
    factors = (
        polyy([1, 0, 1]),
        polyy([Cx2, 0, 1]),
        polyy([Bx2, 0, 1 + Cx2, 0, 1]),
    )
    # the odd-degree model (the ``tilde`` property) is built from the cubic
    # with the y^2+1 factor stripped:
    # Q(T) = (T + C(x^2)) (T^2 + (1+C(x^2)) T + B(x^2))
    return FamilyInstance(p, b1, B, C, factors)


def tilde_split(inst: FamilyInstance):
    """The split f = g1 g2 g3 of the odd-degree model: with
    d = (1-C(x^2))(B(x^2)-C(x^2)),

        g1 = s,
        g2 = (-(s+d)^2 + C(s-d)^2) / (C-1),
        g3 = ((s+d)^4 - (1+C)(s+d)^2(s-d)^2 + B(s-d)^4) / (B-C),

    all arguments at x^2.
    """
    x2 = Poly([0, 0, 1])
    B, C = RatFunc(inst.B(x2)), RatFunc(inst.C(x2))
    d = inst.tilde.d
    sp, sm = polyy([d, 1]), polyy([-d, 1])
    g1 = polyy([0, 1])
    g2 = (C * (sm * sm) - sp * sp) * (1 / (C - 1))
    g3 = (sp ** 4 - (1 + C) * (sp * sp) * (sm * sm) + B * sm ** 4) \
        * (1 / (B - C))
    return g1, g2, g3


# -- hypothesis suites -------------------------------------------------


def check_positivity(inst: FamilyInstance):
    eta, omega = inst.params.eta, inst.params.omega
    b1 = inst.b1
    w2e2 = omega * omega - eta * eta
    checks = [
        Check("A22.1", "omega > 1 + |eta|", omega > 1 + abs(eta),
              f"omega - 1 - |eta| = {omega - 1 - abs(eta)}"),
        Check("A22.2", "omega^2 - eta^2 > 2 omega", w2e2 > 2 * omega,
              f"omega^2 - eta^2 - 2 omega = {w2e2 - 2 * omega}"),
        Check("A22.3", "b1 > 1 + (omega^2 - eta^2)/2", b1 > 1 + w2e2 / 2,
              f"b1 - 1 - (omega^2 - eta^2)/2 = {b1 - 1 - w2e2 / 2}"),
    ]
    one_p_c = inst.C + Poly.const(1)
    for cid, label, p in (("A22.4B", "B", inst.B), ("A22.4C", "C", inst.C),
                          ("A22.4D", "1 + C", one_p_c)):
        checks.append(Check(
            cid, f"{label}(x^2) > 0 for every real x",
            _positive_on_squares(p),
            f"{label}(0) = {p(Q(0))}"))
    return checks


def _positive_on_squares(p: Poly) -> bool:
    """Exact positivity of p(x^2) on the real line: p(0) > 0 and the radical
    of p(x^2) has no real root."""
    if p.is_zero() or not p(Q(0)) > 0:
        return False
    comp = p(Poly([0, 0, 1]))
    radical = Poly.const(1)
    for part, _ in squarefree_decomposition(comp).parts:
        radical = radical * part
    if radical.is_constant():
        return True
    return sturm_count_real_roots(radical) == 0


def _nonvanishing_items(p: FamilyParams):
    eta, omega = p.eta, p.omega
    w2e2 = omega * omega - eta * eta
    return [
        ("A23.1a", "eta", p.eta),
        ("A23.1b", "rho", p.rho),
        ("A23.2a", "omega^2 - eta^2 - 2 - 2 eta", w2e2 - 2 - 2 * eta),
        ("A23.2b", "omega^2 - eta^2 - 2 + 2 eta", w2e2 - 2 + 2 * eta),
        ("A23.3", "(omega^2 - eta^2 - 2)^2 - 4 eta^2 - 4",
         (w2e2 - 2) ** 2 - 4 * eta * eta - 4),
        ("A23.4a", "omega^2 - eta^2 - 1 + 2 eta", w2e2 - 1 + 2 * eta),
        ("A23.4b", "omega^2 - eta^2 - 1 - 2 eta", w2e2 - 1 - 2 * eta),
        ("A23.5", "(omega^2 - eta^2 - 1)^2 - 4 eta^2 - 1",
         (w2e2 - 1) ** 2 - 4 * eta * eta - 1),
        ("A23.6a", "omega^2 - eta^2 - 2 eta", w2e2 - 2 * eta),
        ("A23.6b", "omega^2 - eta^2 + 2 eta", w2e2 + 2 * eta),
    ]


def check_nonvanishing(inst: FamilyInstance):
    return [Check(cid, f"{stmt} != 0", bool(value), str(value))
            for cid, stmt, value in _nonvanishing_items(inst.params)]


def _nonsquare_items(p: FamilyParams, b1):
    eta, omega = p.eta, p.omega
    w2e2 = omega * omega - eta * eta
    A = w2e2 * w2e2 - 4 * omega * omega
    N2 = 2 * b1 - 2 + w2e2
    wm, wp = w2e2 - 2 * omega, w2e2 + 2 * omega
    bm, bp = b1 - 1 - omega, b1 - 1 + omega
    sq_b = (b1 - 1) ** 2 - omega * omega
    sq_m = (omega - 1) ** 2 - eta * eta
    sq_p = (omega + 1) ** 2 - eta * eta
    em, ep = omega - 1 - eta, omega - 1 + eta
    items = [
        ("A24.a", "(omega^2-eta^2)^2 - 4 omega^2", A),
        ("A24.b", "(2b1-2+omega^2-eta^2)(omega^2-eta^2-2omega)", N2 * wm),
        ("A24.c", "(2b1-2+omega^2-eta^2)(omega^2-eta^2+2omega)", N2 * wp),
        ("A24.dsup", "2(omega^2-eta^2-2omega)(b1-1-omega)", 2 * wm * bm),
        ("A24.esup", "2(omega^2-eta^2+2omega)(b1-1+omega)", 2 * wp * bp),
        ("A24.d", "2(2b1-2+omega^2-eta^2)(b1-1+omega)", 2 * N2 * bp),
        ("A24.e", "2(2b1-2+omega^2-eta^2)(b1-1-omega)", 2 * N2 * bm),
        ("A24.f", "((b1-1)^2-omega^2)((omega^2-eta^2)^2-4omega^2)", sq_b * A),
        ("A24.j", "2(omega^2-eta^2)(2b1-2+omega^2-eta^2)", 2 * w2e2 * N2),
        ("A24.m", "b1^2 - eta^2", b1 * b1 - eta * eta),
        ("A24.n", "2b1 + omega^2 - eta^2 - 1", 2 * b1 + w2e2 - 1),
    ]
    for n in (0, 1):
        items.append((f"A24.g.n{n}",
                      f"2(omega^2-eta^2)(omega^2-eta^2-2omega)((omega+1)^2-eta^2)^{n}",
                      2 * w2e2 * wm * sq_p ** n))
        items.append((f"A24.h.n{n}",
                      f"2(omega^2-eta^2)(omega^2-eta^2+2omega)((omega-1)^2-eta^2)^{n}",
                      2 * w2e2 * wp * sq_m ** n))
    for n1 in (0, 1):
        for n2 in (0, 1):
            for n3 in (0, 1):
                if n1 == n2 == n3 == 0:
                    continue
                items.append((
                    f"A24.i.{n1}{n2}{n3}",
                    f"((b1-1)^2-omega^2)^{n1} ((omega-1)^2-eta^2)^{n2} "
                    f"((omega+1)^2-eta^2)^{n3}",
                    sq_b ** n1 * sq_m ** n2 * sq_p ** n3))
    for n1 in (0, 1):
        for n2 in (0, 1):
            items.append((
                f"A24.k.{n1}{n2}",
                f"2^{n1} (omega^2-eta^2+2omega)(b1-1+omega)(omega^2-eta^2)^{n1} "
                f"(2b1-2+omega^2-eta^2)^{1 - n1} (omega-1-eta)^{1 - n2} "
                f"(omega-1+eta)^{n2}",
                Q(2) ** n1 * wp * bp * w2e2 ** n1 * N2 ** (1 - n1)
                * em ** (1 - n2) * ep ** n2))
            items.append((
                f"A24.l.{n1}{n2}",
                f"2^{1 - n1} (omega^2-eta^2+2omega)(omega^2-eta^2)^{n1} "
                f"(2b1-2+omega^2-eta^2)^{n1} (omega-1-eta)^{1 - n2} "
                f"(omega-1+eta)^{n2}",
                Q(2) ** (1 - n1) * wp * w2e2 ** n1 * N2 ** n1
                * em ** (1 - n2) * ep ** n2))
    return sorted(items)


def check_nonsquares(inst: FamilyInstance):
    return [Check(cid, f"{stmt} is not a rational square",
                  not rational_is_square(value), str(value))
            for cid, stmt, value in _nonsquare_items(inst.params, inst.b1)]


def _nonsquare_map(inst: FamilyInstance):
    return {cid: value for cid, _, value in
            _nonsquare_items(inst.params, inst.b1)}


# -- torsion certificate ----------------------------------------------


def _nonsquare_over_C(f: RatFunc) -> bool:
    """Non-squareness in C(x)."""
    if f.is_zero():
        return False
    return not is_perfect_square_poly(f.num * f.den, "over-C")


def torsion_certificate(inst: FamilyInstance):
    checks = []
    x2 = Poly([0, 0, 1])
    B, C = RatFunc(inst.B(x2)), RatFunc(inst.C(x2))
    one = RatFunc(1)
    for cid, label, val in (
        ("T33.ns.B", "B(x^2)", B),
        ("T33.ns.C", "C(x^2)", C),
        ("T33.ns.disc", "(1+C(x^2))^2 - 4B(x^2)", (one + C) ** 2 - 4 * B),
        ("T33.ns.BmC", "B(x^2) - C(x^2)", B - C),
        ("T33.ns.CBmC", "C(x^2)(B(x^2) - C(x^2))", C * (B - C)),
        ("T33.ns.KBmC", "(1 - C(x^2))(B(x^2) - C(x^2))", (one - C) * (B - C)),
    ):
        checks.append(Check(cid, f"{label} is not a square in C(x)",
                            _nonsquare_over_C(val), format_ratfunc(val)))

    m = inst.tilde
    curve, d = m.tilde_curve, m.d
    g1, g2, g3 = tilde_split(inst)
    checks.append(Check("T33.split", "odd-degree model splits as g1 g2 g3",
                        g1 * g2 * g3 == curve.f,
                        f"g2 = {format_polyy(g2)}"))

    # Prop-level argument that <g1, 0> is not a double: the quadratic
    # extension by a root of 4C(B-C)^2 maps the relevant class to
    # -U + (1+C)(B-C); its norm is ((B-C)(1-C))^2, so squareness reduces to
    # B-C or C(B-C) being a square -- both excluded over C(x).
    norm = ((one + C) * (B - C)) ** 2 - 4 * C * (B - C) ** 2
    gamma = (B - C) * (one - C)
    half_plus = ((one + C) * (B - C) + gamma) / 2
    half_minus = ((one + C) * (B - C) - gamma) / 2
    checks.append(Check(
        "T33.g1notdouble",
        "<g1,0> is not a double: the quadratic-extension square test fails "
        "(norm is the square of (B-C)(1-C); both half-trace candidates "
        "B-C and C(B-C) are non-squares in C(x))",
        norm == gamma * gamma
        and half_plus == B - C and half_minus == C * (B - C)
        and _nonsquare_over_C(half_plus) and _nonsquare_over_C(half_minus),
        f"norm = ((B-C)(1-C))^2, halves = B-C and C(B-C)"))

    pts = two_torsion(curve, (g1, g2, g3), certified_quartics=(g3,))
    expected = {(g1, True), (g2, True), (g1 * g2, True), (polyy([1]), True)}
    got = {(pt.u, pt.v.is_zero()) for pt in pts}
    checks.append(Check(
        "T33.2tors",
        "2-torsion points are exactly id, <g1,0>, <g2,0>, <g1 g2,0>",
        got == expected, f"{len(pts)} points"))

    T = MumfordDivisor(curve, polyy([-d, 1]), Poly([8 * d ** 3]))
    T2 = scalar_mul(2, T)
    T2_expected = MumfordDivisor(
        curve, polyy([-d, 1]) ** 2,
        Poly([-8 * d ** 3, 16 * d * d]))
    checks.append(Check(
        "T33.dblT", "[2]<s-d, 8d^3> = <(s-d)^2, 16d^2 s - 8d^3>",
        T2.u == T2_expected.u and T2.v == T2_expected.v,
        format_divisor(T2)))
    T4 = cantor_add(T2, T2)
    checks.append(Check(
        "T33.8tors.quad", "[4]<s-d, 8d^3> = <g1 g2, 0>",
        T4.u == g1 * g2 and T4.v.is_zero(), format_divisor(T4)))
    T8 = cantor_add(T4, T4)
    checks.append(Check(
        "T33.8tors", "[8]<s-d, 8d^3> is the identity",
        T8.is_identity(), format_divisor(T8)))

    span = {
        "<g1,0>": MumfordDivisor(curve, g1, Poly()),
        "<g2,0>": MumfordDivisor(curve, g2, Poly()),
        "<g1 g2,0>": MumfordDivisor(curve, g1 * g2, Poly()),
    }
    for cid, name, div, expect in (
        ("T33.inv.g1", "<g1,0>", span["<g1,0>"], True),
        ("T33.inv.g2", "<g2,0>", span["<g2,0>"], True),
        ("T33.inv.dblT", "[2]<s-d, 8d^3>", T2, False),
    ):
        fast = is_sigma_invariant(div, m)
        oracle = sigma_invariant_oracle(div, m)
        checks.append(Check(
            cid, f"conjugation-invariance of {name} is {expect} "
            "(criterion and Cantor oracle agree)",
            fast == expect and oracle == expect,
            f"criterion={fast} oracle={oracle}"))

    verdicts = {name: varpi_antineutral(div, m) for name, div in span.items()}
    checks.append(Check(
        "T33.varpi",
        "no invariant 2-primary torsion point is antineutral",
        all(v != "invariant-antineutral" for v in verdicts.values()),
        "; ".join(f"{k}: {v}" for k, v in sorted(verdicts.items()))))
    return checks


# -- descent certificate ----------------------------------------------


def _sign_checks(inst: FamilyInstance):
    eta, omega, rho = inst.params.eta, inst.params.omega, inst.params.rho
    b1 = inst.b1
    w2e2 = omega * omega - eta * eta
    A = w2e2 * w2e2 - 4 * omega * omega
    E0 = 1 - b1 - w2e2 / 2
    rem = euclid_divmod(4 * (inst.B - inst.C),
                        inst.C - Poly.const(1))[1]
    rem_val = rem.constant_term() if not rem.is_zero() else Q(0)
    return [
        Check("D40.sgn1", "omega^2 > eta^2", w2e2 > 0, str(w2e2)),
        Check("D40.sgn2", "omega^2 - eta^2 > 2|omega|",
              w2e2 > 2 * abs(omega), str(w2e2 - 2 * abs(omega))),
        Check("D40.sgn3", "(omega^2-eta^2)^2 - 4 omega^2 > 0", A > 0, str(A)),
        Check("D40.sgn4", "rho != 0", bool(rho), str(rho)),
        Check("D40.sgn5", "eta != 0", bool(eta), str(eta)),
        Check("D40.sgn6", "(omega^2-eta^2)^2 - 4 eta^2 != 0",
              bool(w2e2 * w2e2 - 4 * eta * eta),
              str(w2e2 * w2e2 - 4 * eta * eta)),
        Check("D40.sgn7", "B(0) - C(0) = (b1-1)^2 - omega^2 != 0",
              bool((b1 - 1) ** 2 - omega * omega),
              str((b1 - 1) ** 2 - omega * omega)),
        Check("D41.sgn1", "(omega-1)^2 - eta^2 > 0",
              (omega - 1) ** 2 - eta * eta > 0,
              str((omega - 1) ** 2 - eta * eta)),
        Check("D41.sgn2", "(omega+1)^2 - eta^2 > 0",
              (omega + 1) ** 2 - eta * eta > 0,
              str((omega + 1) ** 2 - eta * eta)),
        Check("D41.sgn3", "(eta+1)^2 - omega^2 < 0",
              (eta + 1) ** 2 - omega * omega < 0,
              str((eta + 1) ** 2 - omega * omega)),
        Check("D41.sgn4", "1 - omega - b1 < 0", 1 - omega - b1 < 0,
              str(1 - omega - b1)),
        Check("D41.sgn5", "1 + omega - b1 < 0", 1 + omega - b1 < 0,
              str(1 + omega - b1)),
        Check("D41.sgn6", "(1 - C(0))/2 < 0", E0 < 0, str(E0)),
        Check("D41.sgn7", "(b1-1)^2 - omega^2 > 0",
              (b1 - 1) ** 2 - omega * omega > 0,
              str((b1 - 1) ** 2 - omega * omega)),
        Check("D41.sgn8",
              "the remainder of 4(B-C) by C-1 is (omega^2-eta^2)^2 - 4 omega^2",
              rem.degree <= 0 and rem_val == A, str(rem_val)),
    ]


# the non-square hypotheses each final image computation relies on
_PROP_HYPS = (
    ("D52.zeta", "genus-1 image over the constant twists is trivial",
     ("A24.a",)),
    ("D52.zetax", "genus-1 image over the x twists is trivial",
     ("A24.b", "A24.c", "A24.dsup", "A24.esup", "A24.i.100")),
    ("D53.zeta", "dual genus-1 image over the constant twists is generated "
     "by the 2-torsion classes", ()),
    ("D53.zetax", "dual genus-1 image over the x twists is generated by the "
     "2-torsion classes",
     ("A24.a", "A24.d", "A24.e", "A24.f", "A24.i.100")),
    ("D54.zeta", "genus-2 image over the constant twists is generated by "
     "2-torsion images",
     ("A23.2a", "A23.2b", "A23.4a", "A23.4b",
      "A24.g.n0", "A24.g.n1", "A24.h.n0", "A24.h.n1",
      "A24.i.001", "A24.i.010", "A24.i.011")),
    ("D54.zetax", "genus-2 image over the x twists is generated by "
     "2-torsion images",
     ("A23.2a", "A23.2b", "A23.4a", "A23.4b",
      "A24.i.001", "A24.i.010", "A24.i.011", "A24.i.100",
      "A24.i.101", "A24.i.110", "A24.i.111", "A24.j",
      "A24.k.00", "A24.k.01", "A24.k.10", "A24.k.11",
      "A24.l.00", "A24.l.01", "A24.l.10", "A24.l.11")),
    ("D55.hyp", "dual genus-2 image is generated by 2-torsion images "
     "(both twist families)",
     ("A23.2a", "A23.2b", "A23.3", "A23.4a", "A23.4b", "A23.5",
      "A23.6a", "A23.6b", "A24.a", "A24.i.001", "A24.i.010", "A24.i.011",
      "A24.m", "A24.n")),
)


def descent_certificate(inst: FamilyInstance):
    checks = _sign_checks(inst)
    nonsq = _nonsquare_map(inst)
    nonvan = {cid: value for cid, _, value in
              _nonvanishing_items(inst.params)}
    for cid, stmt, hyps in _PROP_HYPS:
        bad = []
        for h in hyps:
            if h.startswith("A24"):
                if rational_is_square(nonsq[h]):
                    bad.append(h)
            else:
                if not nonvan[h]:
                    bad.append(h)
        checks.append(Check(
            cid, f"{stmt}: required hypotheses {{{', '.join(hyps) or '-'}}} hold",
            not bad, "all hold" if not bad else "failed: " + ", ".join(bad)))

    B, C = RatFunc(inst.B), RatFunc(inst.C)
    x = RatFunc(Poly.x())
    for tag, delta in (("1", RatFunc(1)), ("x", x)):
        try:
            fam = split_family(B, C, delta)
            ok, wit = True, (
                f"genera {fam.cplus.curve.genus}/{fam.cminus.curve.genus}/"
                f"{fam.cplus_hat.curve.genus}/{fam.cminus_hat.curve.genus}")
        except ValueError as exc:
            fam, ok, wit = None, False, str(exc)
        checks.append(Check(
            f"D44.split.{tag}",
            f"the four auxiliary curves for delta = {tag} are squarefree",
            ok, wit))
        if fam is None:
            continue
        checks.append(_richelot_match_check(tag, B, C, delta))
        checks.extend(_xi_2torsion_checks(tag, B, C, delta, fam))
    return checks


def _richelot_match_check(tag, B, C, delta):
    """The (2,2)-dual of the genus-2 curve built from the quadratic
    splitting (G1, G2, G3) coincides with the second genus-2 curve after
    y -> (-w - delta(1+C))/2 and a square scaling of 16."""
    one_p_c = 1 + C
    one_m_c = 1 - C
    G1 = polyy([delta * one_p_c / 2, 1])
    G2 = polyy([-((delta * one_m_c / 2) ** 2), 0, 1])
    G3 = polyy([-(delta * delta * (one_p_c * one_p_c - 4 * B) / 4), 0, 1])
    dlt, L1, L2, L3 = richelot_dual(G1, G2, G3)
    quintic = (L1 * L2 * L3) * (1 / dlt)
    w = polyy([0, 1])
    sub = (-w - polyy([delta * one_p_c])) * (1 / RatFunc(2))
    transported = 16 * _compose_polyy(quintic, sub)
    target = polyy([delta * one_p_c, 1]) \
        * (w * w - polyy([4 * delta * delta * B])) \
        * (w * w - polyy([4 * delta * delta * C]))
    match = transported == target
    return Check(
        f"D44.richelot.{tag}",
        f"for delta = {tag} the bracket dual matches the second genus-2 "
        "curve after an affine substitution; the recorded square scaling "
        "is 16 (trivial class)",
        match and square_class(RatFunc(16)).is_trivial(),
        f"Delta = {format_ratfunc(dlt)}")


def _compose_polyy(p, q):
    out = polyy([0])
    for c in reversed(p.coeffs):
        out = out * q + polyy([c])
    return out


def _xi_2torsion_checks(tag, B, C, delta, fam):
    checks = []
    E = (1 - C) / 2
    D = ((1 + C) ** 2 - 4 * B) / 4
    y = polyy([0, 1])
    f1 = polyy([delta * (1 - E), 1])
    f2 = polyy([-delta * E, 1])
    f3 = polyy([delta * E, 1])
    f4 = y * y - polyy([delta * delta * D])
    ctx = schaefer_context(fam.cplus.curve, (f1, f2, f3, f4))
    curve = fam.cplus.curve
    tuples = {
        "<y - dE, 0>": (
            MumfordDivisor(curve, f2, Poly()),
            (delta, 2 * E * (E * E - D), 2 * delta * E, E * E - D)),
        "<y^2 - d^2 E^2, 0>": (
            MumfordDivisor(curve, f2 * f3, Poly()),
            (1 - 2 * E, -delta * (E * E - D),
             -delta * (1 - 2 * E) * (E * E - D), RatFunc(1))),
        "<y^2 - d^2 D, 0>": (
            MumfordDivisor(curve, f4, Poly()),
            ((1 - E) ** 2 - D, E * E - D, E * E - D, (1 - E) ** 2 - D)),
    }
    ok, details = True, []
    for name, (div, expected) in sorted(tuples.items()):
        t = xi(div, ctx)
        exp = tuple(square_class(v) for v in expected)
        good = tuple(t.components) == exp and xi_is_2torsion_image(t, ctx)
        ok = ok and good
        details.append(f"{name}: {'match' if good else 'MISMATCH ' + str(t)}")
    checks.append(Check(
        f"D54.xi2tors.{tag}",
        f"for delta = {tag} the descent images of the genus-2 2-torsion "
        "points match their documented class tuples",
        ok, "; ".join(details)))

    h1 = polyy([delta * (1 + C), 1])
    h2 = y * y - polyy([4 * delta * delta * B])
    h3 = y * y - polyy([4 * delta * delta * C])
    hctx = schaefer_context(fam.cplus_hat.curve, (h1, h2, h3))
    t = xi(MumfordDivisor(fam.cplus_hat.curve, h1, Poly()), hctx)
    disc = (1 + C) ** 2 - 4 * B
    exp = (square_class(disc), square_class(disc), square_class(RatFunc(1)))
    checks.append(Check(
        f"D55.xi2tors.{tag}",
        f"for delta = {tag} the dual genus-2 2-torsion image of the linear "
        "factor is ([(1+C)^2-4B], [(1+C)^2-4B], [1])",
        tuple(t.components) == exp and xi_is_2torsion_image(t, hctx),
        str(t)))
    return checks


# -- the product identity ---------------------------------------------


class MultiPoly:
    """Sparse polynomial in the four indeterminates (alpha, beta, gamma, y)
    with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for exps, coeff in (terms or {}).items():
            if coeff:
                clean[tuple(exps)] = coeff
        self.terms = clean

    @classmethod
    def const(cls, value) -> "MultiPoly":
        return cls({(0, 0, 0, 0): _as_rational(value)})

    @classmethod
    def var(cls, index: int) -> "MultiPoly":
        exps = [0, 0, 0, 0]
        exps[index] = 1
        return cls({tuple(exps): Q(1)})

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Q(0)) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Q(0)) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms


def verify_sos3_identity(alpha=None, beta=None, gamma=None) -> bool:
    """The product (y^2+1)(y^2+a)(y^2+b)(y^2+c) with

        a = 1 + alpha^2 (1+beta^2)(1+gamma^2),
        b = 1 + alpha^2 (1+beta^2)^2 (1+gamma^2),
        c = 1 + alpha^2 (1+beta^2)(1+gamma^2)^2,

    equals the sum of the squares of

        S1 = alpha(1+beta^2)(1+gamma^2) y (y^2+a)
             + alpha beta gamma ((1-beta gamma) y + beta+gamma)(y^2+1),
        S2 = alpha(1+beta^2)(1+gamma^2) (y^2+a)
             + alpha beta gamma (1-beta gamma - (beta+gamma) y)(y^2+1),
        S3 = (y^2+1)(y^2 + a - beta gamma (a-1)).

    With no arguments the identity is verified by exact multivariate
    expansion over the indeterminates; with rational arguments (alpha must
    be nonzero) both sides are expanded as polynomials in y and compared.
    """
    if alpha is None and beta is None and gamma is None:
        A, Bv, G, Y = (MultiPoly.var(i) for i in range(4))
        return _identity_holds(A, Bv, G, Y, MultiPoly.const(1))
    if alpha is None or beta is None or gamma is None:
        raise ValueError("give all three parameters or none")
    alpha, beta, gamma = (_as_rational(v) for v in (alpha, beta, gamma))
    if not alpha:
        raise ValueError("alpha must be nonzero in the specialized mode")
    return _identity_holds(Poly.const(alpha), Poly.const(beta),
                           Poly.const(gamma), Poly.x(), Poly.const(1))


def _identity_holds(A, Bv, G, Y, one) -> bool:
    tb = one + Bv * Bv
    tg = one + G * G
    a = one + A * A * tb * tg
    b = one + A * A * tb * tb * tg
    c = one + A * A * tb * tg * tg
    y2 = Y * Y
    lhs = (y2 + one) * (y2 + a) * (y2 + b) * (y2 + c)
    bg = Bv * G
    s1 = A * tb * tg * Y * (y2 + a) \
        + A * bg * ((one - bg) * Y + Bv + G) * (y2 + one)
    s2 = A * tb * tg * (y2 + a) \
        + A * bg * (one - bg - (Bv + G) * Y) * (y2 + one)
    s3 = (y2 + one) * (y2 + a - bg * (a - one))
    return (lhs - (s1 * s1 + s2 * s2 + s3 * s3)).is_zero()


# -- end-to-end --------------------------------------------------------

_NOTES = (
    "non-square hypotheses with natural-number exponents are expanded over "
    "exponent parities {0,1}; higher exponents only change the expression "
    "by a square factor",
    "the positive constant twist parameter is discharged symbolically: the "
    "image computations depend on it only through sign conditions, which "
    "are checked exactly (D40.*/D41.*); no sampling is performed",
    "a PROVED verdict certifies the hypothesis suite, the torsion "
    "identities, the invariance analysis and the descent preconditions by "
    "independent exact recomputation; the implications torsion + rank zero "
    "=> no antineutral point => not a sum of three squares are cited "
    "results",
)


def prove_not_sos3(p: FamilyParams) -> Certificate:
    try:
        inst = build_family(p)
    except ValueError as exc:
        checks = (Check("A11.nondeg", "|omega| != |eta|", False, str(exc)),)
        return Certificate(p, "INCONCLUSIVE", checks, _NOTES)
    checks = [Check("A11.nondeg", "|omega| != |eta|", True,
                    f"omega^2 - eta^2 = "
                    f"{p.omega * p.omega - p.eta * p.eta}")]
    checks += check_positivity(inst)
    checks += check_nonvanishing(inst)
    checks += check_nonsquares(inst)
    gate_ok = all(c.passed for c in checks)
    if gate_ok:
        checks += torsion_certificate(inst)
        checks += descent_certificate(inst)
    else:
        checks.append(Check(
            "Z99.gated",
            "torsion and descent certificates were skipped because a "
            "hypothesis check failed", False, "gated"))
    checks = tuple(sorted(checks, key=lambda c: c.id))
    verdict = "PROVED" if all(c.passed for c in checks) else "INCONCLUSIVE"
    return Certificate(p, verdict, checks, _NOTES)
