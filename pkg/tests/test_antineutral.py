import pytest

from sos3.exact import Poly
from sos3.funcfield import RatFunc
from sos3.jacobian import (
    MumfordDivisor,
    cantor_add,
    identity_divisor,
    polyy,
    reduce_divisor,
    scalar_mul,
)
from sos3.antineutral import (
    build_tilde,
    is_sigma_invariant,
    omega_class,
    omega_image,
    sigma_invariant_oracle,
    varpi_antineutral,
)
from sos3.family import FamilyParams, build_family, tilde_split


@pytest.fixture(scope="module")
def instance():
    return build_family(FamilyParams(23, 34, 547))


def test_build_tilde_validation():
    with pytest.raises(ValueError):
        build_tilde(2 * polyy([0, 0, 0, 1]))  # not monic
    with pytest.raises(ValueError):
        build_tilde(polyy([1, 0, 1]))  # even degree
    with pytest.raises(ValueError):
        build_tilde(polyy([0, 1, -2, 1]))  # y(y-1)^2: Q(y^2) not squarefree


def test_model_splits(instance):
    g1, g2, g3 = tilde_split(instance)
    m = instance.tilde
    assert g1 * g2 * g3 == m.tilde_curve.f
    assert m.d == (1 - RatFunc(instance.C(Poly([0, 0, 1])))) * \
        (RatFunc(instance.B(Poly([0, 0, 1]))) - RatFunc(instance.C(Poly([0, 0, 1]))))


def _torsion_points(instance):
    m = instance.tilde
    curve = m.tilde_curve
    g1, g2, g3 = tilde_split(instance)
    d = m.d
    T = MumfordDivisor(curve, polyy([-d, 1]), Poly([8 * d ** 3]))
    pts = {"id": identity_divisor(curve),
           "g1": MumfordDivisor(curve, g1, Poly()),
           "g2": MumfordDivisor(curve, g2, Poly()),
           "g1g2": MumfordDivisor(curve, g1 * g2, Poly()),
           "T": T, "2T": scalar_mul(2, T)}
    return pts


def test_involution_is_class_level_involution(instance):
    m = instance.tilde
    for name, D in _torsion_points(instance).items():
        back = omega_class(omega_class(D, m), m)
        red = reduce_divisor(D)
        assert back.u == red.u and back.v == red.v, name


def test_invariance_criterion_matches_oracle(instance):
    m = instance.tilde
    expected = {"id": True, "g1": True, "g2": True, "g1g2": True,
                "T": False, "2T": False}
    for name, D in _torsion_points(instance).items():
        fast = is_sigma_invariant(D, m)
        oracle = sigma_invariant_oracle(D, m)
        assert fast == oracle, name
        assert fast == expected[name], name


def test_omega_image_rejects_zero_root(instance):
    m = instance.tilde
    g1 = polyy([0, 1])
    with pytest.raises(ValueError):
        omega_image(MumfordDivisor(m.tilde_curve, g1, Poly()), m)


def test_varpi_verdicts(instance):
    m = instance.tilde
    pts = _torsion_points(instance)
    assert varpi_antineutral(pts["g1"], m) == "invariant-trivial"
    assert varpi_antineutral(pts["g2"], m) == "invariant-trivial"
    assert varpi_antineutral(pts["g1g2"], m) == "invariant-trivial"
    assert varpi_antineutral(pts["2T"], m) == "not-invariant"
    assert varpi_antineutral(pts["id"], m) == "invariant-trivial"


def test_varpi_detects_antineutral_on_synthetic_point():
    # t^2 = s(s^2+1)(s^2+2)(s^2+3): <s^2+1, 0> is invariant under s -> d^2/s
    # only for matching d; build a model where a full-weight invariant point
    # exists and has a positive-semidefinite u(0).
    s = polyy([0, 1])
    f = s * (s * s + polyy([1])) * (s * s + polyy([4]))
    from sos3.jacobian import new_curve
    from sos3.antineutral import TildeModel
    m = TildeModel(Q=None, d=RatFunc(2), tilde_curve=new_curve(f))
    # u = s^2 + 4 satisfies s^2 u(4/s) / u(0) = u and v = 0: invariant of
    # weight 2 = genus, with u(0) = 4 a positive constant
    D = MumfordDivisor(m.tilde_curve, s * s + polyy([4]), Poly())
    assert is_sigma_invariant(D, m)
    assert varpi_antineutral(D, m) == "invariant-antineutral"
    # u = s^2 + 1 is not fixed by the involution with d = 2
    D2 = MumfordDivisor(m.tilde_curve, s * s + polyy([1]), Poly())
    assert not is_sigma_invariant(D2, m)


def test_split_point_handling(instance):
    # divisors through the distinguished Weierstrass point: <g1 g2, 0> has
    # u(0) = 0 and must still be recognized as invariant with trivial
    # obstruction
    m = instance.tilde
    pts = _torsion_points(instance)
    D = pts["g1g2"]
    assert D.u.constant_term().is_zero()
    assert is_sigma_invariant(D, m)
    assert sigma_invariant_oracle(D, m)
    # adding the split point twice returns to the original class
    twice = cantor_add(pts["g1"], pts["g1"])
    assert twice.is_identity()
