import random

import pytest

from sos3.exact import Poly, Q
from sos3.family import (
    Certificate,
    FamilyParams,
    MultiPoly,
    build_family,
    check_nonsquares,
    check_nonvanishing,
    check_positivity,
    descent_certificate,
    prove_not_sos3,
    tilde_split,
    torsion_certificate,
    verify_sos3_identity,
)


@pytest.fixture(scope="module")
def instance():
    return build_family(FamilyParams(23, 34, 547))


def test_build_values_exact(instance):
    eta, omega, rho = Q(23), Q(34), Q(547)
    b1 = (rho * rho - eta * eta) / (omega * omega - eta * eta) \
        + (eta * eta - omega * omega) / 4
    assert instance.b1 == b1
    assert instance.B == (Poly.x() + Poly.const(b1)) ** 2 \
        - Poly.const(eta * eta)
    # b1 re-derived from the linear coefficient relation C(0) known form
    assert instance.C(Q(0)) == 2 * b1 + omega * omega - eta * eta - 1
    assert len(instance.P_factors) == 3


def test_build_rejects_degenerate_params():
    with pytest.raises(ValueError):
        build_family(FamilyParams(1, 1, 1))
    with pytest.raises(ValueError):
        build_family(FamilyParams(2, -2, 5))


def test_params_accept_rational_strings():
    p = FamilyParams("1/2", "3", Q(7, 2))
    assert p.eta == Q(1, 2) and p.omega == Q(3) and p.rho == Q(7, 2)


def _by_id(checks):
    return {c.id: c for c in checks}


def test_hypothesis_suites_pass_on_instance(instance):
    for suite in (check_positivity, check_nonvanishing, check_nonsquares):
        for c in suite(instance):
            assert c.passed, (c.id, c.witness)


def test_nonsquare_spot_witnesses(instance):
    by = _by_id(check_nonsquares(instance))
    assert "388505" in by["A24.a"].witness
    assert "27835/22" in by["A24.n"].witness
    assert len(by) == 30


def test_hypothesis_failures_are_detected():
    # eta = 0 violates a positivity requirement
    by = _by_id(check_positivity(build_family(FamilyParams(0, 2, 1))))
    assert not all(c.passed for c in by.values())
    assert not by["A22.2"].passed


def test_identity_symbolic():
    assert verify_sos3_identity()


def test_identity_specializations():
    rng = random.Random(7)
    for _ in range(20):
        alpha = Q(rng.randint(1, 30), rng.randint(1, 9))
        if rng.random() < 0.5:
            alpha = -alpha
        beta = Q(rng.randint(-30, 30), rng.randint(1, 9))
        gamma = Q(rng.randint(-30, 30), rng.randint(1, 9))
        assert verify_sos3_identity(alpha, beta, gamma)
    with pytest.raises(ValueError):
        verify_sos3_identity(0, 1, 1)
    with pytest.raises(ValueError):
        verify_sos3_identity(1, 1)


def test_multipoly_arithmetic():
    a, b = MultiPoly.var(0), MultiPoly.var(1)
    one = MultiPoly.const(1)
    assert ((a + b) * (a - b) - (a * a - b * b)).is_zero()
    assert (a * b) == (b * a)
    assert not (a - b).is_zero()
    assert ((a + one) * (a + one) - a * a - 2 * a - one).is_zero()


def test_tilde_split_product(instance):
    g1, g2, g3 = tilde_split(instance)
    assert g1 * g2 * g3 == instance.tilde.tilde_curve.f


def test_torsion_certificate_all_pass(instance):
    checks = torsion_certificate(instance)
    assert checks and all(c.passed for c in checks), \
        [(c.id, c.witness) for c in checks if not c.passed]
    ids = {c.id for c in checks}
    assert {"T33.split", "T33.8tors", "T33.2tors", "T33.varpi"} <= ids


def test_descent_certificate_all_pass(instance):
    checks = descent_certificate(instance)
    assert checks and all(c.passed for c in checks), \
        [(c.id, c.witness) for c in checks if not c.passed]
    ids = {c.id for c in checks}
    assert {"D44.split.1", "D44.split.x", "D44.richelot.1",
            "D44.richelot.x", "D55.hyp"} <= ids
    assert any(i.startswith("D54.xi2tors.") for i in ids)
    assert any(i.startswith("D55.xi2tors.") for i in ids)


def test_prove_proved_and_deterministic():
    c1 = prove_not_sos3(FamilyParams(23, 34, 547))
    c2 = prove_not_sos3(FamilyParams(23, 34, 547))
    assert c1.verdict == "PROVED"
    assert all(ch.passed for ch in c1.checks)
    assert len(c1.checks) == 93
    assert c1.to_json() == c2.to_json()
    assert [ch.id for ch in c1.checks] == sorted(ch.id for ch in c1.checks)


def test_prove_inconclusive_first_failing_check():
    cert = prove_not_sos3(FamilyParams(0, 2, 1))
    assert cert.verdict == "INCONCLUSIVE"
    first = next(ch for ch in cert.checks if not ch.passed)
    assert first.id == "A22.2"
    assert any(ch.id == "Z99.gated" for ch in cert.checks)

    cert = prove_not_sos3(FamilyParams(1, 1, 1))
    assert cert.verdict == "INCONCLUSIVE"
    assert cert.checks[0].id == "A11.nondeg"
    assert not cert.checks[0].passed


def test_certificate_text_rendering(instance):
    cert = prove_not_sos3(FamilyParams(23, 34, 547))
    text = cert.to_text()
    assert "verdict: PROVED" in text
    assert "[PASS] A11.nondeg" in text
    assert isinstance(cert, Certificate)
