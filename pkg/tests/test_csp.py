import pytest

from brauercat.csp import (CspInstance, evaluate_at_root_of_unity,
                           fixed_points, is_cyclic_sieving_polynomial,
                           orbit_multiplicities, orbit_polynomial, verify_csp)
from brauercat.matchings import enumerate_X, enumerate_X_blocked
from brauercat.qpoly import QPolynomial
from brauercat.symfunc import (fake_degree, invariant_character_matchings,
                               invariant_character_sym_power)


def matchings_instance(r, n):
    poly = fake_degree(invariant_character_matchings(r, n))
    return CspInstance(tuple(enumerate_X(r, n)), 1, 2 * r, poly)


def blocked_instance(r, n, k):
    poly = fake_degree(invariant_character_sym_power(r, k, n))
    return CspInstance(tuple(enumerate_X_blocked(r, n, k)), k, r, poly)


def test_fixed_points():
    xs = tuple(enumerate_X(2, 1))
    assert fixed_points(xs, 1, 0) == 2
    assert fixed_points(xs, 1, 1) == 0
    assert fixed_points(xs, 1, 2) == 2
    crossing = tuple(enumerate_X(2, 2))
    assert fixed_points(crossing, 1, 1) == 1


def test_orbit_polynomial():
    assert orbit_polynomial([2], 4) == QPolynomial((1, 0, 1))
    assert orbit_polynomial([2, 1], 4) == QPolynomial((2, 0, 1))
    assert orbit_polynomial([4], 4) == QPolynomial((1, 1, 1, 1))
    with pytest.raises(ValueError, match="divide"):
        orbit_polynomial([3], 4)


def test_worked_instance_r2_n1():
    cert = verify_csp(matchings_instance(2, 1))
    assert cert.passed
    assert cert.poly == QPolynomial((0, 0, 1, 0, 1))
    assert cert.poly_reduced == QPolynomial((1, 0, 1))
    assert cert.orbit_poly == QPolynomial((1, 0, 1))
    assert cert.orbit_sizes == (2,)
    assert cert.fixed_counts == (2, 0, 2, 0)


def test_worked_instance_r2_n2():
    cert = verify_csp(matchings_instance(2, 2))
    assert cert.passed
    assert cert.poly == QPolynomial((1, 0, 1, 0, 1))
    assert cert.poly_reduced == QPolynomial((2, 0, 1))
    assert cert.orbit_sizes == (2, 1)


def test_negative_control_fails_at_two():
    xs = tuple(enumerate_X(2, 1))
    cert = verify_csp(CspInstance(xs, 1, 4, QPolynomial((0, 1, 0, 1))))
    assert not cert.passed
    assert cert.failure_divisor == 2


def test_malformed_polynomial_rejected():
    xs = tuple(enumerate_X(2, 1))
    with pytest.raises(ValueError, match="malformed"):
        verify_csp(CspInstance(xs, 1, 4, QPolynomial((1, -1))))


def test_root_of_unity_evaluation_matches_fixed_counts():
    for r in range(1, 5):
        for n in range(1, r + 1):
            inst = matchings_instance(r, n)
            cert = verify_csp(inst)
            assert cert.passed
            for d in range(inst.order):
                value = evaluate_at_root_of_unity(inst.poly, inst.order, d)
                assert value == cert.fixed_counts[d], (r, n, d)


def test_root_of_unity_basics():
    p = QPolynomial((0, 1))  # q
    assert evaluate_at_root_of_unity(p, 2, 1) == -1
    assert evaluate_at_root_of_unity(p, 4, 1) is None  # the value is i
    assert evaluate_at_root_of_unity(p, 4, 0) == 1


def test_blocked_figure_instance():
    cert = verify_csp(blocked_instance(4, 2, 2))
    assert cert.passed
    assert cert.size == 6
    assert sum(cert.orbit_sizes) == 6


def test_not_a_sieving_polynomial():
    q = QPolynomial((0, 1))
    assert not is_cyclic_sieving_polynomial(q, 2)
    assert orbit_multiplicities(q, 2) == {2: 1, 1: -1}
    assert is_cyclic_sieving_polynomial(orbit_polynomial([2, 1], 4), 4)
    assert is_cyclic_sieving_polynomial(QPolynomial((3,)), 5)
    assert not is_cyclic_sieving_polynomial(QPolynomial((1, -1)), 2)


def test_fundamental_fail_certificate():
    from brauercat.symfunc import invariant_character_fundamental
    poly = fake_degree(invariant_character_fundamental(2, 3, 1))
    xs = tuple(enumerate_X_blocked(2, 1, 3))
    assert len(xs) == 1
    cert = verify_csp(CspInstance(xs, 3, 2, poly))
    assert not cert.passed
    assert cert.failure_divisor == 1


def test_instance_validation():
    with pytest.raises(ValueError, match="order"):
        CspInstance((), 1, 0, QPolynomial((1,)))
