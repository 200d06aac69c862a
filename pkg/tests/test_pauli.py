import itertools

import numpy as np
import pytest

from mubphase.linalg import DimensionError, max_abs
from mubphase.pauli import (
    build_class,
    build_generator,
    build_h,
    build_set_S,
    build_Sij,
    build_X,
    build_Z,
    cartan_coefficients,
    check_dim,
    generator_name,
    is_prime,
    weyl_check,
)

from conftest import PRIMES, SMALL_PRIMES

W3 = np.exp(2j * np.pi / 3)


def test_is_prime_matches_sieve():
    sieve = [n for n in range(2, 100) if all(n % p for p in range(2, n))]
    assert [n for n in range(100) if is_prime(n)] == sieve


@pytest.mark.parametrize("bad", [0, 1, 4, 9, 15, 37, 2.5])
def test_check_dim_rejects(bad):
    with pytest.raises(DimensionError):
        check_dim(bad)


def test_z_and_x_small():
    assert max_abs(build_Z(2) - np.diag([1, -1])) < 1e-15
    assert max_abs(build_Z(3) - np.diag([1, W3, W3**2])) < 1e-15
    assert max_abs(build_X(2) - np.array([[0, 1], [1, 0]])) == 0
    assert max_abs(build_X(3) - np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]])) == 0


@pytest.mark.parametrize("d", PRIMES)
def test_z_x_order_d(d):
    assert max_abs(np.linalg.matrix_power(build_Z(d), d) - np.eye(d)) < 1e-12
    assert max_abs(np.linalg.matrix_power(build_X(d), d) - np.eye(d)) == 0


def test_generator_examples():
    x3, z3 = build_X(3), build_Z(3)
    assert max_abs(build_generator(3, 1) - x3) == 0
    assert max_abs(build_generator(3, 3) - x3 @ z3 @ z3) < 1e-15
    assert max_abs(build_generator(2, 2) - np.array([[0, -1], [1, 0]])) < 1e-15
    assert max_abs(build_generator(5, 0) - build_Z(5)) == 0


@pytest.mark.parametrize("d", SMALL_PRIMES)
def test_generator_matches_product(d):
    x, z = build_X(d), build_Z(d)
    for k in range(1, d + 1):
        assert max_abs(build_generator(d, k) - x @ np.linalg.matrix_power(z, k - 1)) < 1e-13


@pytest.mark.parametrize("k", [-1, 4, 1.5])
def test_generator_label_out_of_range(k):
    with pytest.raises(ValueError):
        build_generator(3, k)


def test_class_examples():
    z = build_Z(3)
    c0 = build_class(3, 0)
    assert len(c0) == 2
    assert max_abs(c0.members[0] - z) == 0 and max_abs(c0.members[1] - z @ z) < 1e-15
    xz = build_X(3) @ z
    c2 = build_class(3, 2)
    assert max_abs(c2.members[1] - xz @ xz) < 1e-15
    assert len(build_class(2, 1)) == 1


@pytest.mark.parametrize("d", PRIMES)
def test_classes_commute_traceless_unitary(d):
    for k in range(d + 1):
        c = build_class(d, k)
        assert len(c) == d - 1
        assert c.max_commutator() < 1e-12
        for m in c.members:
            assert abs(np.trace(m)) < 1e-12
            assert max_abs(m.conj().T @ m - np.eye(d)) < 1e-12


@pytest.mark.parametrize("d", SMALL_PRIMES)
def test_classes_disjoint(d):
    members = [(k, m) for k in range(d + 1) for m in build_class(d, k).members]
    for (k1, a), (k2, b) in itertools.combinations(members, 2):
        if k1 != k2:
            assert max_abs(a - b) > 0.5


def test_set_S():
    s3 = build_set_S(3)
    x, z = build_X(3), build_Z(3)
    expected = [z, x, x @ z, x @ z @ z]
    assert len(s3) == 4
    for a, b in zip(s3, expected):
        assert max_abs(a - b) < 1e-15
    assert len(build_set_S(2)) == 3
    s5 = build_set_S(5)
    assert len(s5) == 6
    for m in s5:
        assert abs(np.trace(m)) < 1e-12 and max_abs(m.conj().T @ m - np.eye(5)) < 1e-12


def test_generator_names():
    assert [generator_name(k) for k in range(5)] == ["Z", "X", "XZ", "XZ^2", "XZ^3"]


def test_sij():
    assert max_abs(build_Sij(3, 0, 0) - np.diag([1, 0, 0])) == 0
    assert max_abs(build_Sij(3, 0, 1) @ build_Sij(3, 1, 0) - np.diag([1, 0, 0])) == 0
    d = 3
    for i, j, k, l in itertools.product(range(d), repeat=4):
        prod = build_Sij(d, i, j) @ build_Sij(d, k, l)
        expected = build_Sij(d, i, l) if j == k else np.zeros((d, d))
        assert max_abs(prod - expected) == 0
    with pytest.raises(IndexError):
        build_Sij(3, 3, 0)


def test_h():
    assert max_abs(build_h(3, 0) - np.diag([1, -1, 0])) == 0
    assert max_abs(build_h(3, 1) - np.diag([0, 1, -1])) == 0
    assert max_abs(build_h(2, 0) - build_Z(2)) < 1e-15
    with pytest.raises(IndexError):
        build_h(3, 2)


@pytest.mark.parametrize("d", PRIMES)
def test_powers_of_z_span_inversions(d):
    hs = np.array([np.diag(build_h(d, j)).real for j in range(d - 1)])
    z = build_Z(d)
    zk = np.eye(d, dtype=complex)
    for _ in range(1, d):
        zk = zk @ z
        coeffs = cartan_coefficients(np.diag(zk))
        assert max_abs(np.tensordot(coeffs, hs, axes=1) - np.diag(zk)) < 1e-12
        # least squares oracle agrees
        ls, *_ = np.linalg.lstsq(hs.T.astype(complex), np.diag(zk), rcond=None)
        assert max_abs(ls - coeffs) < 1e-10


def test_cartan_coefficients_rejects_trace():
    with pytest.raises(ValueError):
        cartan_coefficients([1, 1, 1])


@pytest.mark.parametrize("d", PRIMES)
def test_weyl(d):
    check = weyl_check(d)
    assert check.passed and check.residual < 1e-12


def test_weyl_qubit_exact():
    assert weyl_check(2).residual < 1e-15
