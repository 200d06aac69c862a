import numpy as np
import pytest

PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
SMALL_PRIMES = [2, 3, 5, 7]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_state(d, rng):
    c = rng.normal(size=d) + 1j * rng.normal(size=d)
    return c / np.linalg.norm(c)


def random_unitary(d, rng):
    # QR of a Ginibre matrix with the diagonal phase fix gives Haar measure
    z = (rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))
