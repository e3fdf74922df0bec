import random

import pytest
from hypothesis import HealthCheck, settings

from skewbch.code import build_code
from skewbch.funcfield import RationalSigmaField
from skewbch.galois import GaloisField
from skewbch.replay import paper_code
from skewbch.skew import SkewPolyRing

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

F8_MODULUS = (1, 1, 0, 1)


@pytest.fixture(scope="session")
def f8():
    return GaloisField(2, 3, F8_MODULUS)


@pytest.fixture(scope="session")
def mobius7(f8):
    """F_8(t) with t -> (t+a)/t, order 7."""
    return RationalSigmaField.from_image(f8, "(t+a)/t")


@pytest.fixture(scope="session")
def inverse2(f8):
    """F_8(t) with t -> 1/t, order 2."""
    return RationalSigmaField.from_image(f8, "1/t")


@pytest.fixture(scope="session")
def ring7(mobius7):
    return SkewPolyRing(mobius7)


@pytest.fixture(scope="session")
def ring2(inverse2):
    return SkewPolyRing(inverse2)


@pytest.fixture(scope="session")
def spec7():
    return paper_code()


@pytest.fixture(scope="session")
def spec2(inverse2):
    return build_code(inverse2, inverse2.parse("t"), r=0, delta=2)


@pytest.fixture
def rng():
    return random.Random(20261015)


def random_skew(ring, rng, degree, coeff_bound=1):
    K = ring.field
    coeffs = [K.random_element(rng, coeff_bound) for _ in range(degree)]
    coeffs.append(K.random_element(rng, coeff_bound, nonzero=True))
    return ring(coeffs)
