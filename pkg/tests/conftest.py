import math

import pytest

from periodic_ctqw import WalkParams

SQRT2 = math.sqrt(2.0)


@pytest.fixture
def generic_params():
    """Fig. 2(a)-style couplings: |gamma0| < |gamma1|, positive product."""
    return WalkParams(1.0 / (2.0 * SQRT2), 1.0 / SQRT2)


@pytest.fixture
def generic_negative():
    """Generic couplings with negative product."""
    return WalkParams(1.0, -0.5)


@pytest.fixture
def equal_params():
    """Equal couplings, gamma1 = +gamma0."""
    return WalkParams(1.0 / (2.0 * SQRT2), 1.0 / (2.0 * SQRT2))


@pytest.fixture
def opposite_params():
    """Equal magnitudes, gamma1 = -gamma0."""
    return WalkParams(1.0 / (2.0 * SQRT2), -1.0 / (2.0 * SQRT2))
