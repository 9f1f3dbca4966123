import math

import numpy as np
import pytest

from homwalk.decoherence import DistinguishabilityInput, decohered_distribution, total_variation
from homwalk.fock_walk import distribution_variance, walk_distribution

from oracles import binomial_pmf


@pytest.mark.parametrize("S,l,r", [(4, 2, 0.5), (10, 3, 0.3), (50, 25, 0.5)])
def test_indistinguishable_limit(S, l, r):
    np.testing.assert_allclose(decohered_distribution(S, l, 0.0, r), walk_distribution(S, l, r), atol=1e-14)


@pytest.mark.parametrize("S,l,r", [(4, 2, 0.5), (10, 3, 0.3), (50, 25, 0.5)])
def test_distinguishable_limit_is_classical(S, l, r):
    # photons from a stay with 1-r, photons from b cross with r, independently
    ref = np.convolve(binomial_pmf(l, 1 - r), binomial_pmf(S - l, r))
    np.testing.assert_allclose(decohered_distribution(S, l, math.pi / 2, r), ref, atol=1e-14)


def test_balanced_classical_limit_is_binomial():
    np.testing.assert_allclose(
        decohered_distribution(50, 25, math.pi / 2, 0.5), binomial_pmf(50, 0.5), atol=1e-14
    )


@pytest.mark.parametrize("y", np.linspace(0, math.pi / 2, 7))
@pytest.mark.parametrize("S,l", [(1, 0), (8, 4), (31, 12)])
def test_normalised(y, S, l):
    p = decohered_distribution(S, l, y, 0.37)
    assert p.sum() == pytest.approx(1.0, abs=1e-12)
    assert np.all(p >= -1e-15)


def test_continuous_in_y():
    ys = np.linspace(0, math.pi / 2, 101)
    ps = [decohered_distribution(50, 25, y, 0.5) for y in ys]
    steps = [total_variation(a, b) for a, b in zip(ps, ps[1:])]
    assert max(steps) < 0.05


def test_variance_shrinks_towards_binomial():
    ys = np.linspace(0, math.pi / 2, 21)
    v = [distribution_variance(decohered_distribution(50, 25, y, 0.5)) for y in ys]
    assert np.all(np.diff(v) < 0)
    assert v[-1] == pytest.approx(12.5, abs=1e-10)
    tv = [total_variation(decohered_distribution(50, 25, y, 0.5), binomial_pmf(50, 0.5)) for y in ys]
    assert np.all(np.diff(tv) < 0)


def test_input_validation():
    with pytest.raises(ValueError):
        DistinguishabilityInput(4, 5, 0.1)
    with pytest.raises(ValueError):
        DistinguishabilityInput(4, 2, 2.0)
    with pytest.raises(ValueError):
        decohered_distribution(4, 2, 0.1, 1.5)
