# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)
"""
import math

import numpy as np
import pytest

from prime_lab.basic_functions.logint import li_value
from prime_lab.basic_functions.models import (ModelKind, UrnSpec, binomial_pmf, hypergeometric_pmf, model1_stats,
                                              model2_stats, model_stats, riemann_bound, total_variation,
                                              tuple_stats, urn_from_primes, variance_gap, variance_gap_ratio)
from prime_lab.basic_functions.sieve import TRIPLETS_046, TWINS
from prime_lab.pipeline_functions.errors import DomainError, InadmissiblePatternError, ValidationError

table_xs = [10 ** 8, 10 ** 9, 10 ** 10, 10 ** 11, 10 ** 12]


@pytest.mark.parametrize('x, sigma1, sigma2', [(10 ** 8, 2330, 2329), (10 ** 10, 20841, 20839),
                                               (10 ** 11, 62836, 62834), (10 ** 12, 190246, 190239)])
def test_tabulated_standard_deviations(x, sigma1, sigma2):
    assert model1_stats(x).whole_sigma == sigma1
    assert model2_stats(x).whole_sigma == sigma2


def test_standard_deviations_at_1e9():
    # Printed as 7091 and 7089
    assert model1_stats(10 ** 9).sigma == pytest.approx(6947.2, abs=0.05)
    assert model1_stats(10 ** 9).whole_sigma == 6947
    assert model2_stats(10 ** 9).whole_sigma == 6946


def test_model1_mean_is_li():
    stats = model1_stats(10 ** 8)
    assert stats.model == ModelKind.binomial_model1
    assert stats.mean == pytest.approx(li_value(10 ** 8), rel=1e-14)
    assert stats.sigma ** 2 == pytest.approx(stats.mean - stats.mean ** 2 / 10 ** 8, rel=1e-12)


@pytest.mark.parametrize('x', [10, 100, 10 ** 4, 10 ** 6, 10 ** 9])
def test_variance_ordering(x):
    sigma = model1_stats(x).sigma
    sigma_1 = model2_stats(x).sigma
    assert sigma_1 < sigma
    assert sigma ** 2 < li_value(x)


@pytest.mark.parametrize('pattern, x, whole_sigma', [(TWINS, 10 ** 5, 35), (TWINS, 10 ** 6, 90),
                                                     (TWINS, 10 ** 7, 242), (TRIPLETS_046, 10 ** 5, 16),
                                                     (TRIPLETS_046, 10 ** 6, 38), (TRIPLETS_046, 10 ** 7, 93),
                                                     (TRIPLETS_046, 10 ** 8, 235)])
def test_tuple_standard_deviations(pattern, x, whole_sigma):
    stats = tuple_stats(pattern, x)
    assert stats.whole_sigma == whole_sigma
    assert stats.pattern == pattern
    assert stats.variance < stats.mean


@pytest.mark.parametrize('pattern, x, m_h', [(TWINS, 10 ** 5, 80.083), (TWINS, 10 ** 6, 121.242),
                                             (TWINS, 10 ** 7, 170.201), (TRIPLETS_046, 10 ** 6, 691.483)])
def test_tuple_mean(pattern, x, m_h):
    assert x / tuple_stats(pattern, x).mean == pytest.approx(m_h, abs=0.01)


def test_stats_errors():
    with pytest.raises(DomainError):
        model1_stats(2.5)
    with pytest.raises(DomainError):
        model2_stats(2)
    with pytest.raises(InadmissiblePatternError):
        tuple_stats((0, 2, 4), 10 ** 6)
    with pytest.raises(ValidationError):
        model_stats('tuple', 10 ** 6)
    with pytest.raises(ValidationError):
        model_stats('3', 10 ** 6)


def test_model_stats_dispatch():
    assert model_stats('1', 10 ** 6).model == ModelKind.binomial_model1
    assert model_stats('2', 10 ** 6).model == ModelKind.cramer_model2
    assert model_stats('tuple', 10 ** 6, '0,2').whole_sigma == 90


def test_variance_gap_matches_models():
    x = 10 ** 8
    direct = model1_stats(x).sigma ** 2 - model2_stats(x).sigma ** 2
    assert variance_gap(x) == pytest.approx(direct, rel=1e-6)
    # Consistent with the tabulated whole standard deviations 2330 and 2329
    assert 0 < variance_gap(x) < 2331 ** 2 - 2329 ** 2


def test_variance_gap_leading_order():
    ratio_1e6 = variance_gap_ratio(10 ** 6, power=4)
    ratio_1e9 = variance_gap_ratio(10 ** 9, power=4)
    assert 1.5 <= ratio_1e6 <= 3.5
    assert abs(ratio_1e9 - 1) < abs(ratio_1e6 - 1)
    ratios = [variance_gap_ratio(10 ** e, power=4) for e in range(5, 13)]
    assert all(later < earlier for earlier, later in zip(ratios, ratios[1:]))
    # Normalized by x / ln^3(x) the gap vanishes asymptotically
    assert variance_gap_ratio(10 ** 12, power=3) < variance_gap_ratio(10 ** 6, power=3) < 0.5


def test_urn_validation():
    urn = UrnSpec(10, 4, 3)
    assert urn.M2 == 6
    assert urn.p == 0.4
    assert urn.support == (0, 3)
    for bad in [(0, 0, 1), (10, 11, 2), (10, -1, 2), (10, 4, 0), (10.5, 4, 2)]:
        with pytest.raises(ValidationError):
            UrnSpec(*bad)


def test_hypergeometric_examples():
    urn = UrnSpec(4, 2, 2)
    assert hypergeometric_pmf(urn, 1) == pytest.approx(2 / 3, rel=1e-12)
    assert hypergeometric_pmf(urn, 2) == pytest.approx(1 / 6, rel=1e-12)
    assert hypergeometric_pmf(urn, 0) == pytest.approx(1 / 6, rel=1e-12)


def test_hypergeometric_impossible_configurations():
    urn = UrnSpec(10, 2, 5)
    assert hypergeometric_pmf(urn, 3) == 0
    assert hypergeometric_pmf(urn, -1) == 0
    assert hypergeometric_pmf(UrnSpec(10, 8, 5), 1) == 0
    with pytest.raises(ValidationError):
        hypergeometric_pmf(UrnSpec(3, 1, 5), 1)


@pytest.mark.parametrize('M, M1, n', [(4, 2, 2), (50, 15, 10), (120, 30, 20), (10 ** 4, 1229, 100),
                                     (10 ** 5, 9592, 1000)])
def test_hypergeometric_sums_to_one(M, M1, n):
    pmf = hypergeometric_pmf(UrnSpec(M, M1, n), np.arange(n + 1))
    assert abs(math.fsum(pmf) - 1) < 1e-12


@pytest.mark.parametrize('M, M1, n', [(50, 15, 10), (1000, 168, 100)])
def test_hypergeometric_matches_exact_binomials(M, M1, n):
    pmf = hypergeometric_pmf(UrnSpec(M, M1, n), np.arange(n + 1))
    for n1 in range(n + 1):
        exact = math.comb(M1, n1) * math.comb(M - M1, n - n1) / math.comb(M, n)
        assert pmf[n1] == pytest.approx(exact, rel=1e-8, abs=1e-18)


def test_hypergeometric_close_to_binomial_for_large_urn():
    urn = UrnSpec(10 ** 6, 78498, 100)
    assert hypergeometric_pmf(urn, 8) == pytest.approx(binomial_pmf(urn, 8), rel=1e-3)


def test_total_variation_decreases_with_urn_size():
    distances = [total_variation(UrnSpec(M, M // 10, 50)) for M in (10 ** 3, 10 ** 4, 10 ** 5)]
    assert distances[0] > distances[1] > distances[2] > 0
    assert total_variation(UrnSpec(10 ** 5, 9592, 1000)) < 0.02


def test_urn_from_primes():
    urn = urn_from_primes(10 ** 4, 100)
    assert (urn.M, urn.M1, urn.n) == (10 ** 4, 1229, 100)


@pytest.mark.parametrize('x, bound', [(10 ** 8, 7333), (10 ** 9, 26087), (10 ** 10, 91663), (10 ** 11, 318851),
                                      (10 ** 12, 1099961)])
def test_riemann_bound_as_tabulated(x, bound):
    assert math.floor(riemann_bound(x, pi_value=3.14)) == bound


def test_riemann_bound():
    assert riemann_bound(math.e ** 2) == pytest.approx(math.e * 2 / (8 * math.pi), rel=1e-14)
    for x in table_xs:
        assert riemann_bound(x) > model1_stats(x).sigma
    with pytest.raises(DomainError):
        riemann_bound(0)
