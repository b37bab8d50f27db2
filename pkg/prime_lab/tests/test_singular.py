# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)
"""
import math

import pytest

from prime_lab.basic_functions.logint import li_value
from prime_lab.basic_functions.sieve import PRIMES, TRIPLETS_046, TWINS, is_admissible, small_primes, tuple_count
from prime_lab.basic_functions.singular import (residue_count, singular_series, singular_series_at_cutoff,
                                                truncated_product)
from prime_lab.pipeline_functions.errors import InadmissiblePatternError, PrecisionError, ValidationError


def brute_force_product(offsets, cutoff):
    k = len(offsets)
    value = 1.0
    for p in small_primes(cutoff).tolist():
        w = len({o % p for o in offsets})
        value *= p ** (k - 1) * (p - w) / (p - 1) ** k
    return value


@pytest.mark.parametrize('pattern, p, expected', [(TWINS, 2, 1), (TWINS, 3, 2), (TRIPLETS_046, 5, 3),
                                                  (TRIPLETS_046, 3, 2), (TRIPLETS_046, 7, 3)])
def test_residue_count(pattern, p, expected):
    assert residue_count(pattern, p) == expected


def test_residue_count_needs_prime():
    with pytest.raises(ValidationError):
        residue_count(TWINS, 9)


def test_admissibility_equivalence():
    for offsets in [(0, 2), (0, 2, 4), (0, 4, 6), (0, 2, 6, 8), (0, 2, 4, 6), (0, 6, 12, 18, 24)]:
        by_residues = all(residue_count(offsets, p) < p for p in small_primes(len(offsets)).tolist())
        assert is_admissible(offsets) == by_residues


def test_twin_constant():
    constant = singular_series(TWINS, tol=1e-6)
    assert constant.value == pytest.approx(1.3203236, abs=1e-6)
    assert constant.tail_bound <= 1e-6
    # Oracle: the plain product at a moderate cutoff differs by less than its tail
    oracle = brute_force_product((0, 2), 10 ** 5)
    assert abs(oracle - constant.value) < 2 * 4 / 10 ** 5 * oracle


def test_one_element_pattern():
    constant = singular_series(PRIMES)
    assert constant.value == 1.0
    assert constant.tail_bound == 0.0


def test_truncated_product_matches_brute_force():
    for offsets in [(0, 2), (0, 4, 6), (0, 2, 6, 8)]:
        assert truncated_product(offsets, 3000) == pytest.approx(brute_force_product(offsets, 3000), rel=1e-12)


def test_parallel_blocks_match_serial():
    serial = truncated_product(TRIPLETS_046, 3 * 10 ** 5)
    blocked = truncated_product(TRIPLETS_046, 3 * 10 ** 5, n_jobs=2, block_size=10 ** 4)
    assert blocked == pytest.approx(serial, rel=1e-13)


def test_tail_bound_decreases_and_covers_doubling():
    small = singular_series_at_cutoff(TRIPLETS_046, 10 ** 4)
    large = singular_series_at_cutoff(TRIPLETS_046, 2 * 10 ** 4)
    assert large.tail_bound < small.tail_bound
    assert abs(large.value - small.value) < small.tail_bound


def test_triplet_constant_expected_gap():
    constant = singular_series(TRIPLETS_046).value
    assert 10 ** 6 / (constant * li_value(10 ** 6, 3)) == pytest.approx(691.483, abs=0.01)


def test_consistency_with_twin_count():
    x = 10 ** 7
    constant = singular_series(TWINS).value
    ratio = tuple_count(TWINS, x).count / (constant * li_value(x, 2))
    assert abs(ratio - 1) < 0.05


def test_errors():
    with pytest.raises(InadmissiblePatternError):
        singular_series((0, 2, 4))
    with pytest.raises(PrecisionError):
        singular_series(TWINS, tol=1e-12, max_cutoff=10 ** 5)
    with pytest.raises(ValidationError):
        singular_series(TWINS, tol=-1)


def test_value_positive():
    for offsets in [(0, 2), (0, 6), (0, 4, 6), (0, 2, 6), (0, 2, 6, 8)]:
        constant = singular_series(offsets)
        assert constant.value > 0
        assert math.isfinite(constant.value)
