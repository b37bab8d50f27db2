# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)

Hardy-Littlewood singular series

    C(pattern) = prod_p p^(k-1) * (p - w(p)) / (p - 1)^k

with w(p) the number of distinct residues of the offsets modulo p, truncated at a prime
cutoff P with a bound for the neglected tail.
"""
import dataclasses
import functools
import logging
import math

import numpy as np
from joblib import Parallel, delayed

from .sieve import as_pattern, check_admissible, small_primes
from ..pipeline_functions.decorators import small_func, timed
from ..pipeline_functions.errors import PrecisionError, ValidationError

logger = logging.getLogger(__name__)

default_tol = 1e-6
default_max_cutoff = 10 ** 8
# Cutoff for the first, cheap estimate of the constant
estimate_cutoff = 10 ** 4


@dataclasses.dataclass(frozen=True)
class SingularConstant:
    pattern: object
    value: float
    tail_bound: float
    prime_cutoff: int

    def __float__(self):
        return float(self.value)


def _is_prime(n):
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False

    return True


@small_func
def residue_count(pattern, p):
    """Number w(p) of distinct residues of the offsets modulo the prime p"""
    pattern = as_pattern(pattern)
    if int(p) != p or not _is_prime(int(p)):
        raise ValidationError(f'{p} is not a prime')

    return len({o % int(p) for o in pattern.offsets})


def _log_factors(pattern, primes):
    """Summed logarithms of the Euler-factors for the given primes"""
    k = pattern.k
    primes = np.asarray(primes, dtype=np.int64)
    w = np.full(primes.shape, k, dtype=np.float64)
    # Only primes not exceeding the largest offset can have colliding residues
    for idx in np.flatnonzero(primes <= pattern.max_offset):
        w[idx] = residue_count(pattern, int(primes[idx]))
    p = primes.astype(np.float64)
    logs = np.log1p(-w / p) - k * np.log1p(-1 / p)

    return math.fsum(logs.tolist())


def tail_log_bound(k, cutoff):
    """Bound for |sum over p > cutoff of ln(factor)| using |ln factor| <= k^2/p^2 and sum_{n>P} 1/n^2 < 1/P"""
    return k ** 2 / cutoff


def minimal_cutoff(pattern):
    """Smallest cutoff beyond which every factor has w(p) = k and p >= 2k (needed by the tail bound)"""
    return max(2 * pattern.k, pattern.max_offset + 1)


def truncated_product(pattern, cutoff, n_jobs=1, block_size=10 ** 6):
    """Product of the Euler-factors over all primes p <= cutoff"""
    pattern = check_admissible(pattern)
    if pattern.k == 1:
        return 1.0
    primes = small_primes(int(cutoff))
    if n_jobs == 1 or len(primes) <= block_size:
        log_total = _log_factors(pattern, primes)
    else:
        blocks = [primes[i:i + block_size] for i in range(0, len(primes), block_size)]
        # Reassociating the log-sum only changes it by rounding, far below the tail bound
        log_total = math.fsum(Parallel(n_jobs=n_jobs)(delayed(_log_factors)(pattern, block) for block in blocks))

    return math.exp(log_total)


def singular_series(pattern, tol=default_tol, max_cutoff=default_max_cutoff, n_jobs=1):
    """Hardy-Littlewood constant of an admissible pattern

    Parameters
    ----------
    pattern : TuplePattern | sequence of int | str
        An admissible offset pattern.
    tol : float
        Largest acceptable absolute bound for the truncated tail.
    max_cutoff : int
        Largest prime cutoff, which may be used.
    n_jobs : int
        Number of joblib-workers for the product over blocks of primes.

    Returns
    -------
    constant : SingularConstant
    """
    pattern = check_admissible(pattern)
    if not tol > 0:
        raise ValidationError(f'tol has to be positive, not {tol}')

    return _singular_series(pattern, float(tol), int(max_cutoff), n_jobs)


@functools.lru_cache(maxsize=64)
@timed
def _singular_series(pattern, tol, max_cutoff, n_jobs):
    k = pattern.k
    if k == 1:
        # w(p) = 1 makes every factor (p - 1) / (p - 1) = 1
        return SingularConstant(pattern, 1.0, 0.0, 2)

    base_cutoff = minimal_cutoff(pattern)
    estimate = truncated_product(pattern, max(estimate_cutoff, base_cutoff))
    # Choose P with estimate * expm1(k^2 / P) <= tol, leaving 10 % headroom for the estimate
    needed = math.ceil(k ** 2 / math.log1p(tol / (1.1 * estimate)))
    cutoff = max(base_cutoff, needed)
    if cutoff > max_cutoff:
        best_bound = 1.1 * estimate * math.expm1(tail_log_bound(k, max_cutoff))
        raise PrecisionError(f'Singular series of {pattern} needs a prime cutoff of {cutoff} for tol={tol:g}, '
                             f'but max_cutoff is {max_cutoff}', best_bound)

    value = truncated_product(pattern, cutoff, n_jobs=n_jobs)
    tail_bound = value * math.expm1(tail_log_bound(k, cutoff))
    logger.info(f'Singular series of {pattern}: {value:.10f} (cutoff {cutoff}, tail bound {tail_bound:.2e})')

    return SingularConstant(pattern, value, tail_bound, cutoff)


def singular_series_at_cutoff(pattern, cutoff):
    """SingularConstant for a fixed prime cutoff (without a tolerance requirement)"""
    pattern = check_admissible(pattern)
    if pattern.k == 1:
        return SingularConstant(pattern, 1.0, 0.0, int(cutoff))
    cutoff = max(int(cutoff), minimal_cutoff(pattern))
    value = truncated_product(pattern, cutoff)

    return SingularConstant(pattern, value, value * math.expm1(tail_log_bound(pattern.k, cutoff)), cutoff)
