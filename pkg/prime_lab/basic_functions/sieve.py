# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)

Exact ground truth: a segmented sieve of Eratosthenes (odd numbers only) counting primes
and prime k-tuples of a given offset pattern, whose first element does not exceed x.
"""
import dataclasses
import logging
import math
from enum import Enum

import numpy as np
from joblib import Parallel, delayed, effective_n_jobs

from ..pipeline_functions.decorators import timed
from ..pipeline_functions.errors import DomainError, InadmissiblePatternError, SieveBudgetError, ValidationError
from ..pipeline_functions.pipeline_utils import parse_offsets

logger = logging.getLogger(__name__)

default_budget = 10 ** 9
# 256 KiB of odd-number flags, about the size of a L2-cache
default_segment_size = 2 ** 18


@dataclasses.dataclass(frozen=True)
class TuplePattern:
    """An offset pattern (0, 2m_1, ..., 2m_{k-1}) identifying a family of prime k-tuples"""
    offsets: tuple

    def __post_init__(self):
        try:
            offsets = tuple(int(o) for o in self.offsets)
        except (TypeError, ValueError):
            raise ValidationError(f'Offsets {self.offsets!r} have to be integers')
        if len(offsets) == 0:
            raise ValidationError('A pattern needs at least one offset')
        if offsets[0] != 0:
            raise ValidationError(f'The first offset has to be 0, not {offsets[0]}')
        if any(b <= a for a, b in zip(offsets, offsets[1:])):
            raise ValidationError(f'Offsets {offsets} have to be strictly increasing')
        if any(o % 2 for o in offsets):
            raise ValidationError(f'Offsets {offsets} have to be even')
        # Frozen dataclass, so write the normalized tuple through object.__setattr__
        object.__setattr__(self, 'offsets', offsets)

    @classmethod
    def from_string(cls, text):
        return cls(parse_offsets(text))

    @property
    def k(self):
        return len(self.offsets)

    @property
    def max_offset(self):
        return self.offsets[-1]

    def __str__(self):
        return ','.join(str(o) for o in self.offsets)


PRIMES = TuplePattern((0,))
TWINS = TuplePattern((0, 2))
TRIPLETS_046 = TuplePattern((0, 4, 6))


class Provenance(str, Enum):
    sieved = 'sieved'
    cached = 'cached'
    reference = 'reference'


@dataclasses.dataclass(frozen=True)
class CountRecord:
    limit: int
    pattern: TuplePattern
    count: int
    provenance: Provenance = Provenance.sieved


def as_pattern(pattern):
    """Accept a TuplePattern, an offset-sequence or a string like "0,4,6" """
    if isinstance(pattern, TuplePattern):
        return pattern
    if isinstance(pattern, str):
        return TuplePattern.from_string(pattern)

    return TuplePattern(tuple(pattern))


def small_primes(limit):
    """All primes <= limit from a plain (not segmented) sieve"""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False

    return np.flatnonzero(is_prime).astype(np.int64)


def is_admissible(pattern):
    """True if for every prime p <= k the offsets leave at least one residue class mod p free"""
    pattern = as_pattern(pattern)
    for p in small_primes(pattern.k).tolist():
        if len({o % p for o in pattern.offsets}) == p:
            return False

    return True


def check_admissible(pattern):
    pattern = as_pattern(pattern)
    for p in small_primes(pattern.k).tolist():
        if len({o % p for o in pattern.offsets}) == p:
            raise InadmissiblePatternError(pattern, p)

    return pattern


def segment_flags(low, size, base_primes):
    """Primality flags of the odd numbers low, low + 2, ..., low + 2 * (size - 1)

    Parameters
    ----------
    low : int
        Odd start of the segment.
    size : int
        Number of odd numbers in the segment.
    base_primes : list of int
        All odd primes up to at least sqrt(low + 2 * size).

    Returns
    -------
    flags : np.ndarray of bool
    """
    flags = np.ones(size, dtype=bool)
    high = low + 2 * size
    for p in base_primes:
        p2 = p * p
        if p2 >= high:
            break
        start = max(p2, -(-low // p) * p)
        if start % 2 == 0:
            start += p
        flags[(start - low) // 2::p] = False
    if low == 1:
        flags[0] = False

    return flags


def _count_segments(offsets, x, lows, size, base_primes):
    half_offsets = [o // 2 for o in offsets[1:]]
    extension = offsets[-1] // 2
    count = 0
    for low in lows:
        # Number of odd candidates n <= x in this segment
        n_candidates = min(size, (x - low) // 2 + 1)
        flags = segment_flags(low, n_candidates + extension, base_primes)
        hits = flags[:n_candidates].copy()
        for half in half_offsets:
            hits &= flags[half:half + n_candidates]
        count += int(np.count_nonzero(hits))

    return count


def sieve_count(pattern, x, segment_size=default_segment_size, n_jobs=1):
    """Count the tuples of pattern with first element n <= x by sieving (no cache, no budget)

    The tuple n, n + offsets[1], ... is counted by its first element, even when later members
    exceed x.
    """
    pattern = as_pattern(pattern)
    if x < 2:
        return 0
    # The prime 2 is the only even member, it can only start the one-element pattern
    count = 1 if pattern.k == 1 else 0
    if x < 3:
        return count

    base_primes = small_primes(math.isqrt(x + pattern.max_offset) + 1)[1:].tolist()
    lows = list(range(1, x + 1, 2 * segment_size))
    n_blocks = min(len(lows), 4 * effective_n_jobs(n_jobs))
    logger.debug(f'Sieving {len(lows)} segments of {segment_size} odd numbers up to {x} for pattern {pattern}')

    if n_jobs == 1 or len(lows) == 1:
        count += _count_segments(pattern.offsets, x, lows, segment_size, base_primes)
    else:
        blocks = [lows[i::n_blocks] for i in range(n_blocks)]
        counts = Parallel(n_jobs=n_jobs)(delayed(_count_segments)(pattern.offsets, x, block,
                                                                  segment_size, base_primes)
                                         for block in blocks if block)
        count += sum(counts)

    return count


@timed
def tuple_count(pattern, x, budget=default_budget, segment_size=default_segment_size, cache=None, n_jobs=1):
    """Exact number of n <= x, for which n + o is prime for every offset o of the pattern

    Parameters
    ----------
    pattern : TuplePattern | sequence of int | str
        An admissible offset pattern.
    x : int
        The limit for the first element of the tuple.
    budget : int
        Largest x, which may be sieved.
    segment_size : int
        Number of odd numbers per sieve-segment.
    cache : CountCache | None
        Optional cache, which is consulted first and receives freshly sieved counts.
    n_jobs : int
        Number of joblib-workers for the sieve-segments.

    Returns
    -------
    record : CountRecord
    """
    pattern = check_admissible(pattern)
    x = int(x)
    if x < 1:
        raise DomainError(f'x has to be a positive integer, not {x}')

    if cache is not None:
        cached = cache.get(x, pattern)
        if cached is not None:
            logger.info(f'Count for pattern {pattern} up to {x} taken from cache')
            return CountRecord(x, pattern, cached, Provenance.cached)

    if x > budget:
        raise SieveBudgetError(x, budget)

    count = sieve_count(pattern, x, segment_size=segment_size, n_jobs=n_jobs)
    record = CountRecord(x, pattern, count, Provenance.sieved)
    if cache is not None:
        cache.put(record)

    return record


def prime_count(x, **kwargs):
    """Exact pi(x), the number of primes not exceeding x (same keywords as tuple_count)"""
    return tuple_count(PRIMES, x, **kwargs)
