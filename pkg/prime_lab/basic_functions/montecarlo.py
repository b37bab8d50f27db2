# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)

Seeded urn-simulations for the first (with replacement) and third (without replacement) model.

The trials are split into chunks of fixed size, chunk i draws from
Generator(Philox(SeedSequence([seed, i]))). The merged histogram thus only depends on the
seed and the chunk size, not on the number of workers.
"""
import dataclasses
import logging
import math

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from scipy.stats import chisquare

from .models import UrnSpec, binomial_pmf, hypergeometric_pmf
from ..pipeline_functions.decorators import timed
from ..pipeline_functions.errors import ValidationError

logger = logging.getLogger(__name__)

generator_name = 'Philox'
default_chunk_trials = 10000
sampling_modes = ('with', 'without')


@dataclasses.dataclass(frozen=True)
class SimResult:
    urn: UrnSpec
    mode: str
    trials: int
    histogram: dict
    seed: int
    chunk_trials: int = default_chunk_trials
    generator: str = generator_name

    def frequencies(self):
        """Frequencies of n1 = 0, ..., n as an array"""
        freq = np.zeros(self.urn.n + 1, dtype=np.int64)
        for n1, count in self.histogram.items():
            freq[n1] = count
        return freq

    def exact_pmf(self, n1=None):
        if n1 is None:
            n1 = np.arange(self.urn.n + 1)
        if self.mode == 'without':
            return hypergeometric_pmf(self.urn, n1)
        return binomial_pmf(self.urn, n1)

    def mean(self):
        freq = self.frequencies()
        return float(np.dot(np.arange(len(freq)), freq) / self.trials)

    def to_frame(self):
        """DataFrame with the columns n1, frequency, exact_pmf (rows with neither frequency nor probability dropped)"""
        n1 = np.arange(self.urn.n + 1)
        df = pd.DataFrame({'n1': n1, 'frequency': self.frequencies(), 'exact_pmf': self.exact_pmf(n1)})

        return df[(df['frequency'] > 0) | (df['exact_pmf'] > 0)].reset_index(drop=True)


def _check_simulation(urn, trials, chunk_trials):
    if int(trials) != trials or trials < 1:
        raise ValidationError(f'trials has to be a positive integer, not {trials}')
    if int(chunk_trials) != chunk_trials or chunk_trials < 1:
        raise ValidationError(f'chunk_trials has to be a positive integer, not {chunk_trials}')
    if not isinstance(urn, UrnSpec):
        raise ValidationError(f'{urn!r} is not an UrnSpec')


def chunk_generator(seed, chunk_index):
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(seed), int(chunk_index)])))


def _draw_chunk(urn, mode, n_trials, seed, chunk_index):
    rng = chunk_generator(seed, chunk_index)
    white = np.zeros(n_trials, dtype=np.int64)
    if mode == 'with':
        for _ in range(urn.n):
            white += rng.integers(0, urn.M, n_trials) < urn.M1
    else:
        # Partial Fisher-Yates over the implicit index range, where the first positions of the
        # remaining pool hold its white balls: draw i takes a uniform ball among the M - i left
        for i in range(urn.n):
            white += rng.integers(0, urn.M - i, n_trials) < urn.M1 - white

    return np.bincount(white, minlength=urn.n + 1)


@timed
def simulate(urn, trials, seed, mode='without', chunk_trials=default_chunk_trials, n_jobs=1):
    """Draw n balls per trial and count the white ones

    Parameters
    ----------
    urn : UrnSpec
    trials : int
        Number of trials.
    seed : int
        Seed, from which the seeds of the chunks are derived.
    mode : str
        'with' (returning the balls, binomial) or 'without' (hypergeometric).
    chunk_trials : int
        Number of trials per chunk.
    n_jobs : int
        Number of joblib-workers for the chunks.

    Returns
    -------
    result : SimResult
    """
    _check_simulation(urn, trials, chunk_trials)
    if mode not in sampling_modes:
        raise ValidationError(f'mode has to be one of {sampling_modes}, not {mode}')
    if mode == 'without' and urn.n > urn.M:
        raise ValidationError(f'Can not draw n={urn.n} balls without replacement from M={urn.M} balls')

    trials, chunk_trials = int(trials), int(chunk_trials)
    sizes = [min(chunk_trials, trials - start) for start in range(0, trials, chunk_trials)]
    logger.info(f'Simulating {trials} trials ({mode} replacement) in {len(sizes)} chunks')
    if n_jobs == 1 or len(sizes) == 1:
        histograms = [_draw_chunk(urn, mode, size, seed, idx) for idx, size in enumerate(sizes)]
    else:
        histograms = Parallel(n_jobs=n_jobs)(delayed(_draw_chunk)(urn, mode, size, seed, idx)
                                             for idx, size in enumerate(sizes))
    total = np.sum(histograms, axis=0)
    histogram = {int(n1): int(count) for n1, count in enumerate(total) if count > 0}

    return SimResult(urn, mode, trials, histogram, int(seed), chunk_trials)


def simulate_with_replacement(urn, trials, seed, **kwargs):
    return simulate(urn, trials, seed, mode='with', **kwargs)


def simulate_without_replacement(urn, trials, seed, **kwargs):
    return simulate(urn, trials, seed, mode='without', **kwargs)


def chi_square(result, min_expected=5):
    """Chi-square test of the histogram against the exact pmf

    Neighbouring bins are pooled until each expects at least min_expected trials.

    Returns
    -------
    test : scipy.stats Power_divergenceResult
        With statistic and pvalue.
    """
    expected = result.exact_pmf() * result.trials
    observed = result.frequencies().astype(np.float64)
    pooled_obs, pooled_exp = list(), list()
    acc_obs, acc_exp = 0.0, 0.0
    for obs, exp in zip(observed, expected):
        acc_obs += obs
        acc_exp += exp
        if acc_exp >= min_expected:
            pooled_obs.append(acc_obs)
            pooled_exp.append(acc_exp)
            acc_obs, acc_exp = 0.0, 0.0
    if pooled_exp:
        pooled_obs[-1] += acc_obs
        pooled_exp[-1] += acc_exp
    else:
        pooled_obs, pooled_exp = [acc_obs], [acc_exp]
    pooled_exp = np.asarray(pooled_exp)
    pooled_exp *= result.trials / pooled_exp.sum()
    if len(pooled_exp) < 2:
        logger.warning('All trials fall into one pooled bin, the chi-square test is trivial')

    return chisquare(pooled_obs, pooled_exp)


def empirical_total_variation(result):
    """Total-variation distance between the relative frequencies and the exact pmf"""
    return 0.5 * float(np.sum(np.abs(result.frequencies() / result.trials - result.exact_pmf())))


def standard_error(result):
    """Standard error of the histogram mean under the exact model"""
    urn = result.urn
    variance = urn.n * urn.p * (1 - urn.p)
    if result.mode == 'without' and urn.M > 1:
        variance *= (urn.M - urn.n) / (urn.M - 1)

    return math.sqrt(variance / result.trials)
