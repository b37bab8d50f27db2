# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)

Means and standard deviations of the count-analog random variables:

- first model (binomial, drawing numbers with replacement): a = Li(x), sigma^2 = Li(x) - Li(x)^2 / x
- second model (Cramer, independent events with probability 1/ln n): sigma_1^2 = Li(x) - Li_2(x)
- tuple model (Hardy-Littlewood): M_J = C * Li_k(x), sigma_J^2 = C * Li_k(x) - C^2 * Li_2k(x)

and the third model (hypergeometric, drawing without replacement) with its binomial limit.
"""
import dataclasses
import math
from enum import Enum

import numpy as np
from scipy.stats import binom, hypergeom

from .logint import li_value
from .sieve import as_pattern, check_admissible, prime_count
from .singular import singular_series
from ..pipeline_functions.errors import DomainError, ValidationError

# Relative tolerance of the logarithmic integrals entering the statistics
stats_tol = 1e-12


class ModelKind(str, Enum):
    binomial_model1 = 'binomial_model1'
    cramer_model2 = 'cramer_model2'
    tuple_model = 'tuple_model'


@dataclasses.dataclass(frozen=True)
class ModelStats:
    x: float
    model: ModelKind
    mean: float
    sigma: float
    pattern: object = None

    @property
    def variance(self):
        return self.sigma ** 2

    @property
    def whole_sigma(self):
        """The standard deviation as a whole number, as tabulated

        Integer part for the prime-count models, nearest integer for the tuple model.
        """
        if self.model == ModelKind.tuple_model:
            return round(self.sigma)
        return math.floor(self.sigma)


@dataclasses.dataclass(frozen=True)
class UrnSpec:
    """Urn with M balls, M1 of them white, from which n balls are drawn"""
    M: int
    M1: int
    n: int

    def __post_init__(self):
        for name in ('M', 'M1', 'n'):
            if int(getattr(self, name)) != getattr(self, name):
                raise ValidationError(f'{name} has to be an integer')
        if self.M < 1:
            raise ValidationError(f'The urn needs at least one ball, not M={self.M}')
        if not 0 <= self.M1 <= self.M:
            raise ValidationError(f'M1={self.M1} has to lie in [0, M={self.M}]')
        if not 0 < self.n:
            raise ValidationError(f'At least one ball has to be drawn, not n={self.n}')

    @property
    def M2(self):
        return self.M - self.M1

    @property
    def p(self):
        return self.M1 / self.M

    @property
    def support(self):
        """Smallest and largest possible number of white balls when drawing without replacement"""
        return max(0, self.n - self.M2), min(self.n, self.M1)


def _check_x(x):
    if not x >= 3:
        raise DomainError(f'The models need x >= 3, not x={x}')


def model1_stats(x, tol=stats_tol):
    """Statistics of the first (binomial) model"""
    _check_x(x)
    li_1 = li_value(x, 1, tol)
    sigma = math.sqrt(li_1 - li_1 ** 2 / x)

    return ModelStats(x, ModelKind.binomial_model1, li_1, sigma)


def model2_stats(x, tol=stats_tol):
    """Statistics of the second (Cramer) model"""
    _check_x(x)
    li_1 = li_value(x, 1, tol)
    sigma = math.sqrt(li_1 - li_value(x, 2, tol))

    return ModelStats(x, ModelKind.cramer_model2, li_1, sigma)


def tuple_stats(pattern, x, tol=stats_tol, singular_tol=1e-6):
    """Statistics of the count J(x) of prime k-tuples of an admissible pattern

    Parameters
    ----------
    pattern : TuplePattern | sequence of int | str
        An admissible offset pattern.
    x : float
        The limit, x >= 3.
    tol : float
        Relative tolerance of the logarithmic integrals.
    singular_tol : float
        Tolerance of the singular series.

    Returns
    -------
    stats : ModelStats
    """
    pattern = check_admissible(pattern)
    _check_x(x)
    k = pattern.k
    constant = singular_series(pattern, singular_tol).value
    mean = constant * li_value(x, k, tol)
    variance = mean - constant ** 2 * li_value(x, 2 * k, tol)
    if not variance > 0:
        raise DomainError(f'The variance of the tuple count for {pattern} is not positive at x={x}')

    return ModelStats(x, ModelKind.tuple_model, mean, math.sqrt(variance), pattern)


def variance_gap(x, tol=stats_tol):
    """sigma^2 - sigma_1^2 = Li_2(x) - Li(x)^2 / x (evaluated directly to avoid cancellation)"""
    _check_x(x)
    li_1 = li_value(x, 1, tol)

    return li_value(x, 2, tol) - li_1 ** 2 / x


def variance_gap_ratio(x, power=4, tol=stats_tol):
    """variance_gap normalized by x / ln^power(x)"""
    return variance_gap(x, tol) * math.log(x) ** power / x


def hypergeometric_pmf(urn, n1):
    """Probability of drawing n1 white balls with n draws without replacement

    Configurations outside the support have probability 0.
    """
    if urn.n > urn.M:
        raise ValidationError(f'Can not draw n={urn.n} balls from an urn with M={urn.M} balls')
    pmf = hypergeom.pmf(n1, urn.M, urn.M1, urn.n)

    return float(pmf) if np.ndim(pmf) == 0 else pmf


def binomial_pmf(urn, n1):
    """Limit of the hypergeometric pmf for a large urn: Binomial(n, M1 / M)"""
    pmf = binom.pmf(n1, urn.n, urn.p)

    return float(pmf) if np.ndim(pmf) == 0 else pmf


def total_variation(urn):
    """Total-variation distance between the hypergeometric pmf and its binomial limit"""
    n1 = np.arange(urn.n + 1)

    return 0.5 * float(np.sum(np.abs(hypergeometric_pmf(urn, n1) - binomial_pmf(urn, n1))))


def urn_from_primes(M, n, **count_kwargs):
    """The urn of the third model: the first M natural numbers with the pi(M) primes as white balls"""
    return UrnSpec(int(M), prime_count(int(M), **count_kwargs).count, int(n))


def riemann_bound(x, pi_value=math.pi):
    """sqrt(x) * ln(x) / (8 pi), the largest deviation |Li(x) - pi(x)| under the Riemann hypothesis"""
    if not x > 0:
        raise DomainError(f'x has to be positive, not {x}')

    return math.sqrt(x) * math.log(x) / (8 * pi_value)


def model_stats(model, x, pattern=None, tol=stats_tol):
    """Dispatch by model-name ('1', '2' or 'tuple')"""
    model = str(model)
    if model in ('1', ModelKind.binomial_model1.value):
        return model1_stats(x, tol)
    elif model in ('2', ModelKind.cramer_model2.value):
        return model2_stats(x, tol)
    elif model in ('tuple', ModelKind.tuple_model.value):
        if pattern is None:
            raise ValidationError('The tuple model needs a pattern')
        return tuple_stats(as_pattern(pattern), x, tol)
    else:
        raise ValidationError(f'Unknown model {model}')
