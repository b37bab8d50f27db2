# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)

Densities of the random variables derived from the count-analogs by a change of variables.

For primes (location a = Li(x), scale sigma of the first model):

- count_normal: X ~ N(a, sigma), the untruncated form (only above the Skewes number)
- count_truncated: X truncated at its mean, density 2 * phi on (-inf, a]
- density_Y: Y = X / x, truncated normal with b = a / x and scale sigma / x
- gap_Z: Z = 1 / Y = x / X on [c, inf) with c = x / a, the analog of the mean distance between primes

For prime k-tuples (location M_J = C * Li_k(x), scale sigma_J):

- tuple_count_J: J ~ N(M_J, sigma_J)
- tuple_density_G: G = J / x ~ N(M_G, sigma_G)
- tuple_gap_H: H = 1 / G on (0, inf)
"""
import dataclasses
import logging
import math
from enum import Enum

import numpy as np
import pandas as pd
from scipy import integrate
from scipy.stats import norm

from .models import model1_stats, tuple_stats
from .sieve import as_pattern
from ..pipeline_functions.errors import DegenerateIntervalError, DomainError, ValidationError

logger = logging.getLogger(__name__)

# log10 of the Skewes number 1.397e316, the first x with pi(x) > Li(x)
skewes_log10 = 316.1452
default_n_sigma = 12


class DensityKind(str, Enum):
    count_normal = 'count_normal'
    count_truncated = 'count_truncated'
    density_Y = 'density_Y'
    gap_Z = 'gap_Z'
    tuple_count_J = 'tuple_count_J'
    tuple_density_G = 'tuple_density_G'
    tuple_gap_H = 'tuple_gap_H'


count_kinds = (DensityKind.count_normal, DensityKind.count_truncated, DensityKind.tuple_count_J)
scaled_kinds = (DensityKind.density_Y, DensityKind.tuple_density_G)
gap_kinds = (DensityKind.gap_Z, DensityKind.tuple_gap_H)
truncated_kinds = (DensityKind.count_truncated, DensityKind.density_Y, DensityKind.gap_Z)
tuple_kinds = (DensityKind.tuple_count_J, DensityKind.tuple_density_G, DensityKind.tuple_gap_H)


def _as_kind(kind):
    try:
        return DensityKind(kind)
    except ValueError:
        raise ValidationError(f'Unknown density kind {kind}')


def _as_array(t):
    t = np.asarray(t, dtype=np.float64)
    return t, t.ndim == 0


def _output(values, scalar):
    return float(values) if scalar else values


@dataclasses.dataclass(frozen=True)
class GapDensity:
    """A density of one of the transformed random variables

    Parameters
    ----------
    kind : DensityKind | str
    x : float
        The limit, which the count-analog refers to.
    location : float
        Mean of the count-analog (a = Li(x) or M_J = C * Li_k(x)).
    scale : float
        Standard deviation of the count-analog (sigma or sigma_J).
    pattern : TuplePattern | None
        The pattern of the tuple kinds.
    """
    kind: DensityKind
    x: float
    location: float
    scale: float
    pattern: object = None

    def __post_init__(self):
        object.__setattr__(self, 'kind', _as_kind(self.kind))
        if not self.x > 0:
            raise ValidationError(f'x has to be positive, not {self.x}')
        if not self.location > 0:
            raise ValidationError(f'The location has to be positive, not {self.location}')
        if not self.scale > 0:
            raise ValidationError(f'The scale has to be positive, not {self.scale}')

    @property
    def b(self):
        """Location on the density level (b = a / x, M_G = M_J / x)"""
        return self.location / self.x

    @property
    def s(self):
        """Scale on the density level (sigma / x, sigma_G = sigma_J / x)"""
        return self.scale / self.x

    @property
    def c(self):
        """x / location, lower support-bound of gap_Z and the printed expectation of the gap-variables"""
        return self.x / self.location

    @property
    def support(self):
        if self.kind == DensityKind.count_truncated:
            return -math.inf, self.location
        elif self.kind == DensityKind.density_Y:
            return -math.inf, self.b
        elif self.kind == DensityKind.gap_Z:
            return self.c, math.inf
        elif self.kind == DensityKind.tuple_gap_H:
            return 0.0, math.inf
        else:
            return -math.inf, math.inf

    def pdf(self, t):
        t, scalar = _as_array(t)
        kind = self.kind
        if kind in (DensityKind.count_normal, DensityKind.tuple_count_J):
            values = norm.pdf(t, self.location, self.scale)
        elif kind == DensityKind.tuple_density_G:
            values = norm.pdf(t, self.b, self.s)
        elif kind == DensityKind.count_truncated:
            values = np.where(t <= self.location, 2 * norm.pdf(t, self.location, self.scale), 0.0)
        elif kind == DensityKind.density_Y:
            values = np.where(t <= self.b, 2 * norm.pdf(t, self.b, self.s), 0.0)
        else:
            lower = self.c if kind == DensityKind.gap_Z else 0.0
            factor = 2.0 if kind == DensityKind.gap_Z else 1.0
            inside = (t >= lower) & (t > 0)
            # Keep 1 / t finite where the result is masked anyway
            safe_t = np.where(inside, t, 1.0)
            values = np.where(inside, factor * norm.pdf(1 / safe_t, self.b, self.s) / safe_t ** 2, 0.0)

        return _output(values, scalar)

    def cdf(self, t):
        t, scalar = _as_array(t)
        kind = self.kind
        if kind in (DensityKind.count_normal, DensityKind.tuple_count_J):
            values = norm.cdf(t, self.location, self.scale)
        elif kind == DensityKind.tuple_density_G:
            values = norm.cdf(t, self.b, self.s)
        elif kind == DensityKind.count_truncated:
            values = np.where(t <= self.location, 2 * norm.cdf(t, self.location, self.scale), 1.0)
        elif kind == DensityKind.density_Y:
            values = np.where(t <= self.b, 2 * norm.cdf(t, self.b, self.s), 1.0)
        elif kind == DensityKind.gap_Z:
            inside = t >= self.c
            safe_t = np.where(inside, t, self.c)
            # P(Z <= t) = P(Y >= 1 / t)
            values = np.where(inside, np.clip(1 - 2 * norm.cdf(1 / safe_t, self.b, self.s), 0.0, 1.0), 0.0)
        else:
            inside = t > 0
            safe_t = np.where(inside, t, 1.0)
            values = np.where(inside, norm.sf(1 / safe_t, self.b, self.s), 0.0)

        return _output(values, scalar)

    def ppf(self, u):
        """Inverse of the cdf for probabilities in (0, 1)"""
        u, scalar = _as_array(u)
        kind = self.kind
        if kind in (DensityKind.count_normal, DensityKind.tuple_count_J):
            values = norm.ppf(u, self.location, self.scale)
        elif kind == DensityKind.tuple_density_G:
            values = norm.ppf(u, self.b, self.s)
        elif kind == DensityKind.count_truncated:
            values = norm.ppf(u / 2, self.location, self.scale)
        elif kind == DensityKind.density_Y:
            values = norm.ppf(u / 2, self.b, self.s)
        elif kind == DensityKind.gap_Z:
            values = 1 / norm.ppf((1 - u) / 2, self.b, self.s)
        else:
            values = 1 / norm.isf(u, self.b, self.s)

        return _output(values, scalar)

    def mode(self):
        """The tabulated location of the maximum

        For tuple_gap_H this is M_H = x / M_J, the exact maximum of the pdf lies slightly
        below it (see peak_location).
        """
        if self.kind == DensityKind.tuple_gap_H:
            return self.c
        return self.peak_location()

    def peak_location(self):
        """Exact location of the maximum of the pdf"""
        if self.kind in (DensityKind.count_normal, DensityKind.count_truncated, DensityKind.tuple_count_J):
            return self.location
        elif self.kind in scaled_kinds:
            return self.b
        elif self.kind == DensityKind.gap_Z:
            # The pdf decreases from its lower support-bound
            return self.c
        else:
            # u^2 * exp(-(u - M_G)^2 / (2 sigma_G^2)) is maximal at the positive root of u^2 - M_G u - 2 sigma_G^2
            u_max = (self.b + math.sqrt(self.b ** 2 + 8 * self.s ** 2)) / 2
            return 1 / u_max

    def center(self):
        """The expectation as tabulated: the count-location mapped through the change of variables"""
        if self.kind in count_kinds:
            return self.location
        elif self.kind in scaled_kinds:
            return self.b
        else:
            return self.c

    def peak_value(self):
        return self.pdf(self.mode())

    def support_window(self, n_sigma=default_n_sigma):
        """Interval holding all but a negligible part of the probability mass"""
        low_count = self.location - n_sigma * self.scale
        high_count = self.location + n_sigma * self.scale
        kind = self.kind
        if kind in (DensityKind.count_normal, DensityKind.tuple_count_J):
            return low_count, high_count
        elif kind == DensityKind.count_truncated:
            return low_count, self.location
        elif kind == DensityKind.density_Y:
            return low_count / self.x, self.b
        elif kind == DensityKind.tuple_density_G:
            return low_count / self.x, high_count / self.x
        upper = self.x / low_count if low_count > 0 else math.inf
        if kind == DensityKind.gap_Z:
            return self.c, upper
        return self.x / high_count, upper

    def total_mass(self, n_sigma=default_n_sigma):
        """Numerical integral of the pdf over the support window"""
        lower, upper = self.support_window(n_sigma)
        inner = self.peak_location()
        if not lower < inner < upper:
            inner = None
        return _integrate(self.pdf, lower, upper, inner)

    def mean(self, n_sigma=default_n_sigma):
        """Numerical expectation"""
        if self.kind in (DensityKind.count_normal, DensityKind.tuple_count_J):
            return self.location
        if self.kind == DensityKind.tuple_density_G:
            return self.b
        lower, upper = self.support_window(n_sigma)
        inner = self.peak_location()
        if not lower < inner < upper:
            inner = None

        return _integrate(lambda t: t * self.pdf(t), lower, upper, inner) / self.total_mass(n_sigma)

    def interval_endpoints(self, s):
        """Image of the count-interval [location - s * scale, location + s * scale] under t -> x / t"""
        if self.kind not in gap_kinds:
            raise ValidationError(f'Interval endpoints are defined for the gap-densities, not for {self.kind.value}')
        if not s > 0:
            raise ValidationError(f's has to be positive, not {s}')
        if s * self.scale >= self.location:
            raise DegenerateIntervalError(f'{s} * sigma = {s * self.scale:g} reaches the mean {self.location:g}')

        return self.x / (self.location + s * self.scale), self.x / (self.location - s * self.scale)

    def interval_probability(self, s):
        """Probability mass between the interval endpoints, which equals 2 * Phi(s) - 1"""
        lower, upper = self.interval_endpoints(s)

        return self.cdf(upper) - self.cdf(lower)

    def convergence_scale(self):
        """sigma / x, the scale of density_Y and tuple_density_G"""
        return self.s

    def sample(self, n, seed=None):
        """Draw n samples by inverse transform"""
        rng = np.random.Generator(np.random.Philox(seed))
        u = rng.random(int(n))
        # rng.random can return exactly 0
        u = np.clip(u, np.finfo(float).tiny, 1 - np.finfo(float).epsneg)

        return self.ppf(u)

    def curve(self, lower=None, upper=None, steps=201):
        """Sampled pdf and cdf as a DataFrame with the columns t, pdf, cdf"""
        if lower is None or upper is None:
            window = self.support_window(6)
            lower = window[0] if lower is None else lower
            upper = window[1] if upper is None else upper
        if not math.isfinite(lower) or not math.isfinite(upper):
            raise ValidationError('The curve needs finite bounds')
        if not upper > lower:
            raise ValidationError(f'Empty grid {lower}:{upper}')
        if int(steps) < 2:
            raise ValidationError(f'A grid needs at least 2 steps, not {steps}')
        t = np.linspace(lower, upper, int(steps))

        return pd.DataFrame({'t': t, 'pdf': self.pdf(t), 'cdf': self.cdf(t)})


def _integrate(func, lower, upper, inner=None):
    if inner is None:
        pieces = [(lower, upper)]
    else:
        pieces = [(lower, inner), (inner, upper)]
    total = 0.0
    for a, b in pieces:
        value, error = integrate.quad(func, a, b, epsabs=1e-13, epsrel=1e-12, limit=200)
        total += value
        logger.debug(f'Integral over [{a:g}, {b:g}]: {value:.15f} (error estimate {error:.1e})')

    return total


def _real_limit(x):
    try:
        value = float(x)
    except OverflowError:
        raise DomainError(f'x with {len(str(int(x)))} digits lies beyond the floating-point range')
    if not math.isfinite(value):
        raise DomainError(f'x has to be finite, not {value}')

    return value


def below_skewes(x, skewes=skewes_log10):
    """True if x lies below the Skewes number 10^skewes, where pi(x) < Li(x) and the truncated forms apply"""
    return math.log10(x) < skewes


def count_density(x, kind=DensityKind.count_truncated, tol=1e-12):
    """Density of one of the prime-count kinds at x, built from the first model"""
    kind = _as_kind(kind)
    if kind in tuple_kinds:
        raise ValidationError(f'{kind.value} needs a pattern, use tuple_density')
    x = _real_limit(x)
    stats = model1_stats(x, tol)

    return GapDensity(kind, x, stats.mean, stats.sigma)


def tuple_density(pattern, x, kind=DensityKind.tuple_gap_H, tol=1e-12):
    """Density of one of the tuple kinds at x"""
    kind = _as_kind(kind)
    if kind not in tuple_kinds:
        raise ValidationError(f'{kind.value} is not a tuple kind')
    pattern = as_pattern(pattern)
    x = _real_limit(x)
    stats = tuple_stats(pattern, x, tol)

    return GapDensity(kind, x, stats.mean, stats.sigma, pattern)


def make_density(kind, x, pattern=None, tol=1e-12):
    kind = _as_kind(kind)
    if kind in tuple_kinds:
        if pattern is None:
            raise ValidationError(f'{kind.value} needs a pattern')
        return tuple_density(pattern, x, kind, tol)

    return count_density(x, kind, tol)


def prime_count_density(x, skewes=skewes_log10, tol=1e-12):
    """The count-density valid at x: truncated at its mean below the Skewes number, untruncated above"""
    x = _real_limit(x)
    if below_skewes(x, skewes):
        return count_density(x, DensityKind.count_truncated, tol)

    logger.warning(f'x={x:g} lies above the Skewes number, using the untruncated normal density')
    return count_density(x, DensityKind.count_normal, tol)
