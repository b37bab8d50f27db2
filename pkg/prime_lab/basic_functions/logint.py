# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)

Generalized logarithmic integrals Li_k(x) = int_2^x dt / ln^k(t).

With t = e^u the integral becomes int_{ln 2}^{ln x} e^u / u^k du, which is evaluated by
composite Gauss-Legendre quadrature on equal panels in u (log-spaced panels in t). The
number of panels is doubled until two successive estimates agree within the tolerance.
"""
import dataclasses
import functools
import logging
import math

import numpy as np
from scipy.special import expi, roots_legendre

from ..pipeline_functions.errors import DomainError, PrecisionError, ValidationError

logger = logging.getLogger(__name__)

gauss_points = 20
max_doublings = 14
eps = np.finfo(float).eps

# li(2), the part of the conventional logarithmic integral below the lower limit 2
li_at_2 = float(expi(math.log(2)))

_nodes, _weights = roots_legendre(gauss_points)


@dataclasses.dataclass(frozen=True)
class LiValue:
    x: float
    k: int
    value: float
    error_bound: float

    def __float__(self):
        return float(self.value)


def _composite_gauss(a, b, k, n_panels):
    edges = np.linspace(a, b, n_panels + 1)
    half = (edges[1:] - edges[:-1]) / 2
    mid = (edges[1:] + edges[:-1]) / 2
    u = mid[:, None] + half[:, None] * _nodes[None, :]
    terms = (_weights[None, :] * half[:, None]) * np.exp(u) / u ** k

    return math.fsum(terms.ravel())


def _check_arguments(x, k):
    if not x >= 2:
        raise DomainError(f'Li_k(x) is defined for x >= 2, not x={x}')
    if int(k) != k or k < 1:
        raise ValidationError(f'The order k has to be a positive integer, not {k}')


@functools.lru_cache(maxsize=4096)
def _li(x, k, tol, relative):
    if x == 2:
        return LiValue(x, k, 0.0, 0.0)
    a, b = math.log(2), math.log(x)
    n_panels = max(4, math.ceil(b - a))
    previous = _composite_gauss(a, b, k, n_panels)
    best_bound = math.inf
    for _ in range(max_doublings):
        n_panels *= 2
        current = _composite_gauss(a, b, k, n_panels)
        # Rounding of the summed terms sets a floor below which refinement can't go
        noise_floor = 16 * eps * current
        bound = max(abs(current - previous), noise_floor)
        target = tol * current if relative else tol
        best_bound = min(best_bound, bound)
        if bound <= target:
            logger.debug(f'Li_{k}({x:g}) converged with {n_panels} panels, bound {bound:.2e}')
            return LiValue(x, k, current, bound)
        if target < noise_floor and abs(current - previous) <= noise_floor:
            break
        previous = current

    raise PrecisionError(f'Li_{k}({x:g}) could not be computed to tol={tol:g}'
                         f'{" (relative)" if relative else ""}', best_bound)


def li(x, k=1, tol=1e-6, relative=True):
    """Generalized logarithmic integral Li_k(x) with an absolute error bound

    Parameters
    ----------
    x : float
        Upper limit, x >= 2.
    k : int
        Order of the logarithm in the integrand.
    tol : float
        Requested accuracy.
    relative : bool
        If True, tol is relative to the value, otherwise absolute.

    Returns
    -------
    li_value : LiValue
        The value and an absolute error bound, which does not exceed the requested accuracy.
    """
    _check_arguments(x, k)
    if not tol > 0:
        raise ValidationError(f'tol has to be positive, not {tol}')

    return _li(float(x), int(k), float(tol), bool(relative))


def li_value(x, k=1, tol=1e-12):
    """Shortcut returning only the float value (relative tolerance)"""
    return li(x, k, tol, relative=True).value


def ibp_identity_constant(k):
    return -2 / math.log(2) ** k


def ibp_identity_defect(x, k=1, tol=1e-14):
    """Li_k(x) - x / ln^k(x) - k * Li_{k+1}(x)

    Integration by parts makes this exactly -2 / ln^k(2) for every x >= 2, so any deviation
    measures the quadrature error.
    """
    _check_arguments(x, k)
    lower = li(x, k, tol)
    upper = li(x, k + 1, tol)

    return lower.value - x / math.log(x) ** k - k * upper.value


def ibp_defect_bound(x, k=1, tol=1e-14):
    """Combined error bound of the two integrals entering ibp_identity_defect"""
    return li(x, k, tol).error_bound + k * li(x, k + 1, tol).error_bound


def asymptotic_series(x, k=1, terms=3):
    """Leading terms of Li_k(x) ~ x / ln^k(x) * sum_j (k)_j / ln^j(x) with rising factorials (k)_j"""
    log_x = math.log(x)
    total = 0.0
    rising = 1.0
    for j in range(terms):
        total += rising / log_x ** j
        rising *= k + j

    return x / log_x ** k * total


def asymptotic_defect(x, k=1, terms=2, tol=1e-12):
    """|Li_k(x) * ln^k(x) / x - sum of the first terms of the series|, of order ln^-terms(x)"""
    value = li_value(x, k, tol)

    return abs(value * math.log(x) ** k / x - asymptotic_series(x, k, terms) * math.log(x) ** k / x)
