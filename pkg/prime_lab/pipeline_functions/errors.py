# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)
"""


class PrimeLabError(Exception):
    """Base-Class for all errors raised by prime_lab

    Every subclass carries a short machine-readable ``code``, which the command-line
    prints as ``ERROR <code>: <message>``.
    """
    code = 'PRIME_LAB'


class ValidationError(PrimeLabError, ValueError):
    code = 'VALIDATION'


class DomainError(PrimeLabError, ValueError):
    code = 'DOMAIN'


class InadmissiblePatternError(PrimeLabError, ValueError):
    code = 'INADMISSIBLE'

    def __init__(self, pattern, prime):
        self.pattern = pattern
        self.prime = prime
        super().__init__(f'Pattern {pattern} covers every residue class modulo {prime}')


class SieveBudgetError(PrimeLabError):
    code = 'BUDGET'

    def __init__(self, limit, budget):
        self.limit = limit
        self.budget = budget
        super().__init__(f'x={limit} exceeds the sieve budget of {budget}')


class PrecisionError(PrimeLabError, ArithmeticError):
    code = 'PRECISION'

    def __init__(self, message, best_bound):
        self.best_bound = best_bound
        super().__init__(f'{message} (best achieved bound: {best_bound:.3e})')


class DegenerateIntervalError(PrimeLabError, ValueError):
    code = 'DEGENERATE'


class ConfigError(PrimeLabError, ValueError):
    code = 'CONFIG'
