# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)
"""
__version__ = '0.1'
