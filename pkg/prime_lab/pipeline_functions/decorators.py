# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)
"""
import functools
import logging
import time


def timed(func):
    """Log start and elapsed wall-time of an expensive computation"""
    logger = logging.getLogger(func.__module__)

    @functools.wraps(func)
    def wrapper_timed(*args, **kwargs):
        logger.info('-' * 60)
        logger.info(f'{func.__name__} started')
        start = time.perf_counter()
        result = func(*args, **kwargs)
        logger.info(f'{func.__name__} finished in {time.perf_counter() - start:.3f} s')
        return result

    return wrapper_timed


def small_func(func):
    """Only leave a debug-trace for cheap helpers, which are called very often"""
    logger = logging.getLogger(func.__module__)

    @functools.wraps(func)
    def wrapper_small_func(*args, **kwargs):
        logger.debug(f'_______{func.__name__}_______')
        return func(*args, **kwargs)

    return wrapper_small_func
