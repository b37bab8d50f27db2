# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)
"""
import pytest

from prime_lab.pipeline_functions.cache import CountCache
from prime_lab.pipeline_functions.config import RunConfig


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv('PRIME_LAB_CACHE_DIR', str(tmp_path / 'cache'))
    return tmp_path / 'cache'


@pytest.fixture
def count_cache(cache_dir):
    return CountCache(cache_dir)


@pytest.fixture
def run_config(cache_dir):
    """Single-threaded config with the default budget and a temporary cache"""
    return RunConfig.from_settings({'threads': 1, 'cache_dir': str(cache_dir)}, environ={})


@pytest.fixture
def small_budget_config(cache_dir):
    """Config whose sieve budget forces the reference counts beyond 1e7"""
    return RunConfig.from_settings({'threads': 1, 'cache_dir': str(cache_dir), 'sieve_budget': 10 ** 7},
                                   environ={})
