# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)
"""
import pytest


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help='Run the slow tests (sieving up to 1e9)')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: long-running test, only run with --runslow')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)
