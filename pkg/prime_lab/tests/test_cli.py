# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)
"""
import io
import json

import pandas as pd
import pytest

from prime_lab import __version__
from prime_lab.pipeline_functions.cli import run


def run_csv(capsys, argv):
    status = run(argv)
    out = capsys.readouterr().out
    assert status == 0

    return pd.read_csv(io.StringIO(out), comment='#')


@pytest.fixture(autouse=True)
def single_thread(cache_dir, monkeypatch):
    monkeypatch.setenv('PRIME_LAB_THREADS', '1')


def test_count(capsys):
    frame = run_csv(capsys, ['count', '--x', '10'])
    assert frame.loc[0, 'count'] == 4
    assert frame.loc[0, 'provenance'] == 'sieved'
    frame = run_csv(capsys, ['count', '--x', '1e6', '--pattern', '0,2'])
    assert frame.loc[0, 'count'] == 8169


def test_count_from_cache(capsys):
    run_csv(capsys, ['count', '--x', '1e5'])
    frame = run_csv(capsys, ['count', '--x', '1e5'])
    assert frame.loc[0, 'count'] == 9592
    assert frame.loc[0, 'provenance'] == 'cached'


def test_li(capsys):
    frame = run_csv(capsys, ['li', '--x', '2', '--k', '3'])
    assert frame.loc[0, 'value'] == 0
    frame = run_csv(capsys, ['li', '--x', '1e6'])
    assert frame.loc[0, 'value'] == pytest.approx(78626.504, abs=1e-3)


def test_constant(capsys):
    frame = run_csv(capsys, ['constant', '--pattern', '0,2'])
    assert frame.loc[0, 'value'] == pytest.approx(1.3203236, abs=1e-6)
    frame = run_csv(capsys, ['constant', '--pattern', '0,2', '--cutoff', '1000'])
    assert frame.loc[0, 'prime_cutoff'] == 1000


def test_stats(capsys):
    frame = run_csv(capsys, ['stats', '--model', '1', '--x', '1e8'])
    assert frame.loc[0, 'whole_sigma'] == 2330
    frame = run_csv(capsys, ['stats', '--model', 'tuple', '--x', '1e6', '--pattern', '0,2'])
    assert frame.loc[0, 'whole_sigma'] == 90


def test_density(capsys):
    frame = run_csv(capsys, ['density', '--kind', 'gap_Z', '--x', '1e6', '--grid', '12:13:11'])
    assert list(frame.columns) == ['t', 'pdf', 'cdf']
    assert len(frame) == 11
    frame = run_csv(capsys, ['density', '--kind', 'tuple_gap_H', '--x', '1e6', '--pattern', '0,2',
                             '--steps', '51'])
    assert len(frame) == 51


def test_density_of_prime_count(capsys):
    frame = run_csv(capsys, ['density', '--kind', 'count', '--x', '1e6'])
    assert frame['cdf'].iloc[-1] == 1
    frame = run_csv(capsys, ['density', '--kind', 'count', '--x', '1e6', '--skewes-log10', '5'])
    assert len(frame) == 201
    assert frame.loc[100, 'cdf'] == pytest.approx(0.5, abs=1e-9)


def test_table(capsys):
    frame = run_csv(capsys, ['table', '--id', '1', '--xs', '1e8', '--sieve-budget', '1e7'])
    assert frame.loc[0, 'pi'] == 5761455
    assert frame.loc[0, 'li_minus_pi'] == 754
    assert frame.loc[0, 'riemann_bound'] == 7333


def test_table_markdown_with_comparison(capsys):
    assert run(['--format', 'markdown', 'table', '--id', '3', '--xs', '1e5', '--compare']) == 0
    out = capsys.readouterr().out
    assert out.startswith('### T3')
    assert 'published' in out
    assert 'printed m_h 80.064 differs from the recomputed' in out


def test_global_flags_after_command(capsys):
    assert run(['stats', '--model', '2', '--x', '1e8', '--format', 'json']) == 0
    records = json.loads(capsys.readouterr().out)
    assert records[0]['whole_sigma'] == 2329


def test_output_file(tmp_path, capsys):
    target = tmp_path / 'count.csv'
    assert run(['count', '--x', '100', '--output', str(target)]) == 0
    assert capsys.readouterr().out == ''
    assert pd.read_csv(target).loc[0, 'count'] == 25


def test_simulation_byte_identical(capsys):
    argv = ['simulate', '--mode', 'without', '--M', '1e4', '--n', '100', '--trials', '20000', '--seed', '5']
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv + ['--threads', '2']) == 0
    assert capsys.readouterr().out == first
    frame = pd.read_csv(io.StringIO(first))
    assert frame['frequency'].sum() == 20000


def test_usage_errors(capsys):
    assert run(['count', '--x', '10', '--unknown']) == 2
    assert run([]) == 2
    assert run(['count', '--x', 'ten']) == 2
    capsys.readouterr()
    assert run(['--version']) == 0
    assert __version__ in capsys.readouterr().out


@pytest.mark.parametrize('argv, code', [(['li', '--x', '1'], 'DOMAIN'),
                                        (['constant', '--pattern', '0,2,4'], 'INADMISSIBLE'),
                                        (['count', '--x', '1e8', '--sieve-budget', '1e6'], 'BUDGET'),
                                        (['li', '--x', '1e6', '--tol', '1e-18'], 'PRECISION'),
                                        (['simulate', '--mode', 'without', '--M', '3', '--M1', '1', '--n', '5',
                                          '--trials', '10'], 'VALIDATION'),
                                        (['density', '--kind', 'count', '--x', '1e400'], 'DOMAIN'),
                                        (['density', '--kind', 'gap_Z', '--x', '1e4', '--grid', '5:1:3'],
                                         'VALIDATION')])
def test_errors(capsys, argv, code):
    assert run(argv) == 1
    captured = capsys.readouterr()
    assert captured.err.startswith(f'ERROR {code}: ')
    assert captured.out == ''


def test_config_error(capsys, monkeypatch):
    monkeypatch.setenv('PRIME_LAB_SIEVE_BUDGET', '10')
    assert run(['count', '--x', '10']) == 1
    assert capsys.readouterr().err.startswith('ERROR CONFIG: ')
