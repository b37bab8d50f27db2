# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)
"""
from prime_lab.basic_functions.sieve import PRIMES, TRIPLETS_046, TWINS, CountRecord, Provenance
from prime_lab.pipeline_functions.cache import (CountCache, decode_line, encode_record, load_reference_counts,
                                                reference_count)


def test_encode_decode():
    line = encode_record(CountRecord(10 ** 6, TWINS, 8169))
    assert line.startswith('1000000\t0,2\t8169\t')
    assert decode_line(line) == (10 ** 6, (0, 2), 8169)


def test_put_and_reload(count_cache, cache_dir):
    count_cache.put(CountRecord(10 ** 6, TWINS, 8169))
    count_cache.put(CountRecord(10 ** 6, TWINS, 8169))
    count_cache.put(CountRecord(10 ** 6, TRIPLETS_046, 1444))
    assert len(count_cache.cache_path.read_text().splitlines()) == 2
    reloaded = CountCache(cache_dir)
    assert reloaded.get(10 ** 6, '0,2') == 8169
    assert reloaded.get(10 ** 6, TRIPLETS_046) == 1444
    assert reloaded.get(10 ** 5, TWINS) is None
    assert len(reloaded) == 2


def test_corrupted_lines_are_skipped(count_cache, cache_dir, caplog):
    count_cache.put(CountRecord(10 ** 5, PRIMES, 9592))
    count_cache.put(CountRecord(10 ** 6, PRIMES, 78498))
    lines = count_cache.cache_path.read_text().splitlines()
    # Flip the count of the second line, keeping its checksum
    fields = lines[1].split('\t')
    fields[2] = '78499'
    lines[1] = '\t'.join(fields)
    count_cache.cache_path.write_text('\n'.join(lines + ['garbage']) + '\n')
    reloaded = CountCache(cache_dir)
    assert reloaded.get(10 ** 5, PRIMES) == 9592
    assert reloaded.get(10 ** 6, PRIMES) is None
    assert 'Ignoring corrupted line 2' in caplog.text


def test_missing_cache_file(tmp_path):
    cache = CountCache(tmp_path / 'nothing')
    assert len(cache) == 0
    assert not (tmp_path / 'nothing').exists()


def test_reference_counts():
    assert len(load_reference_counts()) == 10
    record = reference_count(10 ** 12, PRIMES)
    assert record.count == 37607912018
    assert record.provenance == Provenance.reference
    assert reference_count(10 ** 12, TWINS) is None
