# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)
"""
import logging
import os
import threading
import zlib
from importlib import resources
from pathlib import Path

import pandas as pd

from .decorators import small_func
from ..basic_functions.sieve import CountRecord, Provenance, as_pattern

logger = logging.getLogger(__name__)

cache_file_name = 'counts.cache'


def line_checksum(fields):
    return zlib.crc32('\t'.join(fields).encode('ascii'))


def encode_record(record):
    fields = [str(record.limit), str(record.pattern), str(record.count)]
    return '\t'.join(fields + [str(line_checksum(fields))]) + '\n'


def decode_line(line):
    """Return (limit, offsets, count) of a cache-line or None if the line is corrupted"""
    fields = line.rstrip('\n').split('\t')
    if len(fields) != 4:
        return None
    try:
        if int(fields[3]) != line_checksum(fields[:3]):
            return None
        offsets = tuple(int(o) for o in fields[1].split(','))
        return int(fields[0]), offsets, int(fields[2])
    except ValueError:
        return None


class CountCache:
    """Append-only text-cache for expensive exact counts

    Each line holds ``limit<TAB>offsets<TAB>count<TAB>crc32`` where the checksum covers the
    three preceding fields. Corrupted lines are skipped (and the count is recomputed).
    """

    def __init__(self, cache_dir=None):
        if cache_dir is None:
            cache_dir = os.environ.get('PRIME_LAB_CACHE_DIR') or '.cache'
        self.cache_dir = Path(cache_dir)
        self.cache_path = self.cache_dir / cache_file_name
        # Single writer for the cache-file
        self._lock = threading.Lock()
        self._counts = dict()
        self.load()

    def load(self):
        self._counts = dict()
        try:
            with open(self.cache_path, 'r', encoding='ascii', errors='replace') as file:
                for line_nr, line in enumerate(file, 1):
                    decoded = decode_line(line)
                    if decoded is None:
                        logger.warning(f'Ignoring corrupted line {line_nr} in {self.cache_path}')
                        continue
                    limit, offsets, count = decoded
                    self._counts[(limit, offsets)] = count
        except FileNotFoundError:
            pass

    def get(self, limit, pattern):
        return self._counts.get((int(limit), as_pattern(pattern).offsets))

    def put(self, record):
        key = (record.limit, record.pattern.offsets)
        if self._counts.get(key) == record.count:
            return
        with self._lock:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            with open(self.cache_path, 'a', encoding='ascii', newline='\n') as file:
                file.write(encode_record(record))
            self._counts[key] = record.count
        logger.debug(f'Cached count {record.count} for pattern {record.pattern} up to {record.limit}')

    def __contains__(self, key):
        limit, pattern = key
        return self.get(limit, pattern) is not None

    def __len__(self):
        return len(self._counts)


def load_reference_counts():
    """Published exact counts beyond the default sieve-budget"""
    with resources.path('prime_lab.pipeline_resources', 'reference_counts.csv') as ref_path:
        return pd.read_csv(str(ref_path), sep=';', dtype={'pattern': str, 'limit': 'int64', 'count': 'int64'})


@small_func
def reference_count(limit, pattern):
    """Look up a published count, returns a CountRecord or None"""
    pattern = as_pattern(pattern)
    ref = load_reference_counts()
    match = ref[(ref['pattern'] == str(pattern)) & (ref['limit'] == int(limit))]
    if match.empty:
        return None

    return CountRecord(int(limit), pattern, int(match['count'].iloc[0]), Provenance.reference)
