# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)
"""
import dataclasses
import json
from decimal import Decimal, InvalidOperation
from enum import Enum
from pathlib import Path

import numpy as np

from .errors import ValidationError


class TypedJSONEncoder(json.JSONEncoder):
    """Encode numpy-types, dataclasses and enums, which the json-module does not know"""

    def default(self, obj):
        if isinstance(obj, np.integer):
            return int(obj)
        elif isinstance(obj, np.floating):
            return float(obj)
        elif isinstance(obj, np.ndarray):
            return obj.tolist()
        elif isinstance(obj, Enum):
            return obj.value
        elif isinstance(obj, Path):
            return str(obj)
        elif dataclasses.is_dataclass(obj):
            return dataclasses.asdict(obj)
        else:
            return json.JSONEncoder.default(self, obj)


def parse_integer(text):
    """Parse an integer which may be given in scientific notation ("1e8" -> 100000000)

    Parameters
    ----------
    text : str | int
        The value to parse.

    Returns
    -------
    value : int
        The exact integer value.
    """
    if isinstance(text, (int, np.integer)):
        return int(text)
    try:
        value = Decimal(str(text).strip().replace('_', ''))
    except InvalidOperation:
        raise ValidationError(f'{text!r} is not a number')
    if not value.is_finite() or value != value.to_integral_value():
        raise ValidationError(f'{text!r} is not an integer')

    return int(value)


def parse_integer_list(text):
    return [parse_integer(item) for item in str(text).split(',') if item.strip()]


def parse_offsets(text):
    """Parse a comma-joined offset list like "0,4,6" """
    try:
        return tuple(int(item) for item in str(text).split(',') if item.strip())
    except ValueError:
        raise ValidationError(f'{text!r} is not a comma-separated list of integers')


def parse_grid(text):
    """Parse a grid given as lo:hi:steps"""
    parts = str(text).split(':')
    if len(parts) != 3:
        raise ValidationError(f'Grid {text!r} has to be given as lo:hi:steps')
    try:
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ValidationError(f'Grid {text!r} has to be given as lo:hi:steps')
    if not lo < hi or steps < 2:
        raise ValidationError(f'Grid {text!r} needs lo < hi and at least 2 steps')

    return lo, hi, steps


def resolve_n_jobs(threads):
    """Map the thread-setting (0 = auto) to a joblib n_jobs value"""
    threads = int(threads)
    if threads == 0:
        return -1

    return threads
