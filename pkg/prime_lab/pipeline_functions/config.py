# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)
"""
import dataclasses
import json
import logging
import os
from importlib import resources
from pathlib import Path

from .errors import ConfigError
from .pipeline_utils import parse_integer, resolve_n_jobs

output_formats = ('csv', 'markdown', 'json')

# Environment-variables and the settings they override
env_settings = {'PRIME_LAB_CACHE_DIR': 'cache_dir',
                'PRIME_LAB_THREADS': 'threads',
                'PRIME_LAB_SIEVE_BUDGET': 'sieve_budget',
                'PRIME_LAB_LOG_LEVEL': 'log_level'}


def load_default_settings():
    with resources.open_text('prime_lab.pipeline_resources', 'default_settings.json') as file:
        return json.load(file)


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """All settings of one run, resolved from flags, environment and default_settings.json"""
    sieve_budget: int = 10 ** 9
    segment_size: int = 2 ** 18
    quadrature_tol: float = 1e-6
    quadrature_relative: bool = True
    table_tol: float = 1e-12
    cache_dir: Path = Path('.cache')
    seed: int = 20150612
    output_format: str = 'csv'
    n_jobs: int = -1
    chunk_trials: int = 10000
    singular_tol: float = 1e-6
    max_prime_cutoff: int = 10 ** 8
    riemann_pi: float = 3.14
    skewes_log10: float = 316.1452
    log_level: str = 'WARNING'
    table_xs: dict = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        if self.sieve_budget < 10 ** 3:
            raise ConfigError(f'sieve_budget has to be at least 1000, not {self.sieve_budget}')
        if not self.quadrature_tol > 0:
            raise ConfigError(f'quadrature_tol has to be positive, not {self.quadrature_tol}')
        if not self.table_tol > 0:
            raise ConfigError(f'table_tol has to be positive, not {self.table_tol}')
        if self.segment_size < 1024:
            raise ConfigError(f'segment_size has to be at least 1024, not {self.segment_size}')
        if self.output_format not in output_formats:
            raise ConfigError(f'output_format has to be one of {output_formats}, not {self.output_format}')
        if not self.skewes_log10 > 0:
            raise ConfigError(f'skewes_log10 has to be positive, not {self.skewes_log10}')
        if self.chunk_trials < 1:
            raise ConfigError(f'chunk_trials has to be positive, not {self.chunk_trials}')

    @classmethod
    def from_settings(cls, overrides=None, environ=None):
        """Build a RunConfig

        Parameters
        ----------
        overrides : dict | None
            Settings given explicitly (e.g. by command-line flags), None-values are ignored.
        environ : dict | None
            The environment to read PRIME_LAB_* variables from (defaults to os.environ).

        Returns
        -------
        config : RunConfig
        """
        default_settings = load_default_settings()
        settings = dict(default_settings['settings'])
        settings.update(default_settings['environment'])

        environ = os.environ if environ is None else environ
        for env_name, setting in env_settings.items():
            if environ.get(env_name):
                settings[setting] = environ[env_name]

        for key, value in (overrides or dict()).items():
            if value is not None:
                settings[key] = value

        try:
            return cls(sieve_budget=parse_integer(settings['sieve_budget']),
                       segment_size=parse_integer(settings['segment_size']),
                       quadrature_tol=float(settings['quadrature_tol']),
                       quadrature_relative=bool(settings['quadrature_relative']),
                       table_tol=float(settings['table_tol']),
                       cache_dir=Path(settings['cache_dir']),
                       seed=parse_integer(settings['seed']),
                       output_format=str(settings['output_format']),
                       n_jobs=resolve_n_jobs(settings['threads']),
                       chunk_trials=parse_integer(settings['chunk_trials']),
                       singular_tol=float(settings['singular_tol']),
                       max_prime_cutoff=parse_integer(settings['max_prime_cutoff']),
                       riemann_pi=float(settings['riemann_pi']),
                       skewes_log10=float(settings['skewes_log10']),
                       log_level=str(settings['log_level']).upper(),
                       table_xs={table_id: [parse_integer(x) for x in settings[f'table{table_id}_xs']]
                                 for table_id in (1, 2, 3, 4)})
        except (TypeError, ValueError) as err:
            if isinstance(err, ConfigError):
                raise
            raise ConfigError(f'Invalid setting: {err}')


def set_logging(level='WARNING', log_file=None):
    """Initialize the root-logger with a console-handler (and optionally a file-handler)"""
    logger = logging.getLogger()
    try:
        logger.setLevel(level)
    except (ValueError, TypeError):
        raise ConfigError(f'Unknown log-level {level}')
    formatter = logging.Formatter('%(asctime)s: %(message)s', datefmt='%Y/%m/%d %H:%M:%S')
    # Avoid duplicate handlers when called more than once (e.g. in tests)
    for handler in [h for h in logger.handlers if getattr(h, '_prime_lab', False)]:
        logger.removeHandler(handler)
        handler.close()
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)
    console_handler._prime_lab = True
    logger.addHandler(console_handler)
    if log_file:
        file_handler = logging.FileHandler(log_file, 'w')
        file_handler.setFormatter(formatter)
        file_handler._prime_lab = True
        logger.addHandler(file_handler)

    return logger
