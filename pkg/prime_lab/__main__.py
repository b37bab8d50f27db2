# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)
"""
import sys
from inspect import getsourcefile
from os.path import abspath
from pathlib import Path

# Enable start also when not installed via pip (e.g. for development)
package_parent = str(Path(abspath(getsourcefile(lambda: 0))).parent.parent)
if package_parent not in sys.path:
    sys.path.insert(0, package_parent)

from prime_lab.pipeline_functions.cli import run


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
