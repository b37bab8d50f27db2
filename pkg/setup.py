# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)
"""
from setuptools import find_packages, setup

with open('README.md', 'r', encoding='utf-8') as fh:
    long_description = fh.read()

setup(name='prime_lab',
      version='0.1',
      description='Probabilistic models of the distribution of primes and prime k-tuples, '
                  'checked against exact sieve counts',
      long_description=long_description,
      long_description_content_type='text/markdown',
      python_requires='>=3.8',
      install_requires=['numpy',
                        'scipy',
                        'pandas>=1.5',
                        'tabulate',
                        'joblib'],
      extras_require={'tests': ['pytest']},
      license='BSD (3-clause)',
      packages=find_packages(exclude=['docs', 'examples']),
      package_data={'prime_lab': ['pipeline_resources/*.json', 'pipeline_resources/*.csv']},
      classifiers=["Programming Language :: Python :: 3",
                   "License :: OSI Approved :: BSD License",
                   "Operating System :: OS Independent",
                   "Intended Audience :: Science/Research",
                   'Topic :: Scientific/Engineering :: Mathematics'],
      include_package_data=True,
      entry_points={
          'console_scripts': [
              'prime_lab = prime_lab.__main__:main'
          ]
      }

      )
