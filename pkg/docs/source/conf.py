# Sphinx configuration of the prime_lab documentation
import os
import sys

# autodoc imports the package from the repository root
sys.path.insert(0, os.path.abspath('../..'))

project = 'prime_lab'
copyright = '2021, The prime_lab developers'
author = 'The prime_lab developers'

release = '0.1'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon'
]

# The docstrings are written in numpydoc-style
napoleon_numpy_docstring = True

templates_path = ['_templates']
exclude_patterns = []

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
