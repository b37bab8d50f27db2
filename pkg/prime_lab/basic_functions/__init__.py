# -*- coding: utf-8 -*-
# Numerical building blocks: exact counts, logarithmic integrals, singular series,
# the probabilistic models, the derived densities and the urn simulations
from . import sieve
from . import logint
from . import singular
from . import models
from . import densities
from . import montecarlo
