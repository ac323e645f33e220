"""Oscillating tableaux and the random walk traced by their areas.

Submodules:

* ``partitions``: Young diagrams, corners, hook-length counts
* ``tableaux``: enumeration, counting and uniform sampling of oscillating tableaux
* ``walk``: the area walk, its weight families and exact distribution propagation
* ``moments``: exact moments, mixed moments, covariance and volume statistics
* ``continuum``: large-N limits, the covariance kernel and the second-variation operator
* ``stats``: Monte Carlo campaigns and normality checks
"""

from .partitions import Corner, Partition, addable_corners, apply_corner, removable_corners, syt_count
from .tableaux import (
    OscillatingTableau,
    area_sequence,
    count_formula,
    enumerate_all,
    sample_uniform,
    validate,
)
from .walk import PowerK, QDeformed, STANDARD, WalkConfig, evolve_distribution, simulate, step_probability, volume

__version__ = "0.1.0"
