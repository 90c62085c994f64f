# src/fcgp/generators/__init__.py
"""
Instance factories for tests and experiments.

Functions
---------
- :func:`gen_random_gnm()`: Uniform random graph with a fixed number of edges.
- :func:`gen_grid()`: Row-major grid graph.
- :func:`gen_regular()`: Random regular graph from the pairing model.
- :func:`gen_gap_instance()`: The hub/clique instance that defeats top-degree candidate sets for `alpha < 1/3`.
- :func:`gap_report()`: Closed-form values and ratio of a gap instance.
- :func:`generate()`: Build a graph by family name, with JSON-ready metadata.

Classes
-------
- :class:`GapInstanceSpec`: Parameters `(k, N, mu)` of a gap instance.
- :class:`GapReport`: The result of :func:`gap_report()`.
"""

from ._random import (gen_random_gnm, gen_grid, gen_regular)
from ._gap import (GapInstanceSpec, GapReport, gen_gap_instance, gap_report)
from ._family import (FAMILIES, generate)

__all__ = [
    "gen_random_gnm",
    "gen_grid",
    "gen_regular",
    "GapInstanceSpec",
    "GapReport",
    "gen_gap_instance",
    "gap_report",
    "FAMILIES",
    "generate"
]
