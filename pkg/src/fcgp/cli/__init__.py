# src/fcgp/cli/__init__.py
"""
Command-line front end.

Functions
---------
- :func:`main()`: The `fcgp` console script (`solve`, `generate`, `experiment`, `decompose`).
- :func:`run_experiment()`: Run an acceptance sweep programmatically.
- :func:`write_csv()` / :func:`write_json()`: Serialize run records.
- :func:`ratio_of()`: Solution quality against an optimum, `1` meaning optimal.

Classes
-------
- :class:`RunRecord`: One result row with exact rationals.
- :class:`ExperimentConfig`: Parameters of a sweep.
- :class:`ExperimentReport`: Records and violation count of a sweep.
"""

from ._records import (FIELDS, RunRecord, ratio_of, write_csv, write_json)
from ._experiments import (SUITES, ExperimentConfig, ExperimentReport, run_experiment)
from ._main import (build_parser, main)

__all__ = [
    "FIELDS",
    "RunRecord",
    "ratio_of",
    "write_csv",
    "write_json",
    "SUITES",
    "ExperimentConfig",
    "ExperimentReport",
    "run_experiment",
    "build_parser",
    "main"
]
