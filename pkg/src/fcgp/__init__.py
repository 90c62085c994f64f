# src/fcgp/__init__.py
"""
fcgp
====

Exact and approximate solvers for alpha-fixed cardinality graph partitioning: choose exactly `k` vertices
`S` of a graph to maximize or minimize `cov_alpha(S) = (1 - alpha) * m(S) + alpha * m(S, V - S)`.

Modules
-------
- :mod:`fcgp.core`： Graphs, exact rationals, the objective and degree orderings.
- :mod:`fcgp.solvers`： Brute force, branch-and-bound, greedy and the FPT approximation schemes.
- :mod:`fcgp.subexp`： Exact solving through degree prefixes and tree decompositions.
- :mod:`fcgp.generators`： Random, grid, regular and gap instances.
- :mod:`fcgp.cli`： The `fcgp` command and the experiment sweeps.
- :mod:`fcgp.format`： Formatting utilities for run records.

Functions
---------
- :func:`cov_alpha()`： Exact objective value of a vertex set.
- :func:`solve_brute_force()`： Exhaustive oracle.
- :func:`solve_branch_and_bound()`： Exact search with a degree-based bound.
- :func:`fptas_general()`： `(1 -/+ epsilon)`-approximation for any `alpha > 0`.
- :func:`solve_subexponential()`： Exact prefix/tree-decomposition solver for sparse inputs.
- :func:`smart_print()`： A print function that works well with progress bars from `tqdm` and `rich` consoles.
- :func:`set_console_func()`： Set a global console for smart_print function.

Examples
--------

Solve a small instance::

    from fcgp import Graph, Instance, solve_brute_force, fptas_general

    triangle = Graph(3, [(0, 1), (0, 2), (1, 2)])
    instance = Instance(triangle, k=2, alpha="1/2", direction="max")

    exact = solve_brute_force(instance)
    print(exact.vertices, exact.value)  # (0, 1) 3/2

    approx = fptas_general(instance, epsilon="1/4")
    print(approx.branch, approx.value)

From the command line::

    fcgp generate --family grid --rows 4 --cols 4 --out-dir instances
    fcgp solve instances/grid-rows4-cols4.el --k 3 --alpha 1/2 --algo subexp --oracle
    fcgp experiment --suite approx --max-n 12 > approx.csv
"""

from .core import (Graph, Alpha, Instance, Solution, cov_alpha)
from .solvers import (
    solve_brute_force,
    solve_branch_and_bound,
    greedy_extremal_degree,
    fptas_general,
    fptas_topdegree,
    solve_one_third
)
from .subexp import solve_subexponential
from .output import (smart_print, set_console_func)


__author__ = "Zhen Tian"
__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Alpha",
    "Instance",
    "Solution",
    "cov_alpha",
    "solve_brute_force",
    "solve_branch_and_bound",
    "greedy_extremal_degree",
    "fptas_general",
    "fptas_topdegree",
    "solve_one_third",
    "solve_subexponential",
    "smart_print",
    "set_console_func"
]
