# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
from fractions import Fraction
from typing import (Any, Callable, Dict, Mapping, Optional, Tuple)

from ._gap import (GapInstanceSpec, gen_gap_instance)
from ._random import (gen_grid, gen_random_gnm, gen_regular)
from ..core import (Graph, format_rational)
from ..errors import InputError
from ..types import FamilyName


def _gap(params: Mapping[str, Any], seed: Optional[int]) -> Graph:
    return gen_gap_instance(GapInstanceSpec(params["k"], params["N"], params["mu"])).graph


def _gnm(params: Mapping[str, Any], seed: Optional[int]) -> Graph:
    return gen_random_gnm(params["n"], params["m"], seed)


def _grid(params: Mapping[str, Any], seed: Optional[int]) -> Graph:
    return gen_grid(params["rows"], params["cols"])


def _regular(params: Mapping[str, Any], seed: Optional[int]) -> Graph:
    return gen_regular(params["n"], params["d"], seed)


# family -> (builder, required parameters)
FAMILIES: Dict[str, Tuple[Callable[[Mapping[str, Any], Optional[int]], Graph], Tuple[str, ...]]] = {
    "gap": (_gap, ("k", "N", "mu")),
    "gnm": (_gnm, ("n", "m")),
    "grid": (_grid, ("rows", "cols")),
    "regular": (_regular, ("n", "d")),
}


def _plain(value: Any) -> Any:
    return format_rational(value) if isinstance(value, Fraction) else value


def generate(family: FamilyName, params: Mapping[str, Any], seed: Optional[int] = None) -> Tuple[Graph, Dict[str, Any]]:
    r"""
    Build a graph of a named family.

    Parameters
    ----------
        family : FamilyName
            `"gap"` (`k`, `N`, `mu`), `"gnm"` (`n`, `m`), `"grid"` (`rows`, `cols`) or `"regular"` (`n`, `d`).

        params : Mapping[str, Any]
            The family parameters. Extra keys are rejected.

        seed : Optional[int], default to `None`
            Random seed; ignored by the deterministic families.

    Returns
    -------
        Tuple[Graph, Dict[str, Any]]
            The graph and its metadata `{family, params, seed, n, m}`, with rationals written as `"p/q"`.

    Raises
    -------
        InputError
            On an unknown family, missing or extra parameters, or invalid values.
    """
    if family not in FAMILIES:
        raise InputError(f"Unknown Family: {family!r}. Valid Families: {tuple(FAMILIES)}")
    builder, required = FAMILIES[family]
    missing = [name for name in required if params.get(name) is None]
    extra = sorted(set(params) - set(required))
    if missing or extra:
        raise InputError(
            f"Family {family!r} Takes Parameters {required}, Missing {missing}, Unexpected {extra}."
        )
    graph = builder(params, seed)
    metadata = {
        "family": family,
        "params": {name: _plain(params[name]) for name in required},
        "seed": seed,
        "n": graph.n,
        "m": graph.m,
    }
    return graph, metadata
