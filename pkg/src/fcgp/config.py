# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
import os
import math
import dataclasses
from dataclasses import dataclass
from typing import (Any, Optional)


THREADS_ENV = "FCGP_THREADS"


def _default_workers() -> int:
    r"""
    Worker count from `FCGP_THREADS`, else the available parallelism.
    """
    raw = os.environ.get(THREADS_ENV, "").strip()
    if raw:
        try:
            value = int(raw)
        except ValueError:
            value = 0
        if value > 0:
            return value
    return os.cpu_count() or 1


@dataclass(frozen=True)
class Settings():
    r"""
    Process-wide solver settings.

    Attributes
    ----------
        brute_force_budget : int, default to `10**8`
            Maximum number of k-subsets :func:`solve_brute_force()` may enumerate.

        workers : int
            Worker processes for parallel enumeration and experiment sweeps.
            Taken from the `FCGP_THREADS` environment variable when set, otherwise the available parallelism.

        regular_attempts : int, default to `10_000`
            Rejection budget of the pairing model in :func:`gen_regular()`.

        dominating_factor : int, default to `2`
            A degree prefix passes the domination gate when it has a dominating set of size at most `dominating_factor * k`.

        domination_search_limit : int, default to `10**6`
            Node cap of the exact dominating-set branching.
    """
    brute_force_budget: int = 10 ** 8
    workers: int = dataclasses.field(default_factory=_default_workers)
    regular_attempts: int = 10_000
    dominating_factor: int = 2
    domination_search_limit: int = 10 ** 6

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"Setting '{field.name}' Must Be A Positive Integer, Got {value!r}.")


_GLOBAL_SETTINGS: Optional[Settings] = None


def get_settings() -> Settings:
    r"""
    Get the global settings, creating the defaults on first use.
    """
    global _GLOBAL_SETTINGS
    if _GLOBAL_SETTINGS is None:
        _GLOBAL_SETTINGS = Settings()
    return _GLOBAL_SETTINGS


def set_settings(**changes: Any) -> Settings:
    r"""
    Replace some of the global settings.

    Parameters
    ----------
        **changes : Any
            Setting names and their new values. See :class:`Settings` for the available names.

    Returns
    -------
        Settings
            The new global settings.

    Raises
    -------
        ValueError
            If a name is unknown or a value is not a positive integer.
    """
    global _GLOBAL_SETTINGS
    known = {field.name for field in dataclasses.fields(Settings)}
    unknown = set(changes) - known
    if unknown:
        raise ValueError(f"Unknown Setting(s): {sorted(unknown)}. Valid Settings: {sorted(known)}")
    _GLOBAL_SETTINGS = dataclasses.replace(get_settings(), **changes)
    return _GLOBAL_SETTINGS


def reset_settings() -> Settings:
    r"""
    Restore the default settings, re-reading `FCGP_THREADS`.
    """
    global _GLOBAL_SETTINGS
    _GLOBAL_SETTINGS = Settings()
    return _GLOBAL_SETTINGS


def default_width_budget(k: int) -> int:
    r"""
    Default tree-decomposition width budget for cardinality :param:`k`: `max(ceil(3 * sqrt(k)), 4)`.
    """
    # smallest w with w * w >= 9k
    root = math.isqrt(9 * k)
    if root * root < 9 * k:
        root += 1
    return max(root, 4)
