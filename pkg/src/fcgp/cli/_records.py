# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
import csv
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import (Any, Dict, Iterable, List, Optional, TextIO, Tuple)

from ..core import (Instance, Solution, format_rational)
from ..types import Direction


CSV_VERSION = "# fcgp-csv v1"
RATIO_NOTE = "# ratio: max = value/oracle, min = oracle/value; 1 means optimal"

FIELDS = (
    "instance",
    "algorithm",
    "k",
    "alpha",
    "epsilon",
    "direction",
    "value",
    "vertices",
    "wall_ms",
    "provenance",
    "oracle",
    "ratio",
    "accepted",
)


def ratio_of(value: Fraction, oracle: Fraction, direction: Direction) -> Fraction:
    r"""
    Quality of :param:`value` against the optimum :param:`oracle`, at most `1` for both directions.

    Max uses `value / oracle` and Min `oracle / value`; two zero values give `1`, and a positive Min value
    against a zero optimum gives `0`.
    """
    top, bottom = (value, oracle) if direction == "max" else (oracle, value)
    if bottom == 0:
        return Fraction(1) if top == 0 else Fraction(0)
    return Fraction(top) / Fraction(bottom)


@dataclass(frozen=True)
class RunRecord():
    r"""
    One result row. Rationals are kept exact and written as `"p/q"`.

    Attributes
    ----------
        instance : str
            Instance descriptor: a file path or `family(params)#seed`.

        algorithm : str
            The command-line algorithm name or the experiment suite.

        k : Optional[int]
            The cardinality.

        alpha : Optional[Fraction]
            The edge-weight parameter.

        epsilon : Optional[Fraction]
            Accuracy parameter of the approximation schemes.

        direction : Optional[Direction]
            `"max"` or `"min"`.

        value : Optional[Fraction]
            Objective value of :attr:`vertices`.

        vertices : Tuple[int, ...]
            The returned k-subset.

        wall_ms : Optional[float]
            Solver wall time in milliseconds.

        provenance : str
            Algorithm and branch tag, or a free-form note for summary rows.

        oracle : Optional[Fraction]
            Reference optimum, when computed.

        ratio : Optional[Fraction]
            :func:`ratio_of()` the value against :attr:`oracle`.

        accepted : Optional[bool]
            Decision verdict against the threshold `p`, when one is given.
    """
    instance: str
    algorithm: str
    k: Optional[int] = None
    alpha: Optional[Fraction] = None
    epsilon: Optional[Fraction] = None
    direction: Optional[Direction] = None
    value: Optional[Fraction] = None
    vertices: Tuple[int, ...] = ()
    wall_ms: Optional[float] = None
    provenance: str = ""
    oracle: Optional[Fraction] = None
    ratio: Optional[Fraction] = None
    accepted: Optional[bool] = None

    @classmethod
    def from_solution(
        cls,
        descriptor: str,
        algorithm: str,
        instance: Instance,
        solution: Solution,
        epsilon: Optional[Fraction] = None,
        wall_ms: Optional[float] = None,
        oracle: Optional[Fraction] = None
    ) -> RunRecord:
        ratio = None if oracle is None else ratio_of(solution.value, oracle, instance.direction)
        return cls(
            instance=descriptor,
            algorithm=algorithm,
            k=instance.k,
            alpha=instance.alpha.value,
            epsilon=epsilon,
            direction=instance.direction,
            value=solution.value,
            vertices=solution.vertices,
            wall_ms=wall_ms,
            provenance=solution.provenance,
            oracle=oracle,
            ratio=ratio,
            accepted=instance.accepts(solution.value)
        )

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        r"""
        JSON-ready mapping in :data:`FIELDS` order; `wall_ms` is `None` unless :param:`timing` is set.
        """
        result: Dict[str, Any] = {}
        for name in FIELDS:
            val = getattr(self, name)
            if isinstance(val, Fraction):
                val = format_rational(val)
            elif name == "vertices":
                val = list(val)
            elif name == "wall_ms":
                val = None if not timing or val is None else round(val, 3)
            result[name] = val
        return result

    def to_row(self, timing: bool = False) -> List[str]:
        r"""
        CSV cells in :data:`FIELDS` order; vertices are space separated and missing values are empty.
        """
        row = []
        for name, val in self.to_dict(timing).items():
            if val is None:
                row.append("")
            elif name == "vertices":
                row.append(" ".join(map(str, val)))
            elif isinstance(val, bool):
                row.append("true" if val else "false")
            else:
                row.append(str(val))
        return row


def write_csv(records: Iterable[RunRecord], stream: TextIO, timing: bool = False):
    r"""
    Write the version line, the ratio note, the header and one row per record, with LF line endings.
    """
    stream.write(CSV_VERSION + "\n")
    stream.write(RATIO_NOTE + "\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(FIELDS)
    for record in records:
        writer.writerow(record.to_row(timing))


def write_json(records: Iterable[RunRecord], stream: TextIO, timing: bool = False):
    r"""
    Write a single record as one JSON object, several as a JSON array.
    """
    payload = [record.to_dict(timing) for record in records]
    json.dump(payload[0] if len(payload) == 1 else payload, stream, indent=2)
    stream.write("\n")
