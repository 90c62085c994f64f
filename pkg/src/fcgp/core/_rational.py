# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import (Any, Tuple, Union)

from ..errors import InputError


RationalLike = Union[Fraction, int, str]


def parse_rational(text: Any, name: str = "value") -> Fraction:
    r"""
    Parse an exact rational from `"a/b"`, an integer or a finite decimal string.

    Raises
    -------
        InputError
            If :param:`text` is not an exact rational (floats are rejected).
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool) or isinstance(text, float):
        raise InputError(f"Argument '{name}' Must Be An Exact Rational, Got {text!r}.")
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"Argument '{name}' Must Be A Rational Like 'a/b', Got {text!r}.")


def format_rational(value: Fraction) -> str:
    r"""
    Serialize an exact rational as `"p/q"` (the denominator is always written).
    """
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Alpha():
    r"""
    The edge-weight parameter `0 <= alpha <= 1`, stored as a reduced fraction.

    Internal edges weigh `1 - alpha` and boundary edges weigh `alpha`.
    """
    numerator: int
    denominator: int = 1

    def __post_init__(self):
        p, q = self.numerator, self.denominator
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (p, q)):
            raise InputError(f"Alpha Must Have Integer Parts, Got {p!r}/{q!r}.")
        if q <= 0:
            raise InputError(f"Alpha Denominator Must Be Positive, Got {q}.")
        if not 0 <= p <= q:
            raise InputError(f"Alpha Must Satisfy 0 <= alpha <= 1, Got {p}/{q}.")
        g = gcd(p, q)
        object.__setattr__(self, "numerator", p // g)
        object.__setattr__(self, "denominator", q // g)

    @classmethod
    def parse(cls, text: Any) -> Alpha:
        r"""
        Parse `"a/b"`, `"a"` or a finite decimal such as `"0.25"`.
        """
        return cls.from_value(parse_rational(text, "alpha"))

    @classmethod
    def from_value(cls, value: Union[Alpha, RationalLike]) -> Alpha:
        if isinstance(value, Alpha):
            return value
        fraction = parse_rational(value, "alpha")
        return cls(fraction.numerator, fraction.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def scaled_weights(self) -> Tuple[int, int, int]:
        r"""
        Integer edge weights scaled by the denominator `q`.

        Returns
        -------
            Tuple[int, int, int]
                `(q - p, p, q)`: the weight of an internal edge, of a boundary edge, and the scale.
        """
        return self.denominator - self.numerator, self.numerator, self.denominator

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"
