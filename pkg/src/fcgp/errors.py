# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
from typing import Optional


class FcgpError(Exception):
    r"""
    Base class of every error raised by :mod:`fcgp`.
    """


class InputError(FcgpError, ValueError):
    r"""
    Malformed input: graphs, vertex sets, cardinalities, decompositions or generator parameters.
    """


class EdgeListParseError(InputError):
    r"""
    An edge-list file could not be parsed.

    Attributes
    ----------
        line_no : int
            The 1-based number of the offending line (`0` when the file as a whole is at fault).

        line : Optional[str]
            The offending line, if any.
    """
    def __init__(self, message: str, line_no: int = 0, line: Optional[str] = None):
        self.line_no = line_no
        self.line = line
        if line_no > 0:
            message = f"Line {line_no}: {message} ({line!r})"
        super().__init__(message)


class UnsupportedParameterError(FcgpError, ValueError):
    r"""
    A parameter lies outside the range in which an algorithm is defined or guaranteed.
    """


class ResourceLimitError(FcgpError, RuntimeError):
    r"""
    A configured enumeration or rejection budget would be exceeded.
    """


class GateExhaustedError(FcgpError, RuntimeError):
    r"""
    Every degree prefix was rejected by the subexponential width gate.
    """
