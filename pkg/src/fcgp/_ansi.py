# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
from typing import (Iterable, Optional)


# code of colors
_COLOR_CODE = {
    "r": "1",  # red
    "g": "2",  # green
    "y": "3",  # yellow
    "c": "6",  # cyan
}
# code of styles
_STYLE_CODE = {
    "bold": "1",
    "dim": "2",
    "italic": "3",
    "selected": "7",
}


class Style():
    r"""
    A preset ANSI color/style combination, applied by calling it on any object.
    """
    def __init__(self, fg: Optional[str] = None, styles: Iterable[str] = ()):
        unknown = set(styles) - set(_STYLE_CODE)
        if unknown:
            raise ValueError(f"Unknown Style Name(s): {sorted(unknown)}. Valid Names: {sorted(_STYLE_CODE)}.")
        codes = [_STYLE_CODE[s] for s in sorted(styles)]
        if fg is not None:
            if fg not in _COLOR_CODE:
                raise ValueError(f"Unknown Color Name: {fg!r}. Valid Names: {sorted(_COLOR_CODE)}.")
            codes.append("3" + _COLOR_CODE[fg])
        self.__codes = ";".join(codes)

    def __call__(self, text: object, /, enabled: bool = True) -> str:
        plain = str(text)
        if not enabled or not self.__codes or not plain:
            return plain
        return f"\033[{self.__codes}m{plain}\033[0m"
