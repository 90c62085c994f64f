# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
from typing import (Any, Mapping, Sequence)

from ._ansi import Style
from .output import smart_print


_STYLES = {
    "title": Style(fg="y", styles={"bold"}),
    "key": Style(styles={"bold", "selected"}),
    "type": Style(fg="c", styles={"italic"}),
    "missing": Style(styles={"dim"}),
    "ok": Style(fg="g", styles={"bold"}),
    "bad": Style(fg="r", styles={"bold"}),
}


def _fmt_value(val: Any) -> str:
    if isinstance(val, (list, tuple)):
        return "[" + ", ".join(map(str, val)) + "]"
    return str(val)


def fmt_record(
    target: Mapping[str, Any],
    title: str = "",
    omits: Sequence[str] = (),
    color: bool = True,
    display: bool = False
) -> str:
    r"""
    Format a run record (or any mapping) as an indexed key/value block.

    Parameters
    ----------
        target : Mapping[str, Any]
            The record to be formatted, e.g. :meth:`RunRecord.to_dict()`.

        title : str, default to `""`
            An optional title to be displayed at the top of the formatted output.

        omits : Sequence[str], default to `()`
            Keys that are left out entirely.

        color : bool, default to `True`
            Whether to emit ANSI color and style codes.

        display : bool, default to `False`
            Whether to print the formatted output to stderr using :func:`smart_print()`.

    Returns
    -------
        str
            The formatted string representation of the record.
    """
    if not isinstance(target, Mapping):
        raise TypeError(f"Input Target Should Be A Mapping Type, Got {type(target)}.")

    items = [(str(key), val) for key, val in target.items() if key not in omits]
    lines = []
    if items:
        indent = len(str(len(items)))
        if title:
            lines.append((" " * (indent + 2)) + _STYLES["title"](f"< {title} >", enabled=color))
        for idex, (key, val) in enumerate(items, start=1):
            key_str = _STYLES["key"](f"[{key}]", enabled=color)
            if val is None:
                val_str = _STYLES["missing"]("-", enabled=color)
                type_str = ""
            elif isinstance(val, bool):
                val_str = _STYLES["ok" if val else "bad"](val, enabled=color)
                type_str = _STYLES["type"]("bool", enabled=color)
            else:
                val_str = _fmt_value(val)
                type_str = _STYLES["type"](type(val).__name__, enabled=color)
            lines.append(f"#{str(idex).zfill(indent)} {key_str}{type_str}: {val_str}")
    result = "\n".join(lines)

    if display:
        smart_print(result)

    return result
