# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
import sys
import logging
from typing import (Any, Optional, Callable, TextIO)

# import
try:
    from tqdm import tqdm  # type: ignore
except ImportError:
    tqdm = None

try:
    from rich.console import Console  # type: ignore
    from rich.logging import RichHandler  # type: ignore
except ImportError:
    Console = None
    RichHandler = None


_LOG_FORMAT = "%(levelname)s: %(message)s"
_GLOBAL_CONSOLE_FUNC: Optional[ConsoleFunc] = None  # diagnostics output function


class ConsoleFunc():
    r"""
    A wrapper for console output functions with preset keyword arguments.
    """
    def __init__(self, func: Callable[..., Any], **kwargs: Any):
        self.__func = func
        self.__kwargs = kwargs

    def __call__(self, *args, **kwargs) -> Any:
        all_kwargs = self.__kwargs.copy()
        all_kwargs.update(kwargs)
        return self.__func(*args, **all_kwargs)


def set_console_func(func: Optional[Callable[..., Any]], **kwargs: Any):
    r"""
    Set the global console used by :func:`smart_print()` for diagnostics.

    Parameters
    ----------
        func : Optional[Callable[..., Any]]
            A console output function or method, which should accept string input as the first argument.
            - `None`: Reset to the default (a `rich` console on stderr when available).

        **kwargs : Any
            Additional keyword arguments to be passed to the console function during each call.
    """
    global _GLOBAL_CONSOLE_FUNC
    _GLOBAL_CONSOLE_FUNC = None if func is None else ConsoleFunc(func, **kwargs)


def _get_global_console() -> Optional[ConsoleFunc]:
    r"""
    Get the global console function.
    """
    if _GLOBAL_CONSOLE_FUNC is None and Console is not None:
        set_console_func(Console(stderr=True).print, end="", markup=False, highlight=False)

    return _GLOBAL_CONSOLE_FUNC


def smart_print(
    *values: object,
    sep: str = " ",
    end: str = "\n",
    file: Optional[TextIO] = None
):
    r"""
    Print diagnostics without breaking live :pkg:`tqdm` progress bars.

    Parameters
    ----------
        *values : object
            Values to be printed.

        sep : str, default to `" "`
            Separator between values.

        end : str, default to `"\n"`
            End character after printing.

        file : Optional[TextIO], default to `None`
            An explicit stream. If given, the values are written there directly.
            - `None`: Use `tqdm.write` while a bar is live, else the global console, else `sys.stderr`.
    """
    text = sep.join(map(str, values)) + end
    if file is not None:
        file.write(text)
        file.flush()
        return

    if tqdm is not None and getattr(tqdm, "_instances", None):
        used_func: Optional[ConsoleFunc] = ConsoleFunc(tqdm.write, end="", file=sys.stderr)
    else:
        used_func = _get_global_console()

    if used_func is None:
        sys.stderr.write(text)
        sys.stderr.flush()
    else:
        try:
            used_func(text)
        except Exception:
            sys.stderr.write(text)


def progress(iterable: Any, total: Optional[int] = None, desc: str = "", enabled: bool = True) -> Any:
    r"""
    Wrap :param:`iterable` in a stderr :pkg:`tqdm` bar when it is available and stderr is a terminal.
    """
    if tqdm is None or not enabled or not sys.stderr.isatty():
        return iterable
    return tqdm(iterable, total=total, desc=desc, file=sys.stderr, leave=False)


def configure_logging(verbosity: int = 0) -> logging.Logger:
    r"""
    Attach a handler to the `fcgp` logger. Only the command-line front end calls this.

    Parameters
    ----------
        verbosity : int, default to `0`
            `0`: warnings; `1`: info; `2` or more: debug.

    Returns
    -------
        logging.Logger
            The configured package logger.
    """
    level = logging.WARNING if verbosity <= 0 else (logging.INFO if verbosity == 1 else logging.DEBUG)
    logger = logging.getLogger("fcgp")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    if RichHandler is not None and Console is not None:
        handler: logging.Handler = RichHandler(console=Console(stderr=True), show_path=False)
        handler.setFormatter(logging.Formatter("%(message)s"))
    else:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_LOG_FORMAT))

    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False

    return logger
