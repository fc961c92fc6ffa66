"""Validators for command-line values.

Each function is an argparse `type=` callable: it returns the converted value
or raises argparse.ArgumentTypeError, which argparse turns into a usage error.
"""
import argparse
import logging

from tc_algebra.backends import BACKENDS
from tc_algebra.errors import IndexOutOfRangeError
from tc_algebra.operad import VARIETIES, Partition, Perm

RINGS = ("rational", "matrix", "weyl", "laurent")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _int(value, what):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"{what} must be an integer, got {value!r}") from None


def positive_int(value):
    """Gets an integer that is at least 1.

    Args:
        value: The raw text from the command line.

    Returns:
        int: The parsed value.
    """
    number = _int(value, "value")
    if number < 1:
        raise argparse.ArgumentTypeError(f"value must be at least 1, got {number}")
    return number


def non_negative_int(value):
    """Gets an integer that is at least 0.

    Args:
        value: The raw text from the command line.

    Returns:
        int: The parsed value.
    """
    number = _int(value, "value")
    if number < 0:
        raise argparse.ArgumentTypeError(f"value must be at least 0, got {number}")
    return number


def _choice(value, choices, what):
    name = str(value).strip().lower()
    if name not in choices:
        raise argparse.ArgumentTypeError(f"unknown {what} {value!r}; choose from {', '.join(choices)}")
    return name


def backend_name(value):
    return _choice(value, tuple(BACKENDS), "backend")


def variety_name(value):
    return _choice(value, VARIETIES, "variety")


def ring_name(value):
    return _choice(value, RINGS, "ring")


def log_level(value):
    """Gets a logging level name such as INFO.

    Returns:
        int: The numeric level from the logging module.
    """
    name = str(value).strip().upper()
    if name not in LOG_LEVELS:
        raise argparse.ArgumentTypeError(f"unknown log level {value!r}; choose from {', '.join(LOG_LEVELS)}")
    return getattr(logging, name)


def _int_list(value, what):
    text = str(value).strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    items = [item for item in text.replace(" ", ",").split(",") if item]
    if not items:
        raise argparse.ArgumentTypeError(f"{what} must not be empty")
    return [_int(item, f"{what} entry") for item in items]


def permutation(value):
    """Gets a permutation in one-line notation, `[2,1,3]` or `2,1,3`.

    Args:
        value: The raw text from the command line.

    Returns:
        Perm: The permutation k -> images[k-1].
    """
    images = _int_list(value, "permutation")
    try:
        return Perm(images)
    except IndexOutOfRangeError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def partition(value):
    """Gets a partition `[m1,...,mn]` with positive parts."""
    parts = _int_list(value, "partition")
    try:
        return Partition(parts)
    except IndexOutOfRangeError as e:
        raise argparse.ArgumentTypeError(str(e)) from None
