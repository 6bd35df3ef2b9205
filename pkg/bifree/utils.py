# -*- coding: utf-8 -*-

import math
import re
from fractions import Fraction

import numpy as np

from .errors import NumberFormatError


# denominator used when floating point values (angles, distances) are
# converted to exact grades
SNAP_DENOMINATOR = 2**32

# integers, finite decimals and p/q rationals
_NUMBER = re.compile(r"[+-]?(?:\d+/\d+|\d+(?:\.\d*)?|\.\d+)")


def parse_number(token, lineno=None):
    """Converts a token from an scc2020 document to an exact rational.

    Parameters
    ----------
    token : str
        An integer, a finite decimal or a ``p/q`` rational.
    lineno : int, optional (default: None)
        Line number used in the error message.

    Returns
    -------
    value : fractions.Fraction

    """
    if _NUMBER.fullmatch(token) is None:
        raise NumberFormatError(f"'{token}' is not a number", lineno=lineno)
    try:
        value = Fraction(token)
    except ZeroDivisionError:
        raise NumberFormatError(f"'{token}' is not a number", lineno=lineno)
    return value


def format_number(value):
    """Returns the shortest exact text for a rational: an integer, a
    terminating decimal or ``p/q``.

    Parameters
    ----------
    value : fractions.Fraction or int

    Returns
    -------
    text : str

    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)

    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"

    places = max(twos, fives)
    scaled = abs(value.numerator) * 10**places // value.denominator
    digits = str(scaled).rjust(places + 1, "0")
    text = f"{digits[:-places]}.{digits[-places:]}"
    return f"-{text}" if value < 0 else text


def snap(value, denominator=SNAP_DENOMINATOR):
    """Rounds a float to the nearest rational with the given
    denominator. Non-decreasing in value.
    """
    if not math.isfinite(value):
        raise ValueError(f"cannot snap non-finite value {value}")
    return Fraction(int(round(value * denominator)), denominator)


def parse_sizes(sizes):
    """Converts a comma-separated size list to ints.

    Parameters
    ----------
    sizes : str
        Example: '64,128,256'.

    Returns
    -------
    S : list

    """
    S = []
    for r in sizes.split(","):
        r = r.strip()
        if r:
            S.append(int(r))
    return S


def grid_sample(xs, ys, grid_cap, seed=0):
    """Returns grid points of xs x ys, all of them when the grid has at
    most grid_cap points and otherwise a seeded sample that always
    contains the four corners.

    Parameters
    ----------
    xs : list
        Sorted distinct first coordinates.
    ys : list
        Sorted distinct second coordinates.
    grid_cap : int
    seed : int, optional (default: 0)

    Returns
    -------
    points : list
        List of (x, y) tuples in row-major grid order.

    """
    total = len(xs) * len(ys)
    if total == 0:
        return []
    if total <= grid_cap:
        return [(x, y) for x in xs for y in ys]

    corners = {0, len(ys) - 1, (len(xs) - 1) * len(ys), total - 1}
    rest = np.setdiff1d(np.arange(total), sorted(corners))
    k = min(max(grid_cap - len(corners), 0), len(rest))
    rng = np.random.default_rng(seed)
    picked = set(int(i) for i in rng.choice(rest, size=k, replace=False))
    picked |= corners
    return [(xs[i // len(ys)], ys[i % len(ys)]) for i in sorted(picked)]


resolve_kwargs = ["check"]
firep_kwargs = ["dim"]


def validate_input(kwargs, algorithm="path"):
    """Raises ValueError for keyword arguments that the selected
    algorithm does not accept.
    """

    def check_intersection(invalid_kwargs, input_kwargs):
        isec = set(invalid_kwargs).intersection(set(input_kwargs.keys()))
        if isec:
            raise ValueError(
                f"{','.join(sorted(isec))} cannot be used with algorithm='{algorithm}'"
            )

    unknown = set(kwargs) - set(resolve_kwargs) - set(firep_kwargs)
    if unknown:
        raise ValueError(f"{','.join(sorted(unknown))} is not a valid keyword argument")

    if algorithm in ["path", "logpath"]:
        check_intersection(firep_kwargs, kwargs)
    else:
        check_intersection(resolve_kwargs, kwargs)
