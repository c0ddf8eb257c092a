"""
Space Notation
Parser for points, neighborhoods and intervals

    rat(1/3)   ones   zeros   cube(101;1)   pair(rat(0), rat(1/2))
    ball(0, 1/8)   cyl{1:1,2:0}   box(ball(0,1/2), ball(1,1/2))   [0,1/2)
"""

import logging
import re
from fractions import Fraction
from typing import List

from natset import NotationError

from .model import Ball, Box, Cylinder, CubePoint, Interval

logger = logging.getLogger(__name__)

_CUBE = re.compile(r"^cube\(([01]*);([01])\)$")
_INTERVAL = re.compile(r"^([\[(])\s*([^,]+),\s*([^\])]+)([\])])$")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise NotationError(f"Not a rational number: '{text}'")


def split_arguments(body: str) -> List[str]:
    """Split on commas outside brackets"""
    parts, depth, current = [], 0, ''
    for char in body:
        if char in '([{':
            depth += 1
        elif char in ')]}':
            depth -= 1
        if char == ',' and depth == 0:
            parts.append(current.strip())
            current = ''
        else:
            current += char
    if current.strip():
        parts.append(current.strip())
    return parts


def parse_point(text: str):
    """
    Parse a point

    Args:
        text: Point notation

    Returns:
        Fraction, CubePoint or tuple of points
    """
    text = text.strip()
    if text == 'ones':
        return CubePoint((), 1)
    if text == 'zeros':
        return CubePoint((), 0)
    match = _CUBE.match(text)
    if match:
        return CubePoint(tuple(int(b) for b in match.group(1)), int(match.group(2)))
    if text.startswith('rat(') and text.endswith(')'):
        value = parse_rational(text[4:-1])
    elif text.startswith('pair(') and text.endswith(')'):
        return tuple(parse_point(part) for part in split_arguments(text[5:-1]))
    else:
        value = parse_rational(text)
    if not 0 <= value <= 1:
        raise NotationError(f"Interval points lie in [0,1], got {value}")
    return value


def parse_nbhd(text: str):
    """Parse a ball, cylinder or box"""
    text = text.strip()
    if text.startswith('ball(') and text.endswith(')'):
        args = split_arguments(text[5:-1])
        if len(args) != 2:
            raise NotationError(f"ball(center, radius) expected, got '{text}'")
        radius = parse_rational(args[1])
        if radius <= 0:
            raise NotationError(f"Ball radius must be positive: '{text}'")
        return Ball(parse_rational(args[0]), radius)
    if text.startswith('cyl{') and text.endswith('}'):
        constraints = []
        for item in split_arguments(text[4:-1]):
            try:
                coord, bit = (int(x) for x in item.split(':'))
            except ValueError:
                raise NotationError(f"Cylinder constraints look like 'coord:bit', got '{item}'")
            constraints.append((coord, bit))
        return Cylinder(tuple(constraints))
    if text.startswith('box(') and text.endswith(')'):
        return Box(tuple(parse_nbhd(part) for part in split_arguments(text[4:-1])))
    raise NotationError(f"Unknown neighborhood '{text}'")


def parse_interval(text: str) -> Interval:
    """Parse '[a,b]', '(a,b)', '[a,b)' or '(a,b]' inside [0,1]"""
    match = _INTERVAL.match(text.strip())
    if not match:
        raise NotationError(f"Not an interval: '{text}'")
    left, lo, hi, right = match.groups()
    interval = Interval(parse_rational(lo), parse_rational(hi), left == '[', right == ']')
    if interval.lo < 0 or interval.hi > 1 or interval.lo > interval.hi:
        raise NotationError(f"Intervals must satisfy 0 <= lo <= hi <= 1: '{text}'")
    return interval
