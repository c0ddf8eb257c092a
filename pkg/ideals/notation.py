"""
Ideal Notation
Parser for fin, density, decA(<dec>), decB(<dec>) and restrict(<ideal>, <indexset>)
"""

import logging
import re

from natset import NotationError, get_decomposition, parse_index_set

from .families import DENSITY, FIN, DecAIdeal, DecBIdeal, Ideal, restrict

logger = logging.getLogger(__name__)

_DECOMPOSED = re.compile(r"^(decA|decB)\(\s*([A-Za-z0-9]*)\s*\)$")


def _split_top_level(body: str) -> int:
    """Position of the first comma outside parentheses/braces"""
    depth = 0
    for pos, char in enumerate(body):
        if char in '({':
            depth += 1
        elif char in ')}':
            depth -= 1
        elif char == ',' and depth == 0:
            return pos
    raise NotationError(f"restrict(...) needs an ideal and an index set: '{body}'")


def parse_ideal(text: str) -> Ideal:
    """
    Parse the textual form of an ideal

    Args:
        text: e.g. 'fin', 'density', 'decB(2adic)', 'restrict(decB(2adic), tail(2))'

    Returns:
        Ideal instance
    """
    text = text.strip()
    if text == 'fin':
        return FIN
    if text == 'density':
        return DENSITY
    match = _DECOMPOSED.match(text)
    if match:
        family, name = match.groups()
        decomposition = get_decomposition(name or None)
        return DecAIdeal(decomposition) if family == 'decA' else DecBIdeal(decomposition)
    if text.startswith('restrict(') and text.endswith(')'):
        body = text[len('restrict('):-1]
        cut = _split_top_level(body)
        return restrict(parse_ideal(body[:cut]), parse_index_set(body[cut + 1:]))
    raise NotationError(f"Unknown ideal '{text}' (expected fin, density, decA(..), decB(..), restrict(..))")
