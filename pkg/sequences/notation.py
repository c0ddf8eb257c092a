"""
Sequence Notation
Parser for the textual sequence form

    paper:inverseBlocks | restrict ap(1,2)
    const rat(1/2)
    product(paper:inverseBlocks ; const ones)
"""

import logging
from typing import List, Optional

from natset import NotationError, parse_index_set
from spaces import parse_point

from .named import DEFAULT_FACTORY, SequenceFactory, constant, product_sequence
from .sequence import Sequence

logger = logging.getLogger(__name__)


def _split_top_level(text: str, separator: str) -> List[str]:
    parts, depth, current = [], 0, ''
    for char in text:
        if char in '({':
            depth += 1
        elif char in ')}':
            depth -= 1
        if char == separator and depth == 0:
            parts.append(current.strip())
            current = ''
        else:
            current += char
    parts.append(current.strip())
    return parts


def _primary(text: str, factory: SequenceFactory) -> Sequence:
    if text.startswith('paper:'):
        return factory.build(text[len('paper:'):].strip())
    if text.startswith('const '):
        return constant(parse_point(text[len('const '):]))
    if text.startswith('product(') and text.endswith(')'):
        components = _split_top_level(text[len('product('):-1], ';')
        if len(components) < 2:
            raise NotationError(f"product(...) needs at least two ';'-separated sequences: '{text}'")
        return product_sequence(*(parse_sequence(c, factory) for c in components))
    raise NotationError(f"Unknown sequence '{text}' (expected paper:<name>, const <point> or product(..))")


def parse_sequence(text: str, factory: Optional[SequenceFactory] = None) -> Sequence:
    """
    Parse the textual form of a sequence

    Args:
        text: Sequence notation, optionally followed by '| restrict <indexset>' stages
        factory: Source of the named sequences

    Returns:
        Sequence instance
    """
    factory = factory or DEFAULT_FACTORY
    stages = _split_top_level(text.strip(), '|')
    sequence = _primary(stages[0], factory)
    for stage in stages[1:]:
        if not stage.startswith('restrict '):
            raise NotationError(f"Unknown sequence stage '{stage}' (expected 'restrict <indexset>')")
        sequence = sequence.subsequence(parse_index_set(stage[len('restrict '):]))
    logger.debug(f"Parsed sequence '{text}' -> {sequence.label}")
    return sequence
