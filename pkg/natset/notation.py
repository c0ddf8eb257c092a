"""
Index Set Notation
Parser and printer for the textual index-set form

    fin{1,2} + ap(3,4) + block(2) - fin{6}

'+' is union and '-' is difference, both left-associative. Parentheses group.
Generators: nat, tail(n), ap(a,d), block(j), blocktail(j,n0), blockap(j,a,d),
spread(a,d,J,m); block forms take an optional ';<decomposition>' suffix.
"""

import logging
import re
from typing import List, Tuple

from .decomposition import TWO_ADIC, get_decomposition
from .errors import NotationError
from .generators import AP, Block, BlockAP, BlockTail, Spread, Tail
from .index_set import IndexSet

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:(?P<fin>fin\{[^}]*\})|(?P<call>[a-z]+\([^()]*\))|(?P<word>[a-z]+)|(?P<op>[+\-()]))")

# name -> (argument count, builder)
_GENERATORS = {
    'tail': (1, lambda args, dec: Tail(args[0])),
    'ap': (2, lambda args, dec: AP(args[0], args[1])),
    'block': (1, lambda args, dec: Block(args[0], dec)),
    'blocktail': (2, lambda args, dec: BlockTail(args[0], args[1], dec)),
    'blockap': (3, lambda args, dec: BlockAP(args[0], args[1], args[2], dec)),
    'spread': (4, lambda args, dec: Spread(args[0], args[1], args[2], args[3], dec)),
}


def _tokenize(text: str) -> List[Tuple[str, str]]:
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if not match:
            raise NotationError(f"Cannot read index set at position {pos}: '{stripped[pos:]}'")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))
        pos = match.end()
    return tokens


def _integers(body: str, what: str) -> List[int]:
    body = body.strip()
    if not body:
        return []
    try:
        return [int(part) for part in body.split(',')]
    except ValueError:
        raise NotationError(f"Expected integers in {what}, got '{body}'")


def _atom(kind: str, value: str) -> IndexSet:
    if kind == 'fin':
        elements = _integers(value[4:-1], value)
        if any(n < 1 for n in elements):
            raise NotationError(f"Finite sets hold positive naturals only: '{value}'")
        return IndexSet.finite_set(elements)
    if kind == 'word':
        if value == 'nat':
            return IndexSet.naturals()
        raise NotationError(f"Unknown index-set word '{value}'")
    name, body = value[:-1].split('(', 1)
    if name == 'sampled':
        raise NotationError("Sampled sets have no textual form")
    if name not in _GENERATORS:
        raise NotationError(f"Unknown generator '{name}' (known: {', '.join(sorted(_GENERATORS))})")
    decomposition = TWO_ADIC
    if ';' in body:
        body, dec_name = body.split(';', 1)
        decomposition = get_decomposition(dec_name.strip())
    arity, builder = _GENERATORS[name]
    args = _integers(body, value)
    if len(args) != arity:
        raise NotationError(f"{name} takes {arity} arguments, got {len(args)} in '{value}'")
    try:
        return IndexSet.build(generators=[builder(args, decomposition)])
    except ValueError as e:
        raise NotationError(f"Invalid generator '{value}': {e}")


class _Parser:
    def __init__(self, tokens: List[Tuple[str, str]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        token = self.peek()
        self.pos += 1
        return token

    def expression(self) -> IndexSet:
        result = self.term()
        while self.peek() in (('op', '+'), ('op', '-')):
            _, op = self.take()
            right = self.term()
            result = result.union(right) if op == '+' else result.difference(right)
        return result

    def term(self) -> IndexSet:
        kind, value = self.take()
        if kind is None:
            raise NotationError("Unexpected end of index-set text")
        if (kind, value) == ('op', '('):
            inner = self.expression()
            if self.take() != ('op', ')'):
                raise NotationError("Unbalanced parenthesis in index-set text")
            return inner
        if kind == 'op':
            raise NotationError(f"Unexpected '{value}' in index-set text")
        return _atom(kind, value)


def parse_index_set(text: str) -> IndexSet:
    """
    Parse the textual form of an index set

    Args:
        text: Notation such as 'fin{1,2} + ap(3,4) - fin{7}'

    Returns:
        IndexSet

    Raises:
        NotationError: on malformed text
    """
    tokens = _tokenize(text)
    if not tokens:
        raise NotationError("Empty index-set text")
    parser = _Parser(tokens)
    result = parser.expression()
    if parser.pos != len(tokens):
        raise NotationError(f"Trailing input in index-set text: '{text}'")
    logger.debug(f"Parsed '{text}' as {result}")
    return result


def format_index_set(index_set: IndexSet) -> str:
    return index_set.to_text()
