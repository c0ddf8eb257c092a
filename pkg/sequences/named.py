"""
Named Sequences Module
Factory for the named sequences, with optional corrupted variants for self-check fault injection
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Iterable

from natset import IndexSet
from spaces import ALL_ZEROS, CANTOR_CUBE, format_point

from .errors import UnknownName
from .rules import ConvergentBlocks, EventuallyConstant, StaircaseBlocks, constant_rule
from .sequence import Sequence
from .structures import BlockConstant, CoordinateSets, Equidistributed, ProductOf

logger = logging.getLogger(__name__)


class SequenceFactory:
    """Builds named sequences; names listed in `faults` come out corrupted"""

    def __init__(self, faults: Iterable[str] = ()):
        """
        Initialize sequence factory

        Args:
            faults: Names whose generator is replaced by a corrupted one
        """
        self.faults: FrozenSet[str] = frozenset(faults)
        self._builders: Dict[str, Callable[[bool], Sequence]] = {
            'udSequence': self.ud_sequence,
            'inverseBlocks': self.inverse_blocks,
            'prodDiagDensity': self.prod_diag_density,
            'prodDiagBlocks': self.prod_diag_blocks,
        }
        unknown = self.faults - set(self._builders)
        if unknown:
            raise UnknownName(f"Cannot inject faults into unknown sequences {sorted(unknown)}")
        if self.faults:
            logger.warning(f"Fault injection active for {sorted(self.faults)}")

    @property
    def names(self):
        return sorted(self._builders)

    def build(self, name: str) -> Sequence:
        """
        Named sequence on all naturals

        Args:
            name: One of udSequence, inverseBlocks, prodDiagDensity, prodDiagBlocks

        Returns:
            Sequence (corrupted if the name is in `faults`)

        Raises:
            UnknownName: for any other name
        """
        builder = self._builders.get(name)
        if builder is None:
            raise UnknownName(f"No named sequence '{name}' (known: {', '.join(self.names)})")
        return builder(name in self.faults)

    def ud_sequence(self, corrupt: bool = False) -> Sequence:
        if corrupt:
            return Sequence(IndexSet.naturals(), BlockConstant(constant_rule(Fraction(0))), 'udSequence')
        return Sequence(IndexSet.naturals(), Equidistributed(), 'udSequence')

    def inverse_blocks(self, corrupt: bool = False) -> Sequence:
        # corrupted: 1/2 + 1/(2j), converging to 1/2 instead of 0
        rule = ConvergentBlocks(Fraction(1, 2), Fraction(1, 2)) if corrupt else ConvergentBlocks(Fraction(0))
        return Sequence(IndexSet.naturals(), BlockConstant(rule), 'inverseBlocks')

    def prod_diag_density(self, corrupt: bool = False) -> Sequence:
        width = (lambda m: 2 * m - 1) if corrupt else (lambda m: m)
        return Sequence(IndexSet.naturals(), CoordinateSets(width=width), 'prodDiagDensity')

    def prod_diag_blocks(self, corrupt: bool = False) -> Sequence:
        rule = EventuallyConstant((), ALL_ZEROS, CANTOR_CUBE) if corrupt else StaircaseBlocks()
        return Sequence(IndexSet.naturals(), BlockConstant(rule), 'prodDiagBlocks')


DEFAULT_FACTORY = SequenceFactory()


def named_sequence(name: str, factory: SequenceFactory = DEFAULT_FACTORY) -> Sequence:
    return factory.build(name)


def constant(point) -> Sequence:
    """Constant sequence on all naturals"""
    rule = constant_rule(point)
    return Sequence(IndexSet.naturals(), BlockConstant(rule), f"const {format_point(rule.tail)}")


def product_sequence(*components: Sequence) -> Sequence:
    """Coordinate-wise product on the common domain"""
    if len(components) < 2:
        raise ValueError("a product needs at least two sequences")
    domain = components[0].domain
    for component in components[1:]:
        domain = domain.intersect(component.domain)
    structure = ProductOf(tuple(c.structure for c in components))
    return Sequence(domain, structure, 'product(' + '; '.join(c.label for c in components) + ')')
