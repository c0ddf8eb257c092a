"""
Convergence Reports
Per-neighborhood verdicts with an overall verdict, and I*-witnesses
"""

from dataclasses import dataclass, field
from typing import List, Tuple

from natset import IndexSet, Verdict
from spaces import format_point


@dataclass(frozen=True)
class ConvergenceReport:
    """Verdicts for the tested basis neighborhoods plus the overall verdict"""

    mode: str
    sequence: str
    ideal: str
    limit: object
    schedule: str
    per_basis: Tuple[Tuple[object, Verdict], ...]
    overall: Verdict

    @property
    def depth(self) -> int:
        return len(self.per_basis)

    @property
    def all_tested_true(self) -> bool:
        return all(v.is_true for _, v in self.per_basis)

    @property
    def first_false(self):
        """(neighborhood, verdict) of the first refuted basis set, if any"""
        return next(((u, v) for u, v in self.per_basis if v.is_false), None)

    def fields(self) -> List[Tuple[str, object]]:
        """Report fields in a stable order"""
        rows = [
            ('mode', self.mode),
            ('sequence', self.sequence),
            ('ideal', self.ideal),
            ('limit', format_point(self.limit)),
            ('schedule', self.schedule),
            ('depth', self.depth),
            ('overall', self.overall.value.value),
            ('overall_certificate', self.overall.certificate),
        ]
        for i, (nbhd, verdict) in enumerate(self.per_basis):
            rows.append((f"basis[{i}]", f"{nbhd} -> {verdict.value.value}"))
            rows.append((f"basis_certificate[{i}]", verdict.certificate))
        return rows


@dataclass(frozen=True)
class IStarWitness:
    """M in the dual filter along which the sequence converges classically"""

    M: IndexSet
    domain: IndexSet
    limit: object
    tail_limit_certificate: str
    filter_verdict: Verdict
    thin: bool
    prefix: Tuple[int, ...] = field(default=())

    def enumerated_prefix(self, k: int) -> List[int]:
        """First k indices m_1 < m_2 < ... of M"""
        if k <= len(self.prefix):
            return list(self.prefix[:k])
        return self.M.head(k)

    def fields(self) -> List[Tuple[str, object]]:
        rows = [
            ('witness_M', self.M),
            ('witness_limit_point', format_point(self.limit)),
            ('witness_filter', self.filter_verdict.certificate),
            ('witness_limit', self.tail_limit_certificate),
            ('witness_thin', 'yes' if self.thin else 'no'),
        ]
        rows.extend((f"witness_prefix[{i}]", n) for i, n in enumerate(self.prefix))
        return rows
