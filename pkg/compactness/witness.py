"""
Extraction Witnesses
Traces of nested splits and the nonthin subsequences they produce
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from convergence import ConvergenceReport
from ideals import ShrinkWitness
from natset import IndexSet, Verdict
from spaces import format_point


@dataclass(frozen=True)
class BisectTrace:
    """
    Nested cells with their index sets and membership verdicts

    Bisection cells are closed intervals, net cells are intervals or boxes of
    intervals, and diagonal cells are cylinders fixing coordinates 1..i.
    """

    cells: Tuple[object, ...]
    index_sets: Tuple[IndexSet, ...]
    verdicts: Tuple[Verdict, ...]
    choices: Tuple[str, ...]

    @property
    def intervals(self) -> Tuple[object, ...]:
        return self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def fields(self) -> List[Tuple[str, object]]:
        rows = []
        for i, (cell, D, verdict, choice) in enumerate(zip(self.cells, self.index_sets,
                                                            self.verdicts, self.choices)):
            rows.append((f"trace_cell[{i}]", cell))
            rows.append((f"trace_choice[{i}]", choice))
            rows.append((f"trace_set[{i}]", D))
            rows.append((f"trace_verdict[{i}]", verdict.certificate))
        return rows


@dataclass(frozen=True)
class ExtractionWitness:
    """Nonthin index set K, the limit found, and the convergence report on K"""

    mode: str
    K: IndexSet
    xi: object
    trace: BisectTrace
    report: ConvergenceReport
    shrink: ShrinkWitness
    nonthin: Verdict
    cell: Optional[object] = None

    @property
    def converges(self) -> bool:
        return self.report.overall.is_true or (self.report.overall.is_unknown and self.report.all_tested_true)

    def fields(self) -> List[Tuple[str, object]]:
        rows = [
            ('mode', self.mode),
            ('K', self.K),
            ('K_nonthin', self.nonthin.certificate),
            ('xi', format_point(self.xi)),
            ('cell', self.cell if self.cell is not None else '-'),
            ('report_overall', self.report.overall.value.value),
            ('report_certificate', self.report.overall.certificate),
        ]
        for i, part in enumerate(self.shrink.parts):
            rows.append((f"part[{i}]", part))
        rows.append(('part_tail', self.shrink.tail))
        return rows + self.trace.fields()
