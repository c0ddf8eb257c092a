"""
Report Rendering
Text and structured renderings of report fields
"""

import sys
from typing import Iterable, Optional, Tuple

import pandas as pd

from natset import Verdict

# exit status per verdict truth value
EXIT_DEFINITIVE = 0
EXIT_ERROR = 1
EXIT_UNKNOWN = 2


def _flat(value) -> str:
    return ' '.join(str(value).split('\n'))


def render_fields(rows: Iterable[Tuple[str, object]], report_format: str) -> str:
    """
    Render (key, value) rows

    Structured output is one 'key: value' line per row in the given order;
    text output pads keys into a column.
    """
    rows = [(key, _flat(value)) for key, value in rows]
    if report_format == 'structured':
        return ''.join(f"{key}: {value}\n" for key, value in rows)
    width = max((len(key) for key, _ in rows), default=0)
    return ''.join(f"{key.ljust(width)}  {value}\n" for key, value in rows)


def render_table(table: pd.DataFrame, report_format: str, name: str = 'row') -> str:
    """Render a result table; structured rows become 'column[i]: value' lines"""
    if report_format == 'structured':
        rows = [(f"{column}[{i}]", value) for i, record in enumerate(table.to_dict('records'))
                for column, value in record.items()]
        return render_fields([(f"{name}_count", len(table))] + rows, report_format)
    return table.to_string(index=False) + '\n'


def verdict_exit(verdict: Verdict) -> int:
    return EXIT_UNKNOWN if verdict.is_unknown else EXIT_DEFINITIVE


def emit(text: str, output: Optional[str] = None) -> None:
    """Write a report to a file or stdout"""
    if output:
        with open(output, 'w', encoding='utf-8') as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
