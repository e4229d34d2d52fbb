"""Report documents and their JSON, CSV and text renderings."""

from .document import (
    CSV_COLUMNS,
    EXIT_FAIL,
    EXIT_OK,
    EXIT_UNDECIDED,
    EXIT_USAGE,
    ReportDocument,
    tally,
)

__all__ = [
    "CSV_COLUMNS",
    "EXIT_FAIL",
    "EXIT_OK",
    "EXIT_UNDECIDED",
    "EXIT_USAGE",
    "ReportDocument",
    "tally",
]
