from collections.abc import Callable, Iterable, Sequence
from logging import DEBUG, Logger

from rich.console import Console
from rich.table import Table
from typer import echo

from app.services.zigzag import CorpusReport
from app.services.zigzag.models import OutputFormat
from app.services.zigzag.models.reports import RecordModel, Status


def set_debug(*loggers: Logger) -> None:
    """Lower one or more loggers and their handlers to DEBUG."""
    for logger in loggers:
        logger.setLevel(DEBUG)
        for handler in logger.handlers:
            handler.setLevel(DEBUG)


def emit[T: RecordModel](
    items: Sequence[T], output_format: OutputFormat, human: Callable[[T], Iterable[str]]
) -> None:
    """One record line per item, or the human rendering of each."""
    for item in items:
        if output_format is OutputFormat.RECORDS:
            echo(item.to_record())
        else:
            for line in human(item):
                echo(line)


_STATUS_STYLE = {Status.PASS: "green", Status.FAIL: "bold red", Status.SKIP: "yellow"}


def _status(status: Status) -> str:
    return f"[{_STATUS_STYLE[status]}]{status.value}[/{_STATUS_STYLE[status]}]"


def corpus_tables(report: CorpusReport) -> tuple[Table, Table]:
    """Group matrix and structural checks as rich tables."""
    groups = Table(title="Corpus", show_lines=False)
    for column in ("space", "k", "Čech", "nerve", "X", "certificates", "exactness", "status"):
        groups.add_column(column, no_wrap=True)
    for row in report.rows:
        groups.add_row(
            row.space,
            str(row.degree),
            row.cech,
            row.nerve,
            row.space_group or "-",
            row.certificates,
            _status(row.exactness),
            _status(row.status),
        )

    checks = Table(title="Checks")
    for column in ("space", "check", "status", "detail"):
        checks.add_column(column)
    for check in report.checks:
        label = f"{check.check} (info)" if check.informational else check.check
        checks.add_row(check.space, label, _status(check.status), check.detail)
    return groups, checks


def print_tables(*tables: Table) -> None:
    # Wide enough that rows never wrap
    console = Console(width=160)
    for table in tables:
        console.print(table)
