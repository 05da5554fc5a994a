from pathlib import Path

import click

from evaluation import io
from evaluation.models import MetricReport
from evaluation.render import ReportFormat, render


def emit_report(report: MetricReport, fmt: str, output: Path | None, decimals: int) -> None:
    if output is None:
        click.echo(render(report, ReportFormat(fmt), decimals), nl=False)
    else:
        io.write_report(report, ReportFormat(fmt), output, decimals)
