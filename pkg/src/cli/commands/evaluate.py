from pathlib import Path

import click
from loguru import logger

from cli.commands._output import emit_report
from cli.options import FilePath, read_source, report_options, single_source, split_metrics, weight_options, weight_spec
from evaluation.analysis import evaluate_suite
from evaluation.models import RunResult


@click.command()
@click.option("--predictions", type=FilePath, help="CSV with header true,predicted.")
@click.option("--confusion", type=FilePath, help="Confusion matrix CSV with header label,<labels...>.")
@click.option("--name", help="Run name shown in the report (default: file stem).")
@weight_options
@report_options
def evaluate(
    predictions: Path | None,
    confusion: Path | None,
    name: str | None,
    weights_file: Path | None,
    scheme: str | None,
    assignments: tuple[str, ...],
    fill: str | None,
    criteria: tuple[str, ...],
    metrics: str,
    fmt: str,
    output: Path | None,
    decimals: int,
) -> None:
    """Score one classifier's results."""
    single_source(predictions, confusion)
    spec = weight_spec(weights_file, scheme, assignments, fill, criteria)
    matrix, source = read_source(predictions, confusion)
    run = RunResult(name=name or source.stem, matrix=matrix, source=str(source), fixed_order=confusion is not None)
    logger.info("Evaluating {} under {} weights", run.name, spec.describe())
    report = evaluate_suite([run], spec, split_metrics(metrics))
    emit_report(report, fmt, output, decimals)
