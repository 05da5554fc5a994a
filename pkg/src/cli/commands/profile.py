from pathlib import Path

import click

from cli.options import FilePath, single_source
from evaluation import io
from evaluation import profile as profiling


@click.command()
@click.option("--predictions", type=FilePath, help="CSV with header true,predicted; the true column is profiled.")
@click.option("--confusion", type=FilePath, help="Confusion matrix CSV; row sums are profiled.")
def profile(predictions: Path | None, confusion: Path | None) -> None:
    """Describe the class distribution of a test set."""
    single_source(predictions, confusion)
    if predictions is not None:
        result = profiling.profile_labels(io.read_predictions(predictions).true_labels)
    else:
        assert confusion is not None
        result = profiling.profile_confusion(io.read_confusion(confusion))
    click.echo(result.model_dump_json(indent=2))
