from pathlib import Path

import click
from pydantic import ValidationError

from cli.options import FilePath, read_source, weight_options, weight_spec
from core.errors import ParseError
from core.schemas import WeightsResponse
from evaluation import io, weighting
from evaluation.models import WeightSpec


def _with_frequencies(spec: WeightSpec, path: Path) -> WeightSpec:
    frequencies = io.read_label_map(path, key="frequencies")
    try:
        return WeightSpec.model_validate(spec.model_dump() | {"frequencies": frequencies})
    except ValidationError as e:
        raise ParseError(str(path), "frequencies", e.errors()[0]["msg"])


@click.command()
@weight_options
@click.option(
    "--frequencies",
    "frequencies_file",
    type=FilePath,
    help="JSON label->frequency map, or a profile JSON, used for rarity.",
)
@click.option("--predictions", type=FilePath, help="Derive frequencies from the true labels of this CSV.")
@click.option("--confusion", type=FilePath, help="Derive frequencies from the row sums of this matrix.")
@click.option("--labels", help="Comma separated class labels (default: labels named by the inputs).")
def weights(
    weights_file: Path | None,
    scheme: str | None,
    assignments: tuple[str, ...],
    fill: str | None,
    criteria: tuple[str, ...],
    frequencies_file: Path | None,
    predictions: Path | None,
    confusion: Path | None,
    labels: str | None,
) -> None:
    """Print the class weight vector a weight scheme produces."""
    data_sources = [p for p in (frequencies_file, predictions, confusion) if p is not None]
    if len(data_sources) > 1:
        raise click.UsageError("give at most one of --frequencies, --predictions or --confusion")
    if labels is not None and (predictions or confusion):
        raise click.UsageError("--labels cannot be combined with --predictions or --confusion")

    spec = weight_spec(weights_file, scheme, assignments, fill, criteria)
    if frequencies_file is not None:
        spec = _with_frequencies(spec, frequencies_file)
    if predictions is not None or confusion is not None:
        matrix, _ = read_source(predictions, confusion)
        vector = weighting.resolve(spec, matrix)
    else:
        names = [label.strip() for label in labels.split(",") if label.strip()] if labels else None
        vector = weighting.build(spec, names)
    response = WeightsResponse(scheme=spec.describe(), weights=vector.as_dict())
    click.echo(response.model_dump_json(indent=2))
