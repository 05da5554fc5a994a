"""Options shared by the commands and their conversion into domain objects."""

import re
from collections.abc import Callable
from pathlib import Path
from typing import Any

import click
from pydantic import ValidationError

from core.errors import ParseError
from evaluation import io
from evaluation.models import DEFAULT_METRICS, ConfusionMatrix, MetricKind, WeightSpec
from evaluation.render import DEFAULT_DECIMALS, ReportFormat

_SCHEME = re.compile(r"(?P<scheme>[a-z][a-z-]*)(?:\((?P<inline>.*)\))?")

FilePath = click.Path(dir_okay=False, path_type=Path)


def weight_options(command: Callable[..., Any]) -> Callable[..., Any]:
    decorators = [
        click.option("--weights", "weights_file", type=FilePath, help="Weight config (JSON)."),
        click.option(
            "--scheme",
            help="Weight scheme: user, rarity, composite or partial; inline weights as partial(B=0.7).",
        ),
        click.option("--set", "assignments", multiple=True, metavar="LABEL=WEIGHT", help="User weight of one class."),
        click.option("--fill", type=click.Choice(["even", "rarity"]), help="Fill policy of the partial scheme."),
        click.option(
            "--criterion",
            "criteria",
            multiple=True,
            metavar="rarity|NAME=PATH",
            help="Composite criterion: 'rarity' or a JSON label->weight file.",
        ),
    ]
    for decorator in reversed(decorators):
        command = decorator(command)
    return command


def report_options(command: Callable[..., Any]) -> Callable[..., Any]:
    decorators = [
        click.option(
            "--metrics",
            default=",".join(DEFAULT_METRICS),
            show_default=True,
            help=f"Comma separated metrics out of: {', '.join(MetricKind)}.",
        ),
        click.option(
            "--format",
            "fmt",
            type=click.Choice([f.value for f in ReportFormat]),
            default=ReportFormat.MARKDOWN.value,
            show_default=True,
        ),
        click.option("--output", type=FilePath, help="Write the report here instead of stdout."),
        click.option("--decimals", type=click.IntRange(0, 12), default=DEFAULT_DECIMALS, show_default=True),
    ]
    for decorator in reversed(decorators):
        command = decorator(command)
    return command


def split_metrics(value: str) -> list[str]:
    return [name.strip() for name in value.split(",") if name.strip()]


def _assignment(text: str, source: str) -> tuple[str, float]:
    label, sep, value = text.rpartition("=")
    label = label.strip()
    try:
        if not sep or not label:
            raise ValueError
        return label, float(value)
    except ValueError:
        raise click.BadParameter(f"expected LABEL=WEIGHT, got {text!r}", param_hint=source)


def _criterion(text: str) -> dict[str, Any]:
    if text == "rarity":
        return {"name": "rarity"}
    name, sep, location = text.partition("=")
    path = Path(location if sep else text)
    return {"name": name if sep else path.stem, "weights": io.read_label_map(path, key="weights")}


def check_weight_flags(
    weights_file: Path | None,
    scheme: str | None,
    assignments: tuple[str, ...],
    fill: str | None,
    criteria: tuple[str, ...],
) -> None:
    if weights_file is not None and (scheme or assignments or fill or criteria):
        raise click.UsageError("--weights cannot be combined with --scheme, --set, --fill or --criterion")
    if scheme is not None and not _SCHEME.fullmatch(scheme):
        raise click.BadParameter(f"cannot parse {scheme!r}", param_hint="--scheme")


def weight_spec(
    weights_file: Path | None,
    scheme: str | None,
    assignments: tuple[str, ...],
    fill: str | None,
    criteria: tuple[str, ...],
) -> WeightSpec:
    check_weight_flags(weights_file, scheme, assignments, fill, criteria)
    if weights_file is not None:
        return io.read_weight_config(weights_file)

    data: dict[str, Any] = {}
    weights: dict[str, float] = {}
    if scheme is not None:
        match = _SCHEME.fullmatch(scheme)
        assert match is not None
        data["scheme"] = match["scheme"]
        inline = match["inline"] or ""
        weights.update(_assignment(item, "--scheme") for item in inline.split(",") if item.strip())
    weights.update(_assignment(item, "--set") for item in assignments)
    if weights:
        data["weights"] = weights
    if fill is not None:
        data["fill"] = fill
    if criteria:
        data["criteria"] = [_criterion(text) for text in criteria]
    try:
        return WeightSpec.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise ParseError("weight options", ".".join(str(p) for p in first["loc"]) or "(root)", first["msg"])


def single_source(predictions: Path | None, confusion: Path | None) -> None:
    if (predictions is None) == (confusion is None):
        raise click.UsageError("give exactly one of --predictions or --confusion")


def read_source(predictions: Path | None, confusion: Path | None) -> tuple[ConfusionMatrix, Path]:
    if predictions is not None:
        return io.read_predictions(predictions).confusion(), predictions
    assert confusion is not None
    return io.read_confusion(confusion), confusion
