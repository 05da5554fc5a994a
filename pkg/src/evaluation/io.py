"""Reading predictions, confusion matrices and weight configs; writing reports.

CSV files are UTF-8, comma separated with `"` quoting; LF and CRLF are both accepted
on read and LF is written. Labels are opaque strings: trimmed, never coerced to numbers.
"""

import csv
import io
import json
import re
from collections.abc import Iterator
from pathlib import Path

from loguru import logger
from pydantic import TypeAdapter, ValidationError

from core.errors import ParseError
from evaluation.models import ConfusionMatrix, MetricReport, PredictionsFile, RunResult, WeightSpec
from evaluation.render import DEFAULT_DECIMALS, ReportFormat, render

PREDICTIONS_HEADER = ("true", "predicted")
CONFUSION_CORNER = "label"

_COUNT = re.compile(r"[0-9]+")
_LABEL_MAP = TypeAdapter(dict[str, float])


def _read_text(path: Path) -> str:
    try:
        return path.read_bytes().decode("utf-8-sig")
    except UnicodeDecodeError as e:
        raise ParseError(str(path), f"byte {e.start}", "file is not valid UTF-8")


def _rows(path: Path, text: str) -> Iterator[tuple[int, list[str]]]:
    """Non-blank CSV records with the line number each starts on."""
    reader = csv.reader(io.StringIO(text, newline=""))
    line = 1
    try:
        for record in reader:
            if any(field.strip() for field in record):
                yield line, [field.strip() for field in record]
            line = reader.line_num + 1
    except csv.Error as e:
        raise ParseError(str(path), f"line {reader.line_num}", str(e))


def _validation_position(error: ValidationError) -> tuple[str, str]:
    first = error.errors()[0]
    path = ".".join(str(part) for part in first["loc"]) or "(root)"
    return path, first["msg"]


def read_predictions(path: Path | str) -> PredictionsFile:
    path = Path(path)
    rows = _rows(path, _read_text(path))
    header = next(rows, None)
    if header is None:
        raise ParseError(str(path), "line 1", "file is empty")
    line, fields = header
    if tuple(fields) != PREDICTIONS_HEADER:
        raise ParseError(str(path), f"line {line}", f"expected header {','.join(PREDICTIONS_HEADER)!r}")

    pairs = []
    for line, fields in rows:
        if len(fields) != 2 or not all(fields):
            raise ParseError(str(path), f"line {line}", "expected 2 non-empty fields: true,predicted")
        pairs.append((fields[0], fields[1]))
    if not pairs:
        raise ParseError(str(path), f"line {line + 1}", "no data rows")

    logger.debug("Read {} predictions from {}", len(pairs), path)
    return PredictionsFile(source=str(path), rows=tuple(pairs))


def read_confusion(path: Path | str) -> ConfusionMatrix:
    path = Path(path)
    rows = _rows(path, _read_text(path))
    header = next(rows, None)
    if header is None:
        raise ParseError(str(path), "line 1", "file is empty")
    line, fields = header
    if not fields or fields[0] != CONFUSION_CORNER or len(fields) < 2 or not all(fields[1:]):
        raise ParseError(str(path), f"line {line}", f"expected header '{CONFUSION_CORNER},<label1>,...,<labelC>'")
    labels = tuple(fields[1:])

    counts: list[tuple[int, ...]] = []
    for line, fields in rows:
        if len(counts) == len(labels):
            raise ParseError(str(path), f"line {line}", f"more than {len(labels)} rows; the matrix must be square")
        if len(fields) != len(labels) + 1:
            raise ParseError(str(path), f"line {line}", f"expected a label and {len(labels)} counts")
        expected = labels[len(counts)]
        if fields[0] != expected:
            raise ParseError(str(path), f"line {line}", f"row label {fields[0]!r} does not match column label {expected!r}")
        for column, value in zip(labels, fields[1:], strict=True):
            if not _COUNT.fullmatch(value):
                raise ParseError(str(path), f"line {line}", f"count for column {column!r} is not a non-negative integer: {value!r}")
        counts.append(tuple(int(value) for value in fields[1:]))
    if len(counts) != len(labels):
        raise ParseError(str(path), f"line {line + 1}", f"expected {len(labels)} rows, found {len(counts)}")

    try:
        return ConfusionMatrix(labels=labels, counts=tuple(counts))
    except ValidationError as e:
        _, reason = _validation_position(e)
        raise ParseError(str(path), "line 1", reason)


def write_confusion(cm: ConfusionMatrix, path: Path | str) -> None:
    with Path(path).open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow([CONFUSION_CORNER, *cm.labels])
        for label, row in zip(cm.labels, cm.counts, strict=True):
            writer.writerow([label, *row])


def parse_weight_config(text: str, source: str = "<config>") -> WeightSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(source, f"line {e.lineno} column {e.colno}", e.msg)
    if not isinstance(data, dict):
        raise ParseError(source, "(root)", "weight config must be a JSON object")
    try:
        return WeightSpec.model_validate(data)
    except ValidationError as e:
        raise ParseError(source, *_validation_position(e))


def read_weight_config(path: Path | str) -> WeightSpec:
    path = Path(path)
    return parse_weight_config(_read_text(path), str(path))


def read_report(path: Path | str) -> MetricReport:
    path = Path(path)
    try:
        return MetricReport.model_validate_json(_read_text(path))
    except ValidationError as e:
        raise ParseError(str(path), *_validation_position(e))


def write_report(
    report: MetricReport,
    fmt: ReportFormat,
    path: Path | str,
    decimals: int = DEFAULT_DECIMALS,
) -> None:
    Path(path).write_text(render(report, fmt, decimals), encoding="utf-8", newline="\n")
    logger.debug("Wrote {} report to {}", fmt, path)


def read_label_map(path: Path | str, key: str | None = None) -> dict[str, float]:
    """A JSON object of label -> number, either bare or nested under `key`."""
    path = Path(path)
    text = _read_text(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(str(path), f"line {e.lineno} column {e.colno}", e.msg)
    prefix = ""
    if key is not None and isinstance(data, dict) and isinstance(data.get(key), dict):
        data, prefix = data[key], f"{key}."
    try:
        return _LABEL_MAP.validate_python(data)
    except ValidationError as e:
        position, reason = _validation_position(e)
        raise ParseError(str(path), prefix + position, reason)


def _is_confusion(path: Path) -> bool:
    header = next(_rows(path, _read_text(path)), None)
    if header is not None and tuple(header[1]) == PREDICTIONS_HEADER:
        return False
    if header is not None and header[1][:1] == [CONFUSION_CORNER]:
        return True
    raise ParseError(str(path), "line 1", "neither a predictions file nor a confusion matrix")


def read_matrix(path: Path | str) -> ConfusionMatrix:
    """Confusion matrix from either CSV format, told apart by the header."""
    path = Path(path)
    return read_confusion(path) if _is_confusion(path) else read_predictions(path).confusion()


def read_run(name: str, path: Path | str) -> RunResult:
    """A named run from either CSV format; a confusion-matrix file fixes the run's label order."""
    path = Path(path)
    if _is_confusion(path):
        return RunResult(name=name, matrix=read_confusion(path), source=str(path), fixed_order=True)
    return RunResult(name=name, matrix=read_predictions(path).confusion(), source=str(path))
