"""Text renderings of a MetricReport: JSON (full precision), CSV score matrix, markdown."""

import csv
import io
from enum import StrEnum

from evaluation.models import MetricReport

DEFAULT_DECIMALS = 3


class ReportFormat(StrEnum):
    JSON = "json"
    CSV = "csv"
    MARKDOWN = "markdown"


def render_json(report: MetricReport) -> str:
    return report.model_dump_json(indent=2) + "\n"


def render_csv(report: MetricReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["run", *report.metrics])
    for run in report.runs:
        writer.writerow([run, *(repr(report.score(run, metric)) for metric in report.metrics)])
    return buffer.getvalue()


def _table(header: list[str], rows: list[list[str]]) -> list[str]:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join(["---"] * len(header)) + "|"]
    lines.extend("| " + " | ".join(row) + " |" for row in rows)
    return lines


def _ground_truth(report: MetricReport, run: str) -> tuple[object, ...]:
    stats = report.class_stats[run]
    weights = report.weights.get(run)
    return (*(stats.get(label).support for label in report.labels), weights)


def render_markdown(report: MetricReport, decimals: int = DEFAULT_DECIMALS) -> str:
    def fmt(value: float | None) -> str:
        return "n/a" if value is None else f"{value:.{decimals}f}"

    lines = ["# Evaluation report", "", f"Weight scheme: {report.scheme}", ""]
    lines += _table(
        ["run", *report.metrics],
        [[run, *(fmt(report.score(run, metric)) for metric in report.metrics)] for run in report.runs],
    )

    if len(report.runs) > 1:
        lines += ["", "## Rankings", ""]
        for metric, ranking in report.rankings.items():
            tied = "; ".join(" = ".join(group) for group in report.ties.get(metric, ()))
            lines.append(f"- {metric}: {' > '.join(ranking)}" + (f" (tied: {tied})" if tied else ""))
        if report.disagreements:
            lines += ["", "## Disagreements", ""]
            for item in report.disagreements:
                pairs = ", ".join(f"{x}/{y}" for x, y in item.pairs) if item.pairs else "none"
                lines.append(f"- {item.metric_a} vs {item.metric_b}: {pairs}")

    lines += ["", "## Per-class accuracy", ""]
    first = report.runs[0]
    weights = report.weights.get(first)
    header = ["class", "frequency", *(["weight"] if weights else []), *report.runs]
    rows = []
    for label in report.labels:
        row = [label, fmt(report.class_stats[first].get(label).frequency)]
        if weights:
            row.append(fmt(weights.weight(label)))
        row.extend(fmt(report.class_stats[run].get(label).accuracy) for run in report.runs)
        rows.append(row)
    lines += _table(header, rows)
    differing = [run for run in report.runs[1:] if _ground_truth(report, run) != _ground_truth(report, first)]
    if differing:
        lines += [
            "",
            f"Frequency and weight columns are those of run {first}; "
            f"{', '.join(differing)} differ in ground truth (see the JSON report for per-run weights).",
        ]

    if report.notes:
        lines += ["", "## Notes", ""]
        for run, by_metric in report.notes.items():
            for metric, notes in by_metric.items():
                for note in notes:
                    lines.append(f"- {run} / {metric}: {note.component} of class {note.label} {note.resolution}")
    return "\n".join(lines) + "\n"


def render(report: MetricReport, fmt: ReportFormat, decimals: int = DEFAULT_DECIMALS) -> str:
    match ReportFormat(fmt):
        case ReportFormat.JSON:
            return render_json(report)
        case ReportFormat.CSV:
            return render_csv(report)
        case ReportFormat.MARKDOWN:
            return render_markdown(report, decimals)
