"""Multi-run, multi-metric evaluation: score tables, rankings and ranking disagreements."""

from collections.abc import Iterable, Mapping, Sequence
from itertools import combinations, groupby

from loguru import logger

from core.errors import DuplicateRunError, EmptyDataError, UnknownMetricError
from evaluation import metrics as metric_ops
from evaluation import weighting
from evaluation.models import (
    DEFAULT_METRICS,
    DegenerateNote,
    Disagreement,
    MetricKind,
    MetricReport,
    RunResult,
    WeightSpec,
    WeightVector,
)

Scores = Mapping[str, Mapping[MetricKind, float]]


def unified_labels(runs: Sequence[RunResult]) -> tuple[str, ...]:
    """Union of the runs' label sets.

    Sorted unless a run carries a fixed label order; then the first such run's order
    leads and unseen labels follow as they appear.
    """
    ordered = [run for run in runs if run.fixed_order]
    if not ordered:
        return tuple(sorted({label for run in runs for label in run.matrix.labels}))
    labels = list(ordered[0].matrix.labels)
    for run in runs:
        labels.extend(label for label in run.matrix.labels if label not in labels)
    return tuple(labels)


def _check_runs(runs: Sequence[RunResult]) -> None:
    if not runs:
        raise EmptyDataError("no runs to evaluate")
    seen: set[str] = set()
    for run in runs:
        if run.name in seen:
            raise DuplicateRunError(f"duplicate run name {run.name!r}")
        seen.add(run.name)


def _metric_list(requested: Iterable[MetricKind | str]) -> tuple[MetricKind, ...]:
    kinds: list[MetricKind] = []
    for name in requested:
        try:
            kind = MetricKind(name)
        except ValueError:
            raise UnknownMetricError(f"unknown metric {name!r}; choose from {', '.join(MetricKind)}")
        if kind not in kinds:
            kinds.append(kind)
    if not kinds:
        raise UnknownMetricError("no metrics requested")
    return tuple(kinds)


def _ranking(scores: Scores, runs: Iterable[str], metric: MetricKind) -> tuple[str, ...]:
    return tuple(sorted(runs, key=lambda run: (-scores[run][metric], run)))


def _tie_groups(scores: Scores, ranking: Sequence[str], metric: MetricKind) -> tuple[tuple[str, ...], ...]:
    groups = (tuple(group) for _, group in groupby(ranking, key=lambda run: scores[run][metric]))
    return tuple(group for group in groups if len(group) > 1)


def _discordant(scores: Scores, runs: Iterable[str], a: MetricKind, b: MetricKind) -> tuple[tuple[str, str], ...]:
    pairs = []
    for x, y in combinations(sorted(runs), 2):
        delta_a = scores[x][a] - scores[y][a]
        delta_b = scores[x][b] - scores[y][b]
        if (delta_a > 0 > delta_b) or (delta_a < 0 < delta_b):
            pairs.append((x, y))
    return tuple(pairs)


def evaluate_suite(
    runs: Sequence[RunResult],
    spec: WeightSpec | None = None,
    metrics: Iterable[MetricKind | str] = DEFAULT_METRICS,
) -> MetricReport:
    """Score every run under every metric and attach rankings and pairwise metric disagreements.

    Runs are aligned on the union of their label sets. Weights are resolved from each run's
    ground truth, which is the same for runs that share a test set.
    """
    _check_runs(runs)
    spec = spec or WeightSpec()
    kinds = _metric_list(metrics)
    labels = unified_labels(runs)
    aligned = [run.matrix.aligned(labels) for run in runs]
    if len({matrix.support for matrix in aligned}) > 1:
        logger.warning("Runs disagree on the ground-truth class counts; weights are resolved per run")

    needs_weights = any(kind.weighted for kind in kinds)
    weights: dict[str, WeightVector] = {}
    scores: dict[str, dict[MetricKind, float]] = {}
    notes: dict[str, dict[MetricKind, tuple[DegenerateNote, ...]]] = {}
    class_stats = {}
    for run, matrix in zip(runs, aligned, strict=True):
        w = weighting.resolve(spec, matrix) if needs_weights else None
        if w is not None:
            weights[run.name] = w
        class_stats[run.name] = metric_ops.per_class_accuracy(matrix)
        values = {kind: metric_ops.compute(matrix, kind, w) for kind in kinds}
        scores[run.name] = {kind: value.value for kind, value in values.items()}
        run_notes = {kind: value.notes for kind, value in values.items() if value.notes}
        if run_notes:
            notes[run.name] = run_notes
        logger.debug("Scored run {}: {}", run.name, scores[run.name])

    names = [run.name for run in runs]
    rankings = {kind: _ranking(scores, names, kind) for kind in kinds}
    ties = {kind: groups for kind in kinds if (groups := _tie_groups(scores, rankings[kind], kind))}
    disagreements = tuple(
        Disagreement(metric_a=a, metric_b=b, pairs=_discordant(scores, names, a, b)) for a, b in combinations(kinds, 2)
    )
    return MetricReport(
        scheme=spec.describe(),
        metrics=kinds,
        runs=tuple(names),
        labels=labels,
        weights=weights,
        scores=scores,
        notes=notes,
        class_stats=class_stats,
        rankings=rankings,
        ties=ties,
        disagreements=disagreements,
    )


def _require_metric(report: MetricReport, metric: MetricKind | str) -> MetricKind:
    try:
        kind = MetricKind(metric)
    except ValueError:
        raise UnknownMetricError(f"unknown metric {metric!r}")
    if kind not in report.metrics:
        raise UnknownMetricError(f"metric {kind} is not part of the report")
    return kind


def rank_by(report: MetricReport, metric: MetricKind | str) -> tuple[str, ...]:
    """Runs by descending score; ties are broken by run name."""
    kind = _require_metric(report, metric)
    return _ranking(report.scores, report.runs, kind)


def disagreements(report: MetricReport, metric_a: MetricKind | str, metric_b: MetricKind | str) -> Disagreement:
    """Run pairs ranked strictly oppositely by the two metrics; ties count as neither."""
    a = _require_metric(report, metric_a)
    b = _require_metric(report, metric_b)
    return Disagreement(metric_a=a, metric_b=b, pairs=_discordant(report.scores, report.runs, a, b))
