from itertools import combinations

import numpy as np
import pytest

from core.errors import DuplicateRunError, EmptyDataError, UnknownMetricError
from evaluation import analysis
from evaluation.models import ConfusionMatrix, MetricKind, MetricReport, RunResult, WeightScheme, WeightSpec
from tests.factories import random_matrix

FLIP_SPEC = WeightSpec(scheme=WeightScheme.PARTIAL, weights={"B": 0.7})


def _run(name: str, counts: tuple[tuple[int, ...], ...], labels: tuple[str, ...] = ("A", "B", "C")) -> RunResult:
    return RunResult(name=name, matrix=ConfusionMatrix(labels=labels, counts=counts))


@pytest.fixture
def flip_runs() -> list[RunResult]:
    """`majority` is strong on the large class C, `minority` on the important class B."""
    return [
        _run("majority", ((1, 2, 7), (3, 4, 13), (1, 1, 68))),
        _run("minority", ((2, 3, 5), (1, 18, 1), (10, 20, 40))),
    ]


def _report(scores: dict[str, dict[MetricKind, float]]) -> MetricReport:
    runs = tuple(scores)
    metrics = tuple(next(iter(scores.values())))
    return MetricReport(
        scheme="rarity",
        metrics=metrics,
        runs=runs,
        labels=("A",),
        scores=scores,
        class_stats={},
    )


def test_single_run_single_metric(imbalanced: ConfusionMatrix) -> None:
    report = analysis.evaluate_suite([RunResult(name="only", matrix=imbalanced)], metrics=["accuracy"])

    assert report.metrics == (MetricKind.ACCURACY,)
    assert report.scores == {"only": {MetricKind.ACCURACY: 0.65}}
    assert report.weights == {}
    assert report.rankings == {MetricKind.ACCURACY: ("only",)}
    assert report.disagreements == ()


def test_ranking_flip(flip_runs: list[RunResult]) -> None:
    report = analysis.evaluate_suite(flip_runs, FLIP_SPEC, ["accuracy", "wba"])

    assert report.scheme == "partial(fill=even)"
    assert report.rankings[MetricKind.ACCURACY] == ("majority", "minority")
    assert report.rankings[MetricKind.WBA] == ("minority", "majority")
    assert report.disagreements[0].pairs == (("majority", "minority"),)
    assert not report.disagreements[0].agree
    assert report.weights["majority"].weights == pytest.approx((0.15, 0.7, 0.15))


def test_three_runs_four_metrics(flip_runs: list[RunResult], imbalanced: ConfusionMatrix) -> None:
    runs = [*flip_runs, RunResult(name="imbalanced", matrix=imbalanced)]

    report = analysis.evaluate_suite(runs, FLIP_SPEC, ["accuracy", "f1", "ba", "wba"])

    assert set(report.scores) == {"majority", "minority", "imbalanced"}
    assert all(len(scores) == 4 for scores in report.scores.values())
    assert all(sorted(ranking) == sorted(report.runs) for ranking in report.rankings.values())
    assert len(report.disagreements) == 6


def test_identical_runs_tie(imbalanced: ConfusionMatrix) -> None:
    runs = [RunResult(name="b", matrix=imbalanced), RunResult(name="a", matrix=imbalanced)]

    report = analysis.evaluate_suite(runs)

    assert all(ranking == ("a", "b") for ranking in report.rankings.values())
    assert all(groups == (("a", "b"),) for groups in report.ties.values())
    assert all(item.agree for item in report.disagreements)


def test_union_alignment() -> None:
    first = _run("first", ((3, 1), (0, 2)), ("A", "B"))
    second = _run("second", ((2, 0, 1), (0, 1, 1), (0, 0, 0)), ("B", "A", "X"))

    report = analysis.evaluate_suite([first, second], metrics=["accuracy", "ba"])

    assert report.labels == ("A", "B", "X")
    assert report.class_stats["first"].get("X").support == 0
    assert report.scores["second"][MetricKind.ACCURACY] == pytest.approx(3 / 5)


def test_union_is_sorted_whatever_the_run_order() -> None:
    first = _run("first", ((3, 1), (0, 2)), ("C", "B"))
    second = _run("second", ((2, 0), (1, 1)), ("B", "A"))

    forward = analysis.evaluate_suite([first, second], metrics=["accuracy"])
    backward = analysis.evaluate_suite([second, first], metrics=["accuracy"])

    assert forward.labels == backward.labels == ("A", "B", "C")


def test_union_keeps_a_fixed_label_order() -> None:
    free = _run("free", ((2, 0), (1, 1)), ("A", "B"))
    fixed = _run("fixed", ((3, 1), (0, 2)), ("C", "B")).model_copy(update={"fixed_order": True})

    assert analysis.unified_labels([free, fixed]) == ("C", "B", "A")


def test_rarity_weights_come_from_ground_truth(flip_runs: list[RunResult]) -> None:
    report = analysis.evaluate_suite(flip_runs)

    assert report.weights["majority"] == report.weights["minority"]


def test_suite_errors(imbalanced: ConfusionMatrix) -> None:
    run = RunResult(name="x", matrix=imbalanced)

    with pytest.raises(EmptyDataError):
        analysis.evaluate_suite([])
    with pytest.raises(DuplicateRunError):
        analysis.evaluate_suite([run, run])
    with pytest.raises(UnknownMetricError):
        analysis.evaluate_suite([run], metrics=["auc"])


def test_deterministic(flip_runs: list[RunResult]) -> None:
    first = analysis.evaluate_suite(flip_runs, FLIP_SPEC).model_dump_json()
    second = analysis.evaluate_suite(flip_runs, FLIP_SPEC).model_dump_json()

    assert first == second


def test_rank_by() -> None:
    report = _report(
        {
            "a": {MetricKind.ACCURACY: 0.9},
            "b": {MetricKind.ACCURACY: 0.5},
            "c": {MetricKind.ACCURACY: 0.7},
        },
    )

    assert analysis.rank_by(report, "accuracy") == ("a", "c", "b")
    with pytest.raises(UnknownMetricError):
        analysis.rank_by(report, "wba")


def test_rank_by_tie_and_single_run() -> None:
    tied = _report({"b": {MetricKind.BA: 0.5}, "a": {MetricKind.BA: 0.5}})
    single = _report({"solo": {MetricKind.BA: 0.1}})

    assert analysis.rank_by(tied, MetricKind.BA) == ("a", "b")
    assert analysis.rank_by(single, MetricKind.BA) == ("solo",)


def test_disagreements() -> None:
    report = _report(
        {
            "a": {MetricKind.ACCURACY: 0.9, MetricKind.WBA: 0.7, MetricKind.BA: 0.9},
            "b": {MetricKind.ACCURACY: 0.8, MetricKind.WBA: 0.8, MetricKind.BA: 0.8},
            "c": {MetricKind.ACCURACY: 0.1, MetricKind.WBA: 0.1, MetricKind.BA: 0.1},
        },
    )

    flipped = analysis.disagreements(report, "accuracy", "wba")
    assert flipped.pairs == (("a", "b"),)
    assert not flipped.agree
    assert analysis.disagreements(report, "wba", "accuracy").pairs == flipped.pairs
    assert analysis.disagreements(report, "accuracy", "ba").agree
    assert analysis.disagreements(report, "wba", "wba").pairs == ()
    with pytest.raises(UnknownMetricError):
        analysis.disagreements(report, "accuracy", "f1")


@pytest.mark.parametrize("seed", range(3))
def test_discordant_pairs_match_brute_force(seed: int) -> None:
    rng = np.random.default_rng(500 + seed)
    runs = [RunResult(name=f"run{i}", matrix=random_matrix(rng, 4, 40, all_present=True)) for i in range(6)]
    aligned = [run.model_copy(update={"matrix": run.matrix.aligned(("c0", "c1", "c2", "c3"))}) for run in runs]

    report = analysis.evaluate_suite(aligned, WeightSpec(), ["accuracy", "ba", "wba"])

    for item in report.disagreements:
        a, b = item.metric_a, item.metric_b
        expected = sum(
            1
            for x, y in combinations(report.runs, 2)
            if (report.score(x, a) - report.score(y, a)) * (report.score(x, b) - report.score(y, b)) < 0
        )
        assert len(item.pairs) == expected
