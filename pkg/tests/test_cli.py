import json
from collections.abc import Iterator
from pathlib import Path

import pytest
from click.testing import CliRunner, Result

from cli import EXIT_INVALID, EXIT_IO_ERROR, cli
from core import __version__
from core.logs import configure_logger
from evaluation.models import MetricReport


@pytest.fixture(autouse=True)
def restore_logger() -> Iterator[None]:
    yield
    configure_logger()


def _invoke(runner: CliRunner, *args: str | Path) -> Result:
    return runner.invoke(cli, [str(arg) for arg in args])


def _golden(fixtures: Path, name: str) -> str:
    return (fixtures / "golden" / name).read_text(encoding="utf-8")


def test_version(runner: CliRunner) -> None:
    result = _invoke(runner, "--version")

    assert result.exit_code == 0
    assert __version__ in result.stdout


def test_evaluate_golden(runner: CliRunner, fixtures: Path) -> None:
    args = ("evaluate", "--confusion", fixtures / "imbalanced.csv", "--scheme", "partial-user(B=0.7)", "--metrics", "accuracy,ba,wba")

    first = _invoke(runner, *args)
    second = _invoke(runner, *args)

    assert first.exit_code == 0, first.stderr
    assert first.stdout == _golden(fixtures, "evaluate_imbalanced.md")
    assert second.stdout == first.stdout


def test_evaluate_with_weight_config(runner: CliRunner, fixtures: Path) -> None:
    result = _invoke(
        runner,
        "evaluate",
        "--confusion",
        fixtures / "imbalanced.csv",
        "--weights",
        fixtures / "weights" / "partial_b.json",
        "--metrics",
        "wba",
        "--format",
        "json",
    )

    assert result.exit_code == 0, result.stderr
    report = json.loads(result.stdout)
    assert report["scores"]["imbalanced"]["wba"] == pytest.approx(0.2836, abs=1e-4)


def test_evaluate_identity_accuracy(runner: CliRunner, fixtures: Path) -> None:
    result = _invoke(runner, "evaluate", "--confusion", fixtures / "identity.csv", "--metrics", "accuracy")

    assert result.exit_code == 0
    assert "| identity | 1.000 |" in result.stdout


def test_evaluate_predictions_to_file(runner: CliRunner, fixtures: Path, tmp_path: Path) -> None:
    output = tmp_path / "report.csv"

    result = _invoke(
        runner,
        "evaluate",
        "--predictions",
        fixtures / "predictions.csv",
        "--name",
        "parser",
        "--format",
        "csv",
        "--output",
        output,
    )

    assert result.exit_code == 0, result.stderr
    assert result.stdout == ""
    lines = output.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "run,accuracy,ba,wba,wf1"
    assert lines[1].startswith("parser,0.5,")


def test_evaluate_rejects_two_sources(runner: CliRunner, fixtures: Path) -> None:
    result = _invoke(runner, "evaluate", "--predictions", fixtures / "predictions.csv", "--confusion", fixtures / "imbalanced.csv")

    assert result.exit_code == EXIT_INVALID
    assert "exactly one" in result.stderr


def test_compare_golden(runner: CliRunner, fixtures: Path) -> None:
    args = (
        "compare",
        "--run",
        f"majority={fixtures / 'runs' / 'majority.csv'}",
        "--run",
        f"minority={fixtures / 'runs' / 'minority.csv'}",
        "--scheme",
        "partial-user(B=0.7)",
        "--metrics",
        "accuracy,wba",
    )

    first = _invoke(runner, *args)
    second = _invoke(runner, *args)

    assert first.exit_code == 0, first.stderr
    assert first.stdout == _golden(fixtures, "compare_flip.md")
    assert second.stdout == first.stdout


def test_compare_identical_runs_tie(runner: CliRunner, fixtures: Path) -> None:
    path = fixtures / "imbalanced.csv"

    result = _invoke(runner, "compare", "--run", f"one={path}", "--run", f"two={path}", "--format", "json")

    assert result.exit_code == 0, result.stderr
    report = MetricReport.model_validate_json(result.stdout)
    assert all(item.agree for item in report.disagreements)
    assert all(groups == (("one", "two"),) for groups in report.ties.values())


@pytest.mark.parametrize(
    "runs",
    [
        ["only=imbalanced.csv"],
        ["same=imbalanced.csv", "same=identity.csv"],
        ["no-separator"],
    ],
)
def test_compare_invalid_runs(runner: CliRunner, fixtures: Path, runs: list[str]) -> None:
    args: list[str | Path] = ["compare"]
    for run in runs:
        name, _, file = run.partition("=")
        args += ["--run", f"{name}={fixtures / file}" if file else run]

    assert _invoke(runner, *args).exit_code == EXIT_INVALID


def test_weights_golden(runner: CliRunner, fixtures: Path) -> None:
    result = _invoke(runner, "weights", "--scheme", "user", "--set", "A=0.5", "--set", "B=0.25", "--set", "C=0.25")

    assert result.exit_code == 0, result.stderr
    assert result.stdout == _golden(fixtures, "weights_user.json")


def test_weights_rarity_from_profile(runner: CliRunner, fixtures: Path) -> None:
    result = _invoke(runner, "weights", "--scheme", "rarity", "--frequencies", fixtures / "weights" / "amazon_profile.json")

    assert result.exit_code == 0, result.stderr
    weights = json.loads(result.stdout)["weights"]
    assert list(weights.values()) == pytest.approx([0.209, 0.368, 0.255, 0.136, 0.030], abs=0.002)


def test_weights_composite(runner: CliRunner, fixtures: Path) -> None:
    from_config = _invoke(runner, "weights", "--weights", fixtures / "weights" / "amazon_composite.json")
    from_flags = _invoke(
        runner,
        "weights",
        "--scheme",
        "composite",
        "--criterion",
        "rarity",
        "--criterion",
        f"user={fixtures / 'weights' / 'amazon_user.json'}",
        "--frequencies",
        fixtures / "weights" / "amazon_profile.json",
    )

    assert from_config.exit_code == 0, from_config.stderr
    assert from_flags.exit_code == 0, from_flags.stderr
    weights = json.loads(from_config.stdout)["weights"]
    assert list(weights.values()) == pytest.approx([0.942, 0.0, 0.0, 0.0, 0.058], abs=0.001)
    assert json.loads(from_flags.stdout)["weights"] == weights


def test_weights_over_predictions(runner: CliRunner, fixtures: Path) -> None:
    result = _invoke(runner, "weights", "--scheme", "partial(B=0.5)", "--predictions", fixtures / "predictions.csv")

    assert result.exit_code == 0, result.stderr
    assert json.loads(result.stdout)["weights"] == pytest.approx({"A": 0.25, "B": 0.5, "C": 0.25})


def test_profile_golden(runner: CliRunner, fixtures: Path) -> None:
    result = _invoke(runner, "profile", "--predictions", fixtures / "predictions_two_class.csv")

    assert result.exit_code == 0, result.stderr
    assert result.stdout == _golden(fixtures, "profile_two_class.json")


def test_profile_with_skew(runner: CliRunner, fixtures: Path) -> None:
    result = _invoke(runner, "profile", "--predictions", fixtures / "predictions.csv")

    profile = json.loads(result.stdout)
    assert profile["total"] == 4
    assert profile["classes"] == 3
    assert profile["skew"] == pytest.approx(1.7321, abs=1e-4)


def test_profile_uniform_and_confusion(runner: CliRunner, fixtures: Path) -> None:
    uniform = json.loads(_invoke(runner, "profile", "--predictions", fixtures / "predictions_uniform.csv").stdout)
    confusion = json.loads(_invoke(runner, "profile", "--confusion", fixtures / "imbalanced.csv").stdout)

    assert uniform["infrequent_count"] == 0
    assert confusion["counts"] == {"A": 10, "B": 20, "C": 70}


@pytest.mark.parametrize(
    ("args", "exit_code"),
    [
        (("evaluate", "--confusion", "missing.csv"), EXIT_IO_ERROR),
        (("evaluate", "--confusion", "imbalanced.csv", "--weights", "weights/broken_user.json"), EXIT_INVALID),
        (("evaluate", "--confusion", "imbalanced.csv", "--weights", "weights/partial_b.json", "--scheme", "rarity"), EXIT_INVALID),
        (("evaluate", "--confusion", "imbalanced.csv", "--metrics", "accuracy,auc"), EXIT_INVALID),
        (("evaluate", "--confusion", "imbalanced.csv", "--scheme", "user(A=0.5)"), EXIT_INVALID),
        (("evaluate", "--confusion", "predictions.csv"), EXIT_INVALID),
        (("profile",), EXIT_INVALID),
        (("weights", "--scheme", "rarity", "--labels", "A,B"), EXIT_INVALID),
        (("weights", "--frequencies", "weights/amazon_profile.json", "--labels", "1,5,9"), EXIT_INVALID),
    ],
)
def test_exit_codes(runner: CliRunner, fixtures: Path, args: tuple[str, ...], exit_code: int) -> None:
    resolved = [str(fixtures / arg) if arg.endswith((".csv", ".json")) else arg for arg in args]

    result = _invoke(runner, *resolved)

    assert result.exit_code == exit_code
    assert result.stderr.startswith(("Error:", "Usage:"))
