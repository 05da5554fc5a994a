from datetime import datetime

from pydantic import BaseModel, ConfigDict, Field, computed_field

from evaluation.models.confusion import ConfusionMatrix
from evaluation.models.scores import ClassStats, DegenerateNote, MetricKind
from evaluation.models.weights import WeightVector


class RunResult(BaseModel):
    """One classifier's results on a test set."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(min_length=1)
    matrix: ConfusionMatrix
    source: str | None = None
    fixed_order: bool = False
    created_at: datetime | None = None


class Disagreement(BaseModel):
    """Run pairs ordered oppositely by two metrics."""

    model_config = ConfigDict(frozen=True)

    metric_a: MetricKind
    metric_b: MetricKind
    pairs: tuple[tuple[str, str], ...] = ()

    @computed_field  # type: ignore[prop-decorator]
    @property
    def agree(self) -> bool:
        return not self.pairs


class MetricReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    scheme: str
    metrics: tuple[MetricKind, ...]
    runs: tuple[str, ...]
    labels: tuple[str, ...]
    weights: dict[str, WeightVector] = Field(default_factory=dict)
    scores: dict[str, dict[MetricKind, float]]
    notes: dict[str, dict[MetricKind, tuple[DegenerateNote, ...]]] = Field(default_factory=dict)
    class_stats: dict[str, ClassStats]
    rankings: dict[MetricKind, tuple[str, ...]] = Field(default_factory=dict)
    ties: dict[MetricKind, tuple[tuple[str, ...], ...]] = Field(default_factory=dict)
    disagreements: tuple[Disagreement, ...] = ()

    def score(self, run: str, metric: MetricKind) -> float:
        return self.scores[run][metric]
