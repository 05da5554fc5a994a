from enum import StrEnum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


class MetricKind(StrEnum):
    ACCURACY = "accuracy"
    BA = "ba"
    WBA = "wba"
    PRECISION = "precision"
    RECALL = "recall"
    F1 = "f1"
    WPRECISION = "wprecision"
    WRECALL = "wrecall"
    WF1 = "wf1"

    @property
    def weighted(self) -> bool:
        return self in WEIGHTED_KINDS


WEIGHTED_KINDS = frozenset({MetricKind.WBA, MetricKind.WPRECISION, MetricKind.WRECALL, MetricKind.WF1})

DEFAULT_METRICS = (MetricKind.ACCURACY, MetricKind.BA, MetricKind.WBA, MetricKind.WF1)


class MacroKind(StrEnum):
    """Per-class component averaged by `weighted_macro`."""

    PRECISION = "precision"
    RECALL = "recall"
    F1 = "f1"


class DegenerateNote(BaseModel):
    """A per-class component that was undefined and how the metric resolved it."""

    model_config = ConfigDict(frozen=True)

    label: str
    component: str
    resolution: Literal["excluded", "zero"]


class MetricValue(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: MetricKind
    value: float = Field(ge=0.0, le=1.0)
    notes: tuple[DegenerateNote, ...] = ()


class ClassStat(BaseModel):
    """Counts and per-class scores of one class; `None` marks an undefined score."""

    model_config = ConfigDict(frozen=True)

    label: str
    support: int
    correct: int
    predicted: int
    frequency: float
    accuracy: float | None
    precision: float | None
    recall: float | None
    f1: float | None


class ClassStats(BaseModel):
    model_config = ConfigDict(frozen=True)

    total: int
    classes: tuple[ClassStat, ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(stat.label for stat in self.classes)

    @property
    def accuracies(self) -> tuple[float | None, ...]:
        return tuple(stat.accuracy for stat in self.classes)

    def get(self, label: str) -> ClassStat:
        for stat in self.classes:
            if stat.label == label:
                return stat
        raise KeyError(label)
