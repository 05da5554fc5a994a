from typing import Self

from pydantic import BaseModel, Field, model_validator

from evaluation.models import DEFAULT_METRICS, ConfusionMatrix, MetricKind, RunResult, WeightSpec


class RunInput(BaseModel):
    """A run given inline, as a confusion matrix or as (true, predicted) label pairs"""

    name: str = Field(default="run", min_length=1)
    matrix: ConfusionMatrix | None = None
    pairs: list[tuple[str, str]] | None = None

    @model_validator(mode="after")
    def _one_source(self) -> Self:
        if (self.matrix is None) == (self.pairs is None):
            raise ValueError("give exactly one of 'matrix' or 'pairs'")
        if self.pairs is not None and not self.pairs:
            raise ValueError("'pairs' must not be empty")
        return self

    def to_run(self) -> RunResult:
        matrix = self.matrix if self.matrix is not None else ConfusionMatrix.from_pairs(self.pairs or [])
        return RunResult(name=self.name, matrix=matrix, fixed_order=self.matrix is not None)


class EvaluateRequest(RunInput):
    weights: WeightSpec = WeightSpec()
    metrics: list[MetricKind] = Field(default_factory=lambda: list(DEFAULT_METRICS), min_length=1)


class CompareRequest(BaseModel):
    runs: list[RunInput] = Field(min_length=2)
    weights: WeightSpec = WeightSpec()
    metrics: list[MetricKind] = Field(default_factory=lambda: list(DEFAULT_METRICS), min_length=1)


class WeightsRequest(BaseModel):
    spec: WeightSpec
    labels: list[str] | None = None


class WeightsResponse(BaseModel):
    """Resolved class weights, keyed by label in class order"""

    scheme: str
    weights: dict[str, float]


class ProfileRequest(BaseModel):
    labels: list[str] = Field(min_length=1)
