"""Class-weighted negative log-likelihood over a softmax, with its analytic gradient.

The loss is normalized by the summed sample weights of the batch rather than by the
batch size, so uniform class weights reproduce the plain mean cross-entropy.
"""

from typing import Any, Self

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from core.errors import EmptyDataError, LabelMismatchError, WeightError
from evaluation import weighting
from evaluation.models import WeightVector


class LogitBatch(BaseModel):
    """B x C logits, the true class index of each item and the class weights."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    logits: np.ndarray
    targets: np.ndarray
    weights: WeightVector

    @field_validator("logits", mode="before")
    @classmethod
    def _as_logits(cls, value: Any) -> np.ndarray:
        logits = np.array(value, dtype=np.float64)
        if logits.ndim != 2 or logits.shape[0] < 1 or logits.shape[1] < 1:
            raise ValueError("logits must be a non-empty B x C matrix")
        if not np.all(np.isfinite(logits)):
            raise ValueError("logits must be finite")
        return logits

    @field_validator("targets", mode="before")
    @classmethod
    def _as_targets(cls, value: Any) -> np.ndarray:
        targets = np.array(value)
        if targets.ndim != 1 or not np.issubdtype(targets.dtype, np.integer):
            raise ValueError("targets must be a 1-d array of class indices")
        return targets.astype(np.int64)

    @model_validator(mode="after")
    def _check_shapes(self) -> Self:
        batch, classes = self.logits.shape
        if self.targets.shape != (batch,):
            raise ValueError(f"expected {batch} targets, got {self.targets.shape[0]}")
        if np.any(self.targets < 0) or np.any(self.targets >= classes):
            raise ValueError(f"target indices must lie in [0, {classes})")
        if len(self.weights.weights) != classes:
            raise LabelMismatchError(f"{classes} logit columns but {len(self.weights.weights)} class weights")
        return self

    @property
    def sample_weights(self) -> np.ndarray:
        return np.asarray(self.weights.weights, dtype=np.float64)[self.targets]


def log_softmax(logits: np.ndarray) -> np.ndarray:
    shifted = logits - logits.max(axis=1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))


def _normalized_sample_weights(batch: LogitBatch) -> np.ndarray:
    violations = weighting.validate(batch.weights)
    if violations:
        raise WeightError("class weights are not on the simplex", violations)
    sample = batch.sample_weights
    total = sample.sum()
    if total <= 0.0:
        raise EmptyDataError("every item belongs to a zero-weight class; the loss is undefined")
    return sample / total


def weighted_nll(batch: LogitBatch) -> float:
    scale = _normalized_sample_weights(batch)
    picked = log_softmax(batch.logits)[np.arange(len(batch.targets)), batch.targets]
    return max(0.0, float(np.dot(scale, -picked)))


def weighted_nll_grad(batch: LogitBatch) -> np.ndarray:
    scale = _normalized_sample_weights(batch)
    grad = np.exp(log_softmax(batch.logits))
    grad[np.arange(len(batch.targets)), batch.targets] -= 1.0
    return scale[:, None] * grad
