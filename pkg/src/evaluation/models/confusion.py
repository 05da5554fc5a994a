from collections import Counter
from collections.abc import Iterable, Sequence
from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, NonNegativeInt, model_validator

from core.errors import LabelMismatchError


class ConfusionMatrix(BaseModel):
    """Square count matrix: `counts[i][j]` items of true class `labels[i]` predicted as `labels[j]`."""

    model_config = ConfigDict(frozen=True)

    labels: tuple[str, ...]
    counts: tuple[tuple[NonNegativeInt, ...], ...]

    @model_validator(mode="after")
    def _check_shape(self) -> Self:
        if not self.labels:
            raise ValueError("at least one label is required")
        duplicates = sorted(label for label, seen in Counter(self.labels).items() if seen > 1)
        if duplicates:
            raise ValueError(f"duplicate labels: {', '.join(duplicates)}")
        size = len(self.labels)
        if len(self.counts) != size or any(len(row) != size for row in self.counts):
            raise ValueError(f"counts must be a {size}x{size} matrix")
        return self

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]], labels: Sequence[str] | None = None) -> Self:
        """Count (true, predicted) pairs; without `labels` the label set is the sorted union of both columns."""
        tally = Counter(pairs)
        if labels is None:
            labels = sorted({label for pair in tally for label in pair})
        index = {label: i for i, label in enumerate(labels)}
        unknown = sorted({label for pair in tally for label in pair if label not in index})
        if unknown:
            raise LabelMismatchError(f"labels not in label set: {', '.join(unknown)}")
        counts = [[0] * len(labels) for _ in labels]
        for (true, predicted), count in tally.items():
            counts[index[true]][index[predicted]] += count
        return cls(labels=tuple(labels), counts=tuple(tuple(row) for row in counts))

    @classmethod
    def from_array(cls, labels: Sequence[str], counts: np.ndarray) -> Self:
        return cls(labels=tuple(labels), counts=tuple(tuple(int(x) for x in row) for row in counts))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    @property
    def support(self) -> tuple[int, ...]:
        """Row sums, the true cardinality n_i of each class."""
        return tuple(sum(row) for row in self.counts)

    @property
    def correct(self) -> tuple[int, ...]:
        return tuple(self.counts[i][i] for i in range(self.size))

    @property
    def predicted(self) -> tuple[int, ...]:
        """Column sums."""
        return tuple(sum(row[j] for row in self.counts) for j in range(self.size))

    def aligned(self, labels: Sequence[str]) -> "ConfusionMatrix":
        """Re-express over `labels` (a superset of this matrix's labels); new classes get zero rows and columns."""
        if tuple(labels) == self.labels:
            return self
        missing = [label for label in self.labels if label not in labels]
        if missing:
            raise LabelMismatchError(f"target label set lacks: {', '.join(missing)}")
        position = {label: i for i, label in enumerate(self.labels)}
        counts = tuple(
            tuple(
                self.counts[position[true]][position[pred]] if true in position and pred in position else 0
                for pred in labels
            )
            for true in labels
        )
        return ConfusionMatrix(labels=tuple(labels), counts=counts)
