"""Dataset characterization: class frequencies, infrequent classes and skew."""

from collections import Counter
from collections.abc import Mapping, Sequence

import numpy as np
from loguru import logger

from core.errors import EmptyDataError, EvaluationError
from evaluation.models import ConfusionMatrix, DatasetProfile


def class_counts(labels: Sequence[str]) -> dict[str, int]:
    """Occurrences per label, in lexicographic label order."""
    counts = Counter(labels)
    return {label: counts[label] for label in sorted(counts)}


def class_frequencies(labels: Sequence[str]) -> dict[str, float]:
    if not labels:
        raise EmptyDataError("no labels to profile")
    total = len(labels)
    return {label: n / total for label, n in class_counts(labels).items()}


def infrequent_classes(counts: Mapping[str, int]) -> tuple[str, ...]:
    """Classes occurring strictly less often than the average count per class."""
    if not counts:
        raise EmptyDataError("no classes to profile")
    average = sum(counts.values()) / len(counts)
    return tuple(label for label, n in counts.items() if n < average)


def skew(values: Sequence[float]) -> float:
    """Sample skewness, n / ((n-1)(n-2)) * sum(((x - mean) / s) ** 3) with s the n-1 standard deviation."""
    x = np.asarray(values, dtype=np.float64)
    n = x.size
    if n < 3:
        raise EvaluationError(f"skew needs at least 3 values, got {n}")
    s = x.std(ddof=1)
    if not s > 0:
        raise EvaluationError("skew is undefined for values with zero variance")
    z = (x - x.mean()) / s
    return float(n / ((n - 1) * (n - 2)) * np.sum(z**3))


def profile_counts(counts: Mapping[str, int]) -> DatasetProfile:
    total = sum(counts.values())
    if total <= 0:
        raise EmptyDataError("no items to profile")
    infrequent = infrequent_classes(counts)
    notes: list[str] = []
    try:
        value: float | None = skew(list(counts.values()))
    except EvaluationError as e:
        value = None
        notes.append(f"skew unavailable: {e}")
        logger.info("Skew unavailable: {}", e)
    return DatasetProfile(
        total=total,
        classes=len(counts),
        counts=dict(counts),
        frequencies={label: n / total for label, n in counts.items()},
        average_class_frequency=total / len(counts),
        infrequent_count=len(infrequent),
        infrequent_labels=infrequent,
        skew=value,
        notes=tuple(notes),
    )


def profile_labels(labels: Sequence[str]) -> DatasetProfile:
    if not labels:
        raise EmptyDataError("no labels to profile")
    return profile_counts(class_counts(labels))


def profile_confusion(cm: ConfusionMatrix) -> DatasetProfile:
    """Profile the ground truth of a confusion matrix; classes that never occur in it are skipped."""
    counts = {label: n for label, n in zip(cm.labels, cm.support, strict=True) if n}
    return profile_counts(counts)
