"""Scalar metrics computed from a confusion matrix.

Weighted averages are accumulated in label order. Balanced accuracy is the weighted
average with uniform weights over the classes present in the ground truth, so it shares
its code path (and its rounding) with `wba`.
"""

from collections.abc import Sequence

from loguru import logger

from core.errors import EmptyDataError, UndefinedClassError, WeightError
from evaluation import weighting
from evaluation.models import (
    ClassStat,
    ClassStats,
    ConfusionMatrix,
    DegenerateNote,
    MacroKind,
    MetricKind,
    MetricValue,
    WeightVector,
)

_MACRO_TO_KIND = {
    MacroKind.PRECISION: MetricKind.WPRECISION,
    MacroKind.RECALL: MetricKind.WRECALL,
    MacroKind.F1: MetricKind.WF1,
}
_UNWEIGHTED = {
    MetricKind.PRECISION: MacroKind.PRECISION,
    MetricKind.RECALL: MacroKind.RECALL,
    MetricKind.F1: MacroKind.F1,
}
_WEIGHTED = {kind: macro for macro, kind in _MACRO_TO_KIND.items()}


def _require_data(cm: ConfusionMatrix) -> None:
    if cm.total == 0:
        raise EmptyDataError("confusion matrix holds no items (N = 0)")


def _bounded(value: float) -> float:
    return min(1.0, max(0.0, value))


def _weighted_sum(weights: Sequence[float], values: Sequence[float]) -> float:
    total = 0.0
    for weight, value in zip(weights, values, strict=True):
        if weight:
            total += weight * value
    return total


def accuracy(cm: ConfusionMatrix) -> MetricValue:
    _require_data(cm)
    return MetricValue(kind=MetricKind.ACCURACY, value=_bounded(sum(cm.correct) / cm.total))


def per_class_accuracy(cm: ConfusionMatrix) -> ClassStats:
    _require_data(cm)
    classes = []
    for label, support, correct, predicted in zip(cm.labels, cm.support, cm.correct, cm.predicted, strict=True):
        recall = correct / support if support else None
        precision = correct / predicted if predicted else None
        f1: float | None
        if recall is None or precision is None:
            f1 = None
        elif precision + recall == 0.0:
            f1 = 0.0
        else:
            f1 = 2.0 * precision * recall / (precision + recall)
        classes.append(
            ClassStat(
                label=label,
                support=support,
                correct=correct,
                predicted=predicted,
                frequency=support / cm.total,
                accuracy=recall,
                precision=precision,
                recall=recall,
                f1=f1,
            ),
        )
    return ClassStats(total=cm.total, classes=tuple(classes))


def present_uniform(cm: ConfusionMatrix) -> WeightVector:
    """Uniform weights over the classes that occur in the ground truth, zero elsewhere."""
    present = [1.0 if n else 0.0 for n in cm.support]
    if not any(present):
        raise EmptyDataError("no class occurs in the ground truth")
    return WeightVector.normalized(cm.labels, present)


def _checked_weights(cm: ConfusionMatrix, w: WeightVector) -> WeightVector:
    w = w.aligned(cm.labels)
    violations = weighting.validate(w)
    if violations:
        raise WeightError("weight vector is not on the simplex", violations)
    empty = [label for label, weight, n in zip(cm.labels, w.weights, cm.support, strict=True) if weight > 0 and not n]
    if empty:
        raise UndefinedClassError(f"positive weight on classes absent from the ground truth: {', '.join(empty)}")
    return w


def _macro(cm: ConfusionMatrix, w: WeightVector, component: MacroKind) -> tuple[float, tuple[DegenerateNote, ...]]:
    stats = per_class_accuracy(cm)
    values: list[float] = []
    notes: list[DegenerateNote] = []
    for stat, weight in zip(stats.classes, w.weights, strict=True):
        value = getattr(stat, component)
        if value is not None:
            values.append(value)
            continue
        values.append(0.0)
        if not stat.support:
            notes.append(DegenerateNote(label=stat.label, component=component, resolution="excluded"))
        elif weight:
            # empty predicted column: precision, and with it F1, taken as 0
            notes.append(DegenerateNote(label=stat.label, component=component, resolution="zero"))
            logger.warning("Class {} is never predicted; its {} is taken as 0", stat.label, component)
    return _bounded(_weighted_sum(w.weights, values)), tuple(notes)


def balanced_accuracy(cm: ConfusionMatrix) -> MetricValue:
    _require_data(cm)
    value, notes = _macro(cm, present_uniform(cm), MacroKind.RECALL)
    if notes:
        logger.debug("Balanced accuracy skips classes absent from the ground truth: {}", [n.label for n in notes])
    return MetricValue(kind=MetricKind.BA, value=value, notes=notes)


def wba(cm: ConfusionMatrix, w: WeightVector) -> MetricValue:
    """Weighted balanced accuracy: per-class accuracies averaged with importance weights."""
    _require_data(cm)
    value, notes = _macro(cm, _checked_weights(cm, w), MacroKind.RECALL)
    return MetricValue(kind=MetricKind.WBA, value=value, notes=notes)


def weighted_macro(cm: ConfusionMatrix, w: WeightVector, kind: MacroKind) -> MetricValue:
    _require_data(cm)
    kind = MacroKind(kind)
    value, notes = _macro(cm, _checked_weights(cm, w), kind)
    return MetricValue(kind=_MACRO_TO_KIND[kind], value=value, notes=notes)


def compute(cm: ConfusionMatrix, kind: MetricKind, w: WeightVector | None = None) -> MetricValue:
    kind = MetricKind(kind)
    if kind is MetricKind.ACCURACY:
        return accuracy(cm)
    if kind is MetricKind.BA:
        return balanced_accuracy(cm)
    if kind in _UNWEIGHTED:
        value = weighted_macro(cm, present_uniform(cm), _UNWEIGHTED[kind])
        return value.model_copy(update={"kind": kind})
    if w is None:
        raise WeightError(f"metric {kind} needs a weight vector")
    if kind is MetricKind.WBA:
        return wba(cm, w)
    return weighted_macro(cm, w, _WEIGHTED[kind])
