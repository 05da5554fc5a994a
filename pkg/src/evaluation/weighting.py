"""Class weight vectors: user-defined, rarity, composite and partially specified schemes."""

import math
from collections.abc import Mapping, Sequence

from loguru import logger

from core.errors import EmptyDataError, LabelMismatchError, UndefinedClassError, WeightError
from evaluation.models import ConfusionMatrix, Criterion, FillPolicy, WeightScheme, WeightSpec, WeightVector
from evaluation.models.weights import USER_SUM_TOLERANCE

SIMPLEX_TOLERANCE = 1e-9


def validate(w: WeightVector | Sequence[float], tolerance: float = SIMPLEX_TOLERANCE) -> list[str]:
    """List every violated simplex condition; an empty list means the vector is valid."""
    if isinstance(w, WeightVector):
        labels, weights = w.labels, w.weights
    else:
        weights = tuple(w)
        labels = tuple(str(i) for i in range(len(weights)))

    if not weights:
        return ["weight vector is empty"]
    violations = [
        f"weight of {label!r} is {weight:g}, outside [0, 1]"
        for label, weight in zip(labels, weights, strict=True)
        if not 0.0 <= weight <= 1.0
    ]
    total = math.fsum(weights)
    if not abs(total - 1.0) <= tolerance:
        violations.append(f"weights sum to {total:.12g}, not 1")
    return violations


def _check_known(weights: Mapping[str, float], labels: Sequence[str]) -> None:
    unknown = sorted(set(weights) - set(labels))
    if unknown:
        raise LabelMismatchError(f"weights name unknown labels: {', '.join(unknown)}")


def _check_range(weights: Mapping[str, float]) -> None:
    out_of_range = [f"weight of {label!r} is {w:g}, outside [0, 1]" for label, w in weights.items() if not 0 <= w <= 1]
    if out_of_range:
        raise WeightError("invalid user weights", out_of_range)


def user_weights(weights: Mapping[str, float], labels: Sequence[str]) -> WeightVector:
    """User-defined importance used directly as the class weights."""
    _check_known(weights, labels)
    missing = [label for label in labels if label not in weights]
    if missing:
        raise WeightError("user weights must cover every class", [f"no weight for {label!r}" for label in missing])
    _check_range(weights)
    total = math.fsum(weights.values())
    if abs(total - 1.0) > USER_SUM_TOLERANCE:
        raise WeightError("invalid user weights", [f"weights sum to {total:.12g}, not 1"])
    return WeightVector.normalized(labels, [weights[label] for label in labels])


def rarity_weights(frequencies: Mapping[str, float]) -> WeightVector:
    """Normalized inverse class frequencies."""
    if not frequencies:
        raise EmptyDataError("no class frequencies given")
    absent = [label for label, f in frequencies.items() if f <= 0]
    if absent:
        raise UndefinedClassError(f"rarity is undefined for classes with zero frequency: {', '.join(absent)}")
    total = math.fsum(frequencies.values())
    if abs(total - 1.0) > USER_SUM_TOLERANCE:
        raise WeightError("invalid class frequencies", [f"frequencies sum to {total:.12g}, not 1"])
    return WeightVector.normalized(list(frequencies), [1.0 / f for f in frequencies.values()])


def rarity_from_counts(counts: Mapping[str, int]) -> WeightVector:
    total = sum(counts.values())
    if total <= 0:
        raise EmptyDataError("class counts are all zero")
    return rarity_weights({label: n / total for label, n in counts.items()})


def weighted_product(columns: Sequence[Sequence[float]]) -> list[float]:
    """Row-wise product of the criteria columns, normalized to sum to 1."""
    products = [math.prod(row) for row in zip(*columns, strict=True)]
    total = math.fsum(products)
    if total <= 0.0:
        raise WeightError("composite weights are undefined", ["no class has positive weight under every criterion"])
    return [p / total for p in products]


def composite_weights(criteria: Sequence[WeightVector]) -> WeightVector:
    """Multiplicative composition of several criteria, each a simplex vector over the same classes."""
    if len(criteria) < 2:
        raise WeightError("composite weights need at least 2 criteria")
    labels = criteria[0].labels
    violations = []
    for number, column in enumerate(criteria, start=1):
        violations.extend(f"criterion {number}: {v}" for v in validate(column, USER_SUM_TOLERANCE))
    if violations:
        raise WeightError("composite criteria must be normalized weight vectors", violations)
    columns = [column.aligned(labels).weights for column in criteria]
    return WeightVector.normalized(labels, weighted_product(columns))


def partial_fill(
    specified: Mapping[str, float],
    labels: Sequence[str],
    fill: FillPolicy = FillPolicy.EVEN,
    frequencies: Mapping[str, float] | None = None,
) -> WeightVector:
    """Keep the specified weights and hand the remaining mass to the unspecified classes."""
    _check_known(specified, labels)
    _check_range(specified)
    given = math.fsum(specified.values())
    if given > 1.0 + USER_SUM_TOLERANCE:
        raise WeightError("invalid partial weights", [f"specified weights sum to {given:.12g}, exceeding 1"])

    unspecified = [label for label in labels if label not in specified]
    if not unspecified:
        return user_weights(specified, labels)

    remaining = max(0.0, 1.0 - given)
    match FillPolicy(fill):
        case FillPolicy.EVEN:
            filled = dict.fromkeys(unspecified, remaining / len(unspecified))
        case FillPolicy.RARITY:
            if frequencies is None:
                raise WeightError("rarity fill needs class frequencies")
            absent = [label for label in unspecified if frequencies.get(label, 0.0) <= 0]
            if absent:
                raise UndefinedClassError(f"rarity fill is undefined for classes with zero frequency: {', '.join(absent)}")
            inverse = {label: 1.0 / frequencies[label] for label in unspecified}
            scale = math.fsum(inverse.values())
            filled = {label: remaining * value / scale for label, value in inverse.items()}

    weights = [specified[label] if label in specified else filled[label] for label in labels]
    return WeightVector.normalized(labels, weights)


def _embed(labels: Sequence[str], partial: WeightVector) -> WeightVector:
    lookup = partial.as_dict()
    return WeightVector(labels=tuple(labels), weights=tuple(lookup.get(label, 0.0) for label in labels))


def _criterion_column(criterion: Criterion, labels: Sequence[str]) -> WeightVector:
    assert criterion.weights is not None
    _check_known(criterion.weights, labels)
    return WeightVector(labels=tuple(labels), weights=tuple(criterion.weights.get(label, 0.0) for label in labels))


def reference_frequencies(spec: WeightSpec, cm: ConfusionMatrix) -> dict[str, float]:
    """Class frequencies used for rarity: `spec.frequencies` when given, else the ground truth.

    Only classes present in the ground truth are returned; a reference distribution is
    renormalized over them and must give each of them a positive frequency.
    """
    present = [label for label, n in zip(cm.labels, cm.support, strict=True) if n]
    if not present:
        raise EmptyDataError("no class occurs in the ground truth")
    if spec.frequencies is None:
        support = dict(zip(cm.labels, cm.support, strict=True))
        return {label: support[label] / cm.total for label in present}
    return _restricted(spec.frequencies, present)


def _restricted(frequencies: Mapping[str, float], labels: Sequence[str]) -> dict[str, float]:
    missing = [label for label in labels if label not in frequencies]
    if missing:
        raise UndefinedClassError(f"reference frequencies lack classes: {', '.join(missing)}")
    absent = [label for label in labels if frequencies[label] <= 0]
    if absent:
        raise UndefinedClassError(f"rarity is undefined for classes with zero frequency: {', '.join(absent)}")
    total = math.fsum(frequencies[label] for label in labels)
    return {label: frequencies[label] / total for label in labels}


def _resolve(spec: WeightSpec, labels: Sequence[str], frequencies: Mapping[str, float] | None) -> WeightVector:
    """Weights over `labels`; classes missing from `frequencies` count as absent from the data.

    Without frequencies every class counts as present and rarity cannot be derived.
    """

    def rarity() -> WeightVector:
        if frequencies is None:
            raise WeightError(f"the {spec.describe()} scheme needs class frequencies")
        return _embed(labels, rarity_weights(frequencies))

    present = set(labels) if frequencies is None else set(frequencies)
    match spec.scheme:
        case WeightScheme.USER:
            _check_known(spec.weights, labels)
            mapping = dict(spec.weights)
            for label in labels:
                if label not in present:
                    mapping.setdefault(label, 0.0)
            return user_weights(mapping, labels)
        case WeightScheme.RARITY:
            return rarity()
        case WeightScheme.PARTIAL:
            _check_known(spec.weights, labels)
            targets = [label for label in labels if label in present or label in spec.weights]
            if spec.fill is FillPolicy.RARITY and frequencies is None:
                raise WeightError("rarity fill needs class frequencies")
            return _embed(labels, partial_fill(spec.weights, targets, spec.fill, frequencies))
        case WeightScheme.COMPOSITE:
            columns = [rarity() if c.derived else _criterion_column(c, labels) for c in spec.criteria]
            return composite_weights(columns)


def resolve(spec: WeightSpec, cm: ConfusionMatrix) -> WeightVector:
    """Produce the weight vector `spec` describes over the labels of `cm`.

    Classes absent from the ground truth get weight 0 from the automatic schemes;
    an explicit positive user weight on such a class is kept and rejected later by the metrics.
    """
    absent = [label for label, n in zip(cm.labels, cm.support, strict=True) if not n]
    if absent:
        logger.warning("Labels absent from the ground truth: {}", ", ".join(absent))
    w = _resolve(spec, cm.labels, reference_frequencies(spec, cm))
    logger.debug("Resolved {} weights: {}", spec.describe(), w.as_dict())
    return w


def spec_labels(spec: WeightSpec) -> tuple[str, ...]:
    """Every label a spec mentions, in first-mention order (frequencies, weights, criteria)."""
    labels: dict[str, None] = {}
    for mapping in (spec.frequencies or {}, spec.weights, *(c.weights or {} for c in spec.criteria)):
        labels.update(dict.fromkeys(mapping))
    return tuple(labels)


def build(spec: WeightSpec, labels: Sequence[str] | None = None) -> WeightVector:
    """Weights from a spec alone, without an evaluation set.

    `labels` defaults to the labels named in `spec`; rarity needs `spec.frequencies`.
    """
    labels = tuple(labels) if labels else spec_labels(spec)
    if not labels:
        raise EmptyDataError("no labels to weight")
    frequencies = None if spec.frequencies is None else _restricted(spec.frequencies, labels)
    w = _resolve(spec, labels, frequencies)
    logger.debug("Built {} weights: {}", spec.describe(), w.as_dict())
    return w
