import math
from collections import Counter
from collections.abc import Sequence
from enum import StrEnum
from typing import Annotated, Any, Self

from pydantic import BaseModel, ConfigDict, Field, NonNegativeFloat, field_validator, model_validator

from core.errors import LabelMismatchError, WeightError

USER_SUM_TOLERANCE = 1e-6

UnitFloat = Annotated[float, Field(ge=0.0, le=1.0)]


class WeightVector(BaseModel):
    """Per-class importance weights aligned to `labels`.

    Construction only checks alignment; the simplex condition is checked by
    `weighting.validate` so that invalid vectors can still be inspected.
    """

    model_config = ConfigDict(frozen=True)

    labels: tuple[str, ...]
    weights: tuple[float, ...]

    @model_validator(mode="after")
    def _check_alignment(self) -> Self:
        if len(self.labels) != len(self.weights):
            raise ValueError(f"{len(self.labels)} labels but {len(self.weights)} weights")
        duplicates = sorted(label for label, seen in Counter(self.labels).items() if seen > 1)
        if duplicates:
            raise ValueError(f"duplicate labels: {', '.join(duplicates)}")
        if not all(math.isfinite(w) for w in self.weights):
            raise ValueError("weights must be finite")
        return self

    @classmethod
    def normalized(cls, labels: Sequence[str], weights: Sequence[float]) -> Self:
        """Scale onto the simplex; the largest entry absorbs the rounding residual so the stored sum is 1."""
        total = math.fsum(weights)
        if total <= 0.0:
            raise WeightError("cannot normalize weights", ["total weight is zero"])
        scaled = [w / total for w in weights]
        largest = max(range(len(scaled)), key=scaled.__getitem__)
        residual = 1.0 - math.fsum(scaled)
        if residual:
            scaled[largest] = max(0.0, scaled[largest] + residual)
        return cls(labels=tuple(labels), weights=tuple(scaled))

    @classmethod
    def uniform(cls, labels: Sequence[str]) -> Self:
        return cls.normalized(labels, [1.0] * len(labels))

    @property
    def total(self) -> float:
        return math.fsum(self.weights)

    def weight(self, label: str) -> float:
        try:
            return self.weights[self.labels.index(label)]
        except ValueError:
            raise LabelMismatchError(f"no weight for label {label!r}")

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.labels, self.weights, strict=True))

    def aligned(self, labels: Sequence[str]) -> "WeightVector":
        """Reorder to `labels`; both sides must name the same classes."""
        if tuple(labels) == self.labels:
            return self
        if set(labels) != set(self.labels) or len(labels) != len(self.labels):
            extra = sorted(set(self.labels) - set(labels))
            missing = sorted(set(labels) - set(self.labels))
            raise LabelMismatchError(f"weights not aligned to labels (missing: {missing}, unexpected: {extra})")
        lookup = self.as_dict()
        return WeightVector(labels=tuple(labels), weights=tuple(lookup[label] for label in labels))


class WeightScheme(StrEnum):
    USER = "user"
    RARITY = "rarity"
    COMPOSITE = "composite"
    PARTIAL = "partial"


class FillPolicy(StrEnum):
    EVEN = "even"
    RARITY = "rarity"


class Criterion(BaseModel):
    """One importance criterion of a composite scheme.

    Without a weights map the criterion must be named `rarity` and is derived from the data.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = Field(min_length=1)
    weights: dict[str, NonNegativeFloat] | None = None

    @model_validator(mode="after")
    def _check_source(self) -> Self:
        if self.weights is None and self.name != WeightScheme.RARITY:
            raise ValueError(f"criterion {self.name!r} needs a weights map")
        return self

    @property
    def derived(self) -> bool:
        return self.weights is None


class WeightSpec(BaseModel):
    """Declarative description of how a weight vector is produced."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    scheme: WeightScheme = WeightScheme.RARITY
    weights: dict[str, UnitFloat] = Field(default_factory=dict)
    fill: FillPolicy = FillPolicy.EVEN
    criteria: tuple[Criterion, ...] = ()
    frequencies: dict[str, NonNegativeFloat] | None = None

    @field_validator("scheme", mode="before")
    @classmethod
    def _scheme_alias(cls, value: Any) -> Any:
        if value == "partial-user":
            return WeightScheme.PARTIAL
        return value

    @model_validator(mode="after")
    def _check_scheme(self) -> Self:
        specified = math.fsum(self.weights.values())
        match self.scheme:
            case WeightScheme.USER:
                if not self.weights:
                    raise ValueError("user scheme needs a weights map")
                if abs(specified - 1.0) > USER_SUM_TOLERANCE:
                    raise ValueError(f"user weights sum to {specified:g}, expected 1")
            case WeightScheme.PARTIAL:
                if specified > 1.0 + USER_SUM_TOLERANCE:
                    raise ValueError(f"specified weights sum to {specified:g}, exceeding 1")
            case WeightScheme.COMPOSITE:
                if len(self.criteria) < 2:
                    raise ValueError("composite scheme needs at least 2 criteria")
            case WeightScheme.RARITY:
                pass
        if self.weights and self.scheme not in (WeightScheme.USER, WeightScheme.PARTIAL):
            raise ValueError(f"weights map is not used by the {self.scheme} scheme")
        if self.criteria and self.scheme != WeightScheme.COMPOSITE:
            raise ValueError(f"criteria are not used by the {self.scheme} scheme")
        return self

    def describe(self) -> str:
        match self.scheme:
            case WeightScheme.PARTIAL:
                return f"partial(fill={self.fill})"
            case WeightScheme.COMPOSITE:
                return f"composite({'*'.join(c.name for c in self.criteria)})"
            case _:
                return str(self.scheme)
