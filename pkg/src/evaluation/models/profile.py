from pydantic import BaseModel, ConfigDict


class DatasetProfile(BaseModel):
    """Class-distribution summary of a labelled test set."""

    model_config = ConfigDict(frozen=True)

    total: int
    classes: int
    counts: dict[str, int]
    frequencies: dict[str, float]
    average_class_frequency: float
    infrequent_count: int
    infrequent_labels: tuple[str, ...]
    skew: float | None
    notes: tuple[str, ...] = ()
