from pydantic import BaseModel, ConfigDict, Field

from evaluation.models.confusion import ConfusionMatrix


class PredictionsFile(BaseModel):
    """Parsed `true,predicted` rows of a predictions CSV."""

    model_config = ConfigDict(frozen=True)

    source: str
    rows: tuple[tuple[str, str], ...] = Field(min_length=1)

    @property
    def true_labels(self) -> tuple[str, ...]:
        return tuple(true for true, _ in self.rows)

    def confusion(self) -> ConfusionMatrix:
        return ConfusionMatrix.from_pairs(self.rows)
