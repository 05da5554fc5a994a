from evaluation.models.confusion import ConfusionMatrix
from evaluation.models.files import PredictionsFile
from evaluation.models.profile import DatasetProfile
from evaluation.models.report import Disagreement, MetricReport, RunResult
from evaluation.models.scores import (
    DEFAULT_METRICS,
    ClassStat,
    ClassStats,
    DegenerateNote,
    MacroKind,
    MetricKind,
    MetricValue,
)
from evaluation.models.weights import Criterion, FillPolicy, WeightScheme, WeightSpec, WeightVector

__all__ = [
    "DEFAULT_METRICS",
    "ClassStat",
    "ClassStats",
    "ConfusionMatrix",
    "Criterion",
    "DatasetProfile",
    "DegenerateNote",
    "Disagreement",
    "FillPolicy",
    "MacroKind",
    "MetricKind",
    "MetricReport",
    "MetricValue",
    "PredictionsFile",
    "RunResult",
    "WeightScheme",
    "WeightSpec",
    "WeightVector",
]
