from core.errors import EvaluationError
from core.settings_model import settings

__all__ = ["EvaluationError", "__version__", "settings"]

__version__ = "0.1.0"
