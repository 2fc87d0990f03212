"""Command-line interface: analysis pipelines, reports and the regression runner."""

from .main import AnalysisRequest, main, regress, run, entry

__all__ = ["AnalysisRequest", "main", "regress", "run", "entry"]
