from .plot import DEFAULT_METRICS, PlotDataError, main, read_rows, render

__all__ = ["DEFAULT_METRICS", "PlotDataError", "main", "read_rows", "render"]
