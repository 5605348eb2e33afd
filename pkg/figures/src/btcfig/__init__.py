"""Figure rendering over simulator experiment CSVs.

This package reads the CSV files an experiment run leaves behind
(summary.csv plus the per-run metrics/forks files) and renders the standard
comparison figures.  It never imports the simulator; the CSV schemas are the
entire interface.
"""

from .io import InputError
from .plots import FIG_KINDS, build_figure, render

__all__ = ["FIG_KINDS", "InputError", "build_figure", "render"]
