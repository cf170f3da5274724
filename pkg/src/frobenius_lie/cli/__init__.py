"""Command line interface and interchange file format."""

from .fileformat import AlgebraFile, dumps, from_dict, load, loads, to_dict
from .main import main
from .report import build_report, render_text

__all__ = ["AlgebraFile", "build_report", "dumps", "from_dict", "load", "loads", "main", "render_text", "to_dict"]
