"""Figures from hardyz result files.

The renderer never imports the numerics package: everything arrives
through the CSV/JSON files the hardyz CLI writes, which keeps this
package free to run anywhere the result files travel.
"""

from .figures import FigureSpec, RenderResult, SchemaError, render

__version__ = "0.1.0"

__all__ = ["FigureSpec", "RenderResult", "SchemaError", "render",
           "__version__"]
