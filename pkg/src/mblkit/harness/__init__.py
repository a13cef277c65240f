"""Command line, file formats and the model client."""
from .io import atomic_write_bytes, atomic_write_text
from .layout_json import SCHEMA_VERSION, export_layout, import_layout, layout_to_dict
from .svg import render_svg

__all__ = ["atomic_write_bytes", "atomic_write_text", "SCHEMA_VERSION", "export_layout", "import_layout",
           "layout_to_dict", "render_svg"]
