"""pluot: a headless, layer-based 2D rendering engine.

One scene description renders to either bitmap pixel bytes or an SVG
document; layers pull only the data chunks the viewport requires from
chunked array stores; the same engine backs a CLI, an HTTP service,
embedding bindings, and an interactive browser viewer.
"""

from . import layers as _layers  # registers built-in layer kinds
from .camera import Camera2D, pan, screen_to_world, world_to_screen, zoom_about
from .chunkstore import (
    ArrayHandle,
    ArrayMeta,
    FileSystemStore,
    MemoryStore,
    StoreRegistry,
    chunks_for_region,
    open_array,
    read_region,
)
from .colormaps import apply_colormap, get_colormap
from .compute import CpuBackend, GpuBackend, bin_counts, extent, resolve_backend
from .drawlist import DrawList, GlyphRun, ImageBlit, Points, Polyline, Rects, Rgba8, shape_counts
from .errors import (
    CapacityError,
    CorruptChunkError,
    GpuUnavailableError,
    LayerError,
    NoExtentError,
    NotFoundError,
    PluotError,
    SpecError,
    UnsupportedFormatError,
)
from .interact import PickIndex, PickResult, build_pick_index, pick, tooltip_payload
from .layers import (
    compose_channels,
    nice_ticks,
    select_level,
    visible_tiles,
)
from .memo import MemoCache, fingerprint, memoize
from .plotspec import build_registry, load_spec, pick_spec, render_spec, validate_spec
from .png import encode_png, png_dimensions
from .raster import rasterize
from .scene import (
    Bitmap,
    LayerNode,
    RenderParams,
    RenderStats,
    Vector,
    build_draw_list,
    layer_kinds,
    register_layer,
    render,
)
from .svg import to_svg

__version__ = "0.1.0"

__all__ = [
    "ArrayHandle",
    "ArrayMeta",
    "Bitmap",
    "Camera2D",
    "CapacityError",
    "CorruptChunkError",
    "CpuBackend",
    "DrawList",
    "FileSystemStore",
    "GlyphRun",
    "GpuBackend",
    "GpuUnavailableError",
    "ImageBlit",
    "LayerError",
    "LayerNode",
    "MemoCache",
    "MemoryStore",
    "NoExtentError",
    "NotFoundError",
    "PickIndex",
    "PickResult",
    "PluotError",
    "Points",
    "Polyline",
    "Rects",
    "RenderParams",
    "RenderStats",
    "Rgba8",
    "SpecError",
    "StoreRegistry",
    "UnsupportedFormatError",
    "Vector",
    "apply_colormap",
    "bin_counts",
    "build_draw_list",
    "build_pick_index",
    "build_registry",
    "chunks_for_region",
    "compose_channels",
    "encode_png",
    "extent",
    "fingerprint",
    "get_colormap",
    "layer_kinds",
    "load_spec",
    "memoize",
    "nice_ticks",
    "open_array",
    "pan",
    "pick",
    "pick_spec",
    "png_dimensions",
    "rasterize",
    "read_region",
    "register_layer",
    "render",
    "render_spec",
    "resolve_backend",
    "screen_to_world",
    "select_level",
    "shape_counts",
    "to_svg",
    "tooltip_payload",
    "validate_spec",
    "visible_tiles",
    "world_to_screen",
    "zoom_about",
]
