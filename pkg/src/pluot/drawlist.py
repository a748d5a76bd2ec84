"""Backend-neutral drawing-primitive IR.

A DrawList is an ordered list of primitives in screen coordinates
(logical pixels); order defines painting order (painter's algorithm,
source-over). Both the CPU rasterizer and the SVG serializer consume it.
Colors are non-premultiplied RGBA8.
"""

from dataclasses import dataclass, field
from typing import NamedTuple, Union

import numpy as np


class Rgba8(NamedTuple):
    r: int
    g: int
    b: int
    a: int = 255


def _check_color(color):
    if not all(isinstance(c, (int, np.integer)) and 0 <= c <= 255 for c in color):
        raise ValueError(f"color components must be integers in 0..255: {color!r}")
    return Rgba8(*(int(c) for c in color))


def _as_points(points):
    arr = np.asarray(points, dtype=np.float64)
    if arr.size == 0:
        return arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an (N, 2) point array, got shape {arr.shape}")
    return arr


@dataclass(frozen=True)
class Points:
    """Filled discs of one radius; ``colors`` is per-point (N,4) u8 or a
    single Rgba8 applied uniformly."""

    centers: np.ndarray
    radius_px: float
    colors: Union[np.ndarray, Rgba8]

    def __post_init__(self):
        object.__setattr__(self, "centers", _as_points(self.centers))
        if self.radius_px < 0:
            raise ValueError("radius_px must be >= 0")
        if isinstance(self.colors, np.ndarray):
            if self.colors.shape != (len(self.centers), 4) or self.colors.dtype != np.uint8:
                raise ValueError("per-point colors must be a (N, 4) uint8 array")
        else:
            object.__setattr__(self, "colors", _check_color(self.colors))


@dataclass(frozen=True)
class Polyline:
    points: np.ndarray
    width_px: float
    color: Rgba8

    def __post_init__(self):
        object.__setattr__(self, "points", _as_points(self.points))
        if not self.width_px > 0:
            raise ValueError("width_px must be > 0")
        object.__setattr__(self, "color", _check_color(self.color))


@dataclass(frozen=True)
class Rects:
    """Axis-aligned filled rectangles, rows of (x, y, w, h) px."""

    rects: np.ndarray
    color: Rgba8

    def __post_init__(self):
        arr = np.asarray(self.rects, dtype=np.float64).reshape(-1, 4)
        if arr.size and (arr[:, 2:] < 0).any():
            raise ValueError("rect w and h must be >= 0")
        object.__setattr__(self, "rects", arr)
        object.__setattr__(self, "color", _check_color(self.color))


@dataclass(frozen=True)
class GlyphRun:
    """Text at ``origin`` (top-left of the first glyph cell)."""

    origin: tuple
    text: str
    size_px: float
    color: Rgba8

    def __post_init__(self):
        object.__setattr__(self, "color", _check_color(self.color))


@dataclass(frozen=True)
class ImageBlit:
    """RGBA8 source bitmap resampled into a destination rect."""

    dest: tuple  # (x, y, w, h) px
    source: np.ndarray  # (h, w, 4) uint8
    sampling: str = "nearest"  # or "bilinear"

    def __post_init__(self):
        src = np.ascontiguousarray(self.source)
        if src.ndim != 3 or src.shape[2] != 4 or src.dtype != np.uint8:
            raise ValueError("ImageBlit source must be an (h, w, 4) uint8 array")
        if self.sampling not in ("nearest", "bilinear"):
            raise ValueError(f"unknown sampling mode {self.sampling!r}")
        if self.dest[2] < 0 or self.dest[3] < 0:
            raise ValueError("dest w and h must be >= 0")
        object.__setattr__(self, "source", src)


Primitive = Union[Points, Polyline, Rects, GlyphRun, ImageBlit]


@dataclass
class DrawList:
    primitives: list = field(default_factory=list)

    def add(self, primitive):
        self.primitives.append(primitive)

    def __len__(self):
        return len(self.primitives)

    def __iter__(self):
        return iter(self.primitives)


def shape_counts(dl):
    """Logical shape counts per kind (circles = total point count, etc.).

    The SVG backend must emit exactly these element counts, which is the
    structural consistency check shared with the bitmap path.
    """
    counts = {"circle": 0, "polyline": 0, "rect": 0, "text": 0, "image": 0}
    for prim in dl:
        if isinstance(prim, Points):
            counts["circle"] += len(prim.centers)
        elif isinstance(prim, Polyline):
            counts["polyline"] += 1
        elif isinstance(prim, Rects):
            counts["rect"] += len(prim.rects)
        elif isinstance(prim, GlyphRun):
            counts["text"] += 1
        elif isinstance(prim, ImageBlit):
            counts["image"] += 1
        else:
            raise TypeError(f"unknown primitive {type(prim)!r}")
    return counts


def scaled(dl, factor):
    """A copy of ``dl`` with every coordinate/size multiplied by ``factor``.

    Used to apply a device pixel ratio to the backing bitmap while layer
    code keeps emitting logical pixels.
    """
    if factor == 1:
        return dl
    out = DrawList()
    for prim in dl:
        if isinstance(prim, Points):
            out.add(Points(prim.centers * factor, prim.radius_px * factor, prim.colors))
        elif isinstance(prim, Polyline):
            out.add(Polyline(prim.points * factor, prim.width_px * factor, prim.color))
        elif isinstance(prim, Rects):
            out.add(Rects(prim.rects * factor, prim.color))
        elif isinstance(prim, GlyphRun):
            ox, oy = prim.origin
            out.add(GlyphRun((ox * factor, oy * factor), prim.text,
                             prim.size_px * factor, prim.color))
        elif isinstance(prim, ImageBlit):
            x, y, w, h = prim.dest
            out.add(ImageBlit((x * factor, y * factor, w * factor, h * factor),
                              prim.source, prim.sampling))
    return out
