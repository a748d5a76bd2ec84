"""Scene graph and the render orchestration loop.

A scene is an ordered list of LayerNode trees. Rendering walks the trees
depth-first; for each node it runs the layer's ``prepare`` (which may
fetch data and run compute kernels — re-invoked on every render call) and
then its ``draw`` into a shared DrawList, which the raster or vector
backend consumes. Later nodes paint on top. Apart from cache contents the
loop is stateless: identical inputs with a warm cache yield byte-identical
output.
"""

from dataclasses import dataclass, field
from typing import Union

from . import raster, svg
from .drawlist import DrawList, Rgba8, scaled
from .errors import LayerError, NotFoundError, PluotError
from .memo import MemoCache

OPAQUE_WHITE = Rgba8(255, 255, 255, 255)


@dataclass
class LayerNode:
    id: str
    kind: str
    props: dict = field(default_factory=dict)
    children: list = field(default_factory=list)


@dataclass(frozen=True)
class RenderParams:
    width_px: int
    height_px: int
    device_pixel_ratio: float = 1.0
    background: Rgba8 = OPAQUE_WHITE
    output_kind: str = "bitmap"  # or "vector"

    def __post_init__(self):
        if self.device_pixel_ratio < 1:
            raise ValueError("device_pixel_ratio must be >= 1")
        for logical in (self.width_px, self.height_px):
            backing = logical * self.device_pixel_ratio
            if backing < 1 or abs(backing - round(backing)) > 1e-9:
                raise ValueError(
                    "width/height times device_pixel_ratio must be integers >= 1"
                )
        if self.output_kind not in ("bitmap", "vector"):
            raise ValueError(f"unknown output_kind {self.output_kind!r}")
        object.__setattr__(self, "background", Rgba8(*self.background))


@dataclass(frozen=True)
class Bitmap:
    width_px: int
    height_px: int
    pixels: bytes

    def __post_init__(self):
        if len(self.pixels) != 4 * self.width_px * self.height_px:
            raise ValueError("pixel buffer length must be 4*width*height")


@dataclass(frozen=True)
class Vector:
    svg: str


RenderOutput = Union[Bitmap, Vector]


@dataclass
class RenderStats:
    """Per-render instrumentation (prepare counts by layer id)."""

    prepare_counts: dict = field(default_factory=dict)


class RenderContext:
    """Everything a layer's prepare/draw may touch."""

    def __init__(self, camera, params, registry, cache, backend, stats):
        self.camera = camera
        self.params = params
        self.registry = registry
        self.cache = cache
        self.backend = backend  # compute backend
        self.stats = stats


_LAYER_IMPLS = {}


def register_layer(kind, impl):
    """Register a layer implementation (object with prepare/draw)."""
    _LAYER_IMPLS[kind] = impl


def layer_kinds():
    return sorted(_LAYER_IMPLS)


def _render_node(node, ctx, dl, seen_ids):
    if node.id in seen_ids:
        raise PluotError(f"duplicate layer id {node.id!r}")
    seen_ids.add(node.id)
    impl = _LAYER_IMPLS.get(node.kind)
    if impl is None:
        raise PluotError(f"unknown layer kind {node.kind!r}")
    try:
        prepared = impl.prepare(node, ctx)
    except LayerError:
        raise
    except PluotError as exc:
        raise LayerError(
            f"layer {node.id!r} ({node.kind}): {exc}",
            layer_id=node.id,
            store_key=getattr(exc, "key", None),
        ) from exc
    ctx.stats.prepare_counts[node.id] = ctx.stats.prepare_counts.get(node.id, 0) + 1
    synthesized = impl.draw(node, prepared, ctx, dl) or []
    for child in list(synthesized) + node.children:
        _render_node(child, ctx, dl, seen_ids)


def build_draw_list(scene, camera, params, registry, cache, backend=None, stats=None):
    """Run every layer's prepare+draw and return the combined DrawList."""
    from .compute import CpuBackend

    ctx = RenderContext(
        camera=camera,
        params=params,
        registry=registry,
        cache=cache,
        backend=backend or CpuBackend(),
        stats=stats or RenderStats(),
    )
    dl = DrawList()
    seen = set()
    for node in scene:
        _render_node(node, ctx, dl, seen)
    return dl


def render(scene, camera, params, registry=None, cache=None, backend=None,
           stats=None, raster_backend="cpu"):
    """Render a scene to a Bitmap or Vector per ``params.output_kind``.

    ``raster_backend="gpu"`` uses the tensor rasterizer when a device is
    available and silently falls back to the CPU reference otherwise.
    """
    from .chunkstore import StoreRegistry
    from .errors import GpuUnavailableError

    registry = registry if registry is not None else StoreRegistry()
    cache = cache if cache is not None else MemoCache()
    dl = build_draw_list(scene, camera, params, registry, cache, backend, stats)
    if params.output_kind == "vector":
        doc = svg.to_svg(dl, params.width_px, params.height_px, params.background)
        return Vector(svg=doc)
    dpr = params.device_pixel_ratio
    bw = int(round(params.width_px * dpr))
    bh = int(round(params.height_px * dpr))
    dl = scaled(dl, dpr)
    pixels = None
    if raster_backend == "gpu":
        from . import gpu

        try:
            pixels = gpu.gpu_rasterize(dl, bw, bh, params.background)
        except GpuUnavailableError:
            pixels = None
    if pixels is None:
        pixels = raster.rasterize(dl, bw, bh, params.background)
    return Bitmap(width_px=bw, height_px=bh, pixels=pixels)


def attributed_store_error(exc, layer_id):
    """Wrap a store failure with layer attribution (helper for layers)."""
    return LayerError(
        f"layer {layer_id!r}: {exc}",
        layer_id=layer_id,
        store_key=exc.key if isinstance(exc, NotFoundError) else None,
    )
