"""Scatterplot layer: world-coordinate point columns projected, culled,
and emitted as one Points primitive.

Bitmap output handles millions of points; vector output is capped
(default 50,000 visible points) and fails loudly past the cap.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..camera import world_to_screen
from ..colormaps import DEFAULT, apply_colormap, get_colormap
from ..drawlist import Points, Rgba8
from ..errors import CapacityError
from .common import as_color, as_handle, load_column

VECTOR_POINT_CAP = 50_000


@dataclass(frozen=True)
class ScatterProps:
    x: object  # ArrayHandle
    y: object
    value: Optional[object] = None
    colormap: str = DEFAULT
    uniform_color: Rgba8 = Rgba8(31, 119, 180, 255)
    radius_px: float = 2.0
    vector_point_cap: int = VECTOR_POINT_CAP

    @classmethod
    def from_props(cls, props):
        if isinstance(props, cls):
            return props
        return cls(
            x=as_handle(props["x"]),
            y=as_handle(props["y"]),
            value=as_handle(props["value"]) if props.get("value") else None,
            colormap=props.get("colormap", DEFAULT),
            uniform_color=as_color(props.get("uniform_color"), (31, 119, 180, 255)),
            radius_px=float(props.get("radius_px", 2.0)),
            vector_point_cap=int(props.get("vector_point_cap", VECTOR_POINT_CAP)),
        )

    def __post_init__(self):
        if not self.radius_px > 0:
            raise ValueError("radius_px must be > 0")
        if self.vector_point_cap < 1:
            raise ValueError("vector_point_cap must be >= 1")


@dataclass
class PreparedScatter:
    centers: np.ndarray  # (M, 2) screen px of visible points
    colors: object  # (M, 4) u8 or uniform Rgba8
    indices: np.ndarray  # (M,) original datum indices
    world: np.ndarray  # (M, 2) world coords of visible points
    radius_px: float
    cap: int


class ScatterLayer:
    kind = "scatter"

    def prepare(self, node, ctx):
        props = ScatterProps.from_props(node.props)
        x = load_column(ctx, node.id, "x", props.x).astype(np.float64, copy=False)
        y = load_column(ctx, node.id, "y", props.y).astype(np.float64, copy=False)
        if len(x) != len(y):
            raise ValueError(
                f"x and y columns differ in length ({len(x)} vs {len(y)})"
            )
        sx, sy = world_to_screen(ctx.camera, x, y)
        r = props.radius_px
        w, h = ctx.camera.width_px, ctx.camera.height_px
        with np.errstate(invalid="ignore"):
            keep = (
                np.isfinite(sx) & np.isfinite(sy)
                & (sx >= -r) & (sx <= w + r)
                & (sy >= -r) & (sy <= h + r)
            )
        idx = np.nonzero(keep)[0]
        centers = np.column_stack([sx[idx], sy[idx]])
        if props.value is not None:
            vals = load_column(ctx, node.id, "value", props.value)
            if len(vals) != len(x):
                raise ValueError("value column length does not match x/y")
            finite = vals[np.isfinite(vals)]
            lo, hi = (
                (float(finite.min()), float(finite.max())) if finite.size else (0.0, 0.0)
            )
            colors = apply_colormap(get_colormap(props.colormap), vals[idx], lo, hi)
        else:
            colors = props.uniform_color
        return PreparedScatter(
            centers=centers,
            colors=colors,
            indices=idx,
            world=np.column_stack([x[idx], y[idx]]),
            radius_px=r,
            cap=props.vector_point_cap,
        )

    def draw(self, node, prepared, ctx, dl):
        n = len(prepared.centers)
        if ctx.params.output_kind == "vector" and n > prepared.cap:
            raise CapacityError(
                f"layer {node.id!r}: {n} visible points exceed the vector "
                f"point cap of {prepared.cap}; render to bitmap instead or "
                f"raise vector_point_cap"
            )
        dl.add(Points(prepared.centers, prepared.radius_px, prepared.colors))
