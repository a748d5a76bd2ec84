"""Axis layer (a composite of line + text children) and the line, text,
and bar primitive layers it builds on.

Line/text/bar props accept ``space: "world" | "screen"`` (default world);
axis children are generated in screen space along the viewport's bottom
or left edge from the camera's visible world extent.
"""

import math
from dataclasses import dataclass

import numpy as np

from ..camera import world_to_screen
from ..drawlist import GlyphRun, Polyline, Rects, Rgba8
from .common import as_color

TICK_LEN_PX = 5
TICK_LABEL_GAP_PX = 3


def nice_ticks(lo, hi, target_count):
    """Ticks at the smallest 1/2/5 x 10^k step giving at most
    ``target_count`` intervals over [lo, hi]; multiples of the step only.

    A degenerate range (lo == hi) yields the single tick lo.
    """
    if lo > hi:
        raise ValueError("need lo <= hi")
    if target_count < 2:
        raise ValueError("target_count must be >= 2")
    if lo == hi:
        return [lo]
    span = hi - lo
    k = math.floor(math.log10(span / target_count)) - 1
    while True:
        for m in (1.0, 2.0, 5.0):
            step = m * 10.0 ** k
            if span / step <= target_count:
                first = math.ceil(lo / step - 1e-9)
                last = math.floor(hi / step + 1e-9)
                return [i * step for i in range(first, last + 1)]
        k += 1


def format_ticks(ticks, step=None):
    """Labels with the minimal digits that distinguish adjacent ticks."""
    if len(ticks) == 0:
        return []
    if step is None:
        step = min(
            (abs(b - a) for a, b in zip(ticks, ticks[1:]) if b != a),
            default=max(abs(ticks[0]), 1.0),
        )
    largest = max(abs(t) for t in ticks)
    if largest >= 1e6 or (step > 0 and step < 1e-4):
        return [f"{t:.6g}" for t in ticks]
    decimals = max(0, -math.floor(math.log10(step) + 1e-9)) if step > 0 else 0
    return [f"{t:.{decimals}f}" for t in ticks]


@dataclass(frozen=True)
class AxisProps:
    orientation: str  # "x" or "y"
    target_tick_count: int = 6
    color: Rgba8 = Rgba8(40, 40, 40, 255)
    label_size_px: float = 8.0

    @classmethod
    def from_props(cls, props):
        if isinstance(props, cls):
            return props
        return cls(
            orientation=props["orientation"],
            target_tick_count=int(props.get("target_tick_count", 6)),
            color=as_color(props.get("color"), (40, 40, 40, 255)),
            label_size_px=float(props.get("label_size_px", 8.0)),
        )

    def __post_init__(self):
        if self.orientation not in ("x", "y"):
            raise ValueError("orientation must be 'x' or 'y'")
        if self.target_tick_count < 2:
            raise ValueError("target_tick_count must be >= 2")


def _glyph_advance(size_px):
    return 8 * max(1, int(size_px // 8))


class AxisLayer:
    kind = "axis"

    def prepare(self, node, ctx):
        props = AxisProps.from_props(node.props)
        x0, y0, x1, y1 = ctx.camera.visible_world_rect()
        if props.orientation == "x":
            ticks = nice_ticks(x0, x1, props.target_tick_count)
        else:
            ticks = nice_ticks(y0, y1, props.target_tick_count)
        return props, ticks, format_ticks(ticks)

    def draw(self, node, prepared, ctx, dl):
        from ..scene import LayerNode

        props, ticks, labels = prepared
        w, h = ctx.camera.width_px, ctx.camera.height_px
        size = props.label_size_px
        adv = _glyph_advance(size)
        children = []

        def line(suffix, pts):
            children.append(
                LayerNode(
                    id=f"{node.id}/{suffix}",
                    kind="line",
                    props={"points": pts, "width_px": 1.0, "color": props.color,
                           "space": "screen"},
                )
            )

        def text(suffix, pos, s):
            children.append(
                LayerNode(
                    id=f"{node.id}/{suffix}",
                    kind="text",
                    props={"pos": pos, "text": s, "size_px": size,
                           "color": props.color, "space": "screen"},
                )
            )

        if props.orientation == "x":
            base = h - (size + TICK_LEN_PX + 2 * TICK_LABEL_GAP_PX)
            line("rule", [(0.0, base), (float(w), base)])
            for i, (t, label) in enumerate(zip(ticks, labels)):
                sx, _ = world_to_screen(ctx.camera, t, 0.0)
                line(f"tick{i}", [(sx, base), (sx, base + TICK_LEN_PX)])
                text(
                    f"label{i}",
                    (sx - len(label) * adv / 2.0, base + TICK_LEN_PX + TICK_LABEL_GAP_PX),
                    label,
                )
        else:
            widest = max((len(s) for s in labels), default=1)
            base = widest * adv + TICK_LEN_PX + 2 * TICK_LABEL_GAP_PX
            line("rule", [(base, 0.0), (base, float(h))])
            for i, (t, label) in enumerate(zip(ticks, labels)):
                _, sy = world_to_screen(ctx.camera, 0.0, t)
                line(f"tick{i}", [(base - TICK_LEN_PX, sy), (base, sy)])
                text(
                    f"label{i}",
                    (
                        base - TICK_LEN_PX - TICK_LABEL_GAP_PX - len(label) * adv,
                        sy - 4.0 * max(1, int(size // 8)),
                    ),
                    label,
                )
        return children


class LineLayer:
    kind = "line"

    def prepare(self, node, ctx):
        return None

    def draw(self, node, prepared, ctx, dl):
        props = node.props
        pts = np.asarray(props["points"], dtype=np.float64).reshape(-1, 2)
        if props.get("space", "world") == "world":
            sx, sy = world_to_screen(ctx.camera, pts[:, 0], pts[:, 1])
            pts = np.column_stack([sx, sy])
        dl.add(
            Polyline(
                pts,
                float(props.get("width_px", 1.5)),
                as_color(props.get("color"), (40, 40, 40, 255)),
            )
        )


class TextLayer:
    kind = "text"

    def prepare(self, node, ctx):
        return None

    def draw(self, node, prepared, ctx, dl):
        props = node.props
        x, y = props["pos"]
        if props.get("space", "world") == "world":
            x, y = world_to_screen(ctx.camera, float(x), float(y))
        dl.add(
            GlyphRun(
                origin=(float(x), float(y)),
                text=str(props["text"]),
                size_px=float(props.get("size_px", 8.0)),
                color=as_color(props.get("color"), (40, 40, 40, 255)),
            )
        )


class BarLayer:
    kind = "bar"

    def prepare(self, node, ctx):
        return None

    def draw(self, node, prepared, ctx, dl):
        props = node.props
        rects = np.asarray(props["rects"], dtype=np.float64).reshape(-1, 4)
        if props.get("space", "world") == "world" and len(rects):
            # (x, y, w, h) with (x, y) the min-x/min-y world corner
            sx, sy = world_to_screen(ctx.camera, rects[:, 0], rects[:, 1] + rects[:, 3])
            rects = np.column_stack(
                [sx, sy, rects[:, 2] * ctx.camera.zoom, rects[:, 3] * ctx.camera.zoom]
            )
        dl.add(Rects(rects, as_color(props.get("color"), (70, 130, 180, 255))))
