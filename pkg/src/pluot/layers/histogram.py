"""Histogram layer: extent + bin counts over a 1-D column (compute
backend), drawn as screen-space bars via a synthesized bar child."""

from dataclasses import dataclass

import numpy as np

from ..drawlist import Rgba8
from ..memo import memoize
from .common import as_color, as_handle, load_column


@dataclass(frozen=True)
class HistogramProps:
    values: object  # ArrayHandle
    n_bins: int = 64
    bar_color: Rgba8 = Rgba8(70, 130, 180, 255)

    @classmethod
    def from_props(cls, props):
        if isinstance(props, cls):
            return props
        return cls(
            values=as_handle(props["values"]),
            n_bins=int(props.get("n_bins", 64)),
            bar_color=as_color(props.get("bar_color"), (70, 130, 180, 255)),
        )

    def __post_init__(self):
        if self.n_bins < 1:
            raise ValueError("n_bins must be >= 1")


def histogram_result(ctx, layer_id, props):
    """(edges, counts) for the column, memoized on (handle, n_bins)."""

    def _compute():
        values = load_column(ctx, layer_id, "values", props.values)
        lo, hi = ctx.backend.extent(values)
        if lo == hi:
            lo, hi = lo - 0.5, hi + 0.5  # degenerate extent widening
        counts = ctx.backend.bin_counts(values, lo, hi, props.n_bins)
        edges = lo + np.arange(props.n_bins + 1) * (hi - lo) / props.n_bins
        return edges, counts

    return memoize(ctx.cache, f"{layer_id}:hist", [props.values, props.n_bins], _compute)


def bar_rects(counts, width_px, height_px):
    """Screen-space bar rects: bin i spans [i*w/n, (i+1)*w/n); the max
    count fills the full height; zero counts give zero-height rects."""
    n = len(counts)
    counts = np.asarray(counts, dtype=np.float64)
    peak = counts.max() if n else 0.0
    heights = counts / peak * height_px if peak > 0 else np.zeros(n)
    xs = np.arange(n) * (width_px / n)
    return np.column_stack(
        [xs, height_px - heights, np.full(n, width_px / n), heights]
    )


class HistogramLayer:
    kind = "histogram"

    def prepare(self, node, ctx):
        return histogram_result(ctx, node.id, HistogramProps.from_props(node.props))

    def draw(self, node, prepared, ctx, dl):
        from ..scene import LayerNode

        props = HistogramProps.from_props(node.props)
        edges, counts = prepared
        rects = bar_rects(counts, ctx.camera.width_px, ctx.camera.height_px)
        return [
            LayerNode(
                id=f"{node.id}/bars",
                kind="bar",
                props={"rects": rects, "color": props.bar_color, "space": "screen"},
            )
        ]
