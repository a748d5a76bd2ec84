"""Built-in layer implementations, registered with the scene on import."""

from ..scene import register_layer
from .axis import AxisLayer, AxisProps, BarLayer, LineLayer, TextLayer, format_ticks, nice_ticks
from .histogram import HistogramLayer, HistogramProps, bar_rects
from .image import (
    ChannelSetting,
    ImageLayer,
    ImageProps,
    compose_channels,
    select_level,
    visible_tiles,
)
from .scatter import ScatterLayer, ScatterProps

for _impl in (
    ScatterLayer(),
    ImageLayer(),
    HistogramLayer(),
    AxisLayer(),
    LineLayer(),
    TextLayer(),
    BarLayer(),
):
    register_layer(_impl.kind, _impl)

__all__ = [
    "AxisLayer",
    "AxisProps",
    "BarLayer",
    "ChannelSetting",
    "HistogramLayer",
    "HistogramProps",
    "ImageLayer",
    "ImageProps",
    "LineLayer",
    "ScatterLayer",
    "ScatterProps",
    "TextLayer",
    "bar_rects",
    "compose_channels",
    "format_ticks",
    "nice_ticks",
    "select_level",
    "visible_tiles",
]
