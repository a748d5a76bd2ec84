"""Multi-scale multi-channel image layer.

A multiscale group lives at ``<path>/multiscale.json`` listing level
array paths fine-to-coarse with dyadic (2x) downsampling; each level is a
[channels, height, width] array whose spatial chunking defines the tile
grid. The layer picks the coarsest level whose texels are at least
screen-pixel density, loads only the tiles the viewport intersects, and
composes channels through contrast limits into RGBA tiles.

World mapping: base-image column c sits at world x = c, row r at world
y = -r (image top-left at the origin, image extending down in -y so the
picture reads upright under the world-y-up convention).
"""

import json
import math
from collections import OrderedDict
from dataclasses import dataclass

import numpy as np

from ..camera import world_to_screen
from ..chunkstore import read_region
from ..drawlist import ImageBlit
from ..errors import NotFoundError, UnsupportedFormatError
from ..memo import fingerprint, memoize
from .common import as_color, as_handle, open_array_memo

DEFAULT_TILE_CACHE_CAPACITY = 256


@dataclass(frozen=True)
class ChannelSetting:
    channel_index: int
    color: tuple  # Rgba8
    contrast: tuple  # (lo, hi) in data units

    def __post_init__(self):
        lo, hi = self.contrast
        if not lo < hi:
            raise ValueError(f"contrast limits must satisfy lo < hi, got [{lo}, {hi}]")


@dataclass(frozen=True)
class ImageProps:
    group: object  # ArrayHandle of the multiscale group
    channels: tuple  # ChannelSetting list
    tile_cache_capacity: int = DEFAULT_TILE_CACHE_CAPACITY

    @classmethod
    def from_props(cls, props):
        if isinstance(props, cls):
            return props
        channels = tuple(
            ChannelSetting(
                channel_index=int(ch["channel_index"]),
                color=tuple(as_color(ch.get("color"), (255, 255, 255, 255))),
                contrast=(float(ch["contrast"][0]), float(ch["contrast"][1])),
            )
            for ch in props["channels"]
        )
        return cls(
            group=as_handle(props["group"]),
            channels=channels,
            tile_cache_capacity=int(
                props.get("tile_cache_capacity", DEFAULT_TILE_CACHE_CAPACITY)
            ),
        )

    def __post_init__(self):
        if self.tile_cache_capacity < 1:
            raise ValueError("tile_cache_capacity must be >= 1")
        if not self.channels:
            raise ValueError("at least one channel is required")


def select_level(zoom, n_levels):
    """Coarsest pyramid level whose texels are not coarser than one screen
    pixel: clamp(floor(log2(1/zoom)), 0, n_levels-1)."""
    if not zoom > 0:
        raise ValueError("zoom must be > 0")
    if n_levels < 1:
        raise ValueError("n_levels must be >= 1")
    raw = math.floor(math.log2(1.0 / zoom))
    return int(min(max(raw, 0), n_levels - 1))


def visible_tiles(camera, level, tile_shape, level_image_shape):
    """Grid coordinates (ty, tx) of the level's tiles whose world footprint
    intersects the camera's visible rect, clipped to the image."""
    th, tw = tile_shape
    lh, lw = level_image_shape
    if lh <= 0 or lw <= 0:
        return []
    s = float(2 ** level)
    vx0, vy0, vx1, vy1 = camera.visible_world_rect()
    n_ty = -(-lh // th)
    n_tx = -(-lw // tw)

    def axis_range(v_lo, v_hi, tile_len, n_tiles, limit):
        # tile i covers [i*tile_len*s, min((i+1)*tile_len, limit)*s)
        unit = tile_len * s
        i0 = max(0, int(math.floor(v_lo / unit)))
        i1 = min(n_tiles - 1, int(math.ceil(v_hi / unit)) - 1)
        out = []
        for i in range(i0, i1 + 1):
            x0 = i * unit
            x1 = min((i + 1) * tile_len, limit) * s
            if x0 < v_hi and x1 > v_lo:
                out.append(i)
        return out

    # world x grows with column; world y = -row, so rows map to [-y1, -y0]
    cols = axis_range(vx0, vx1, tw, n_tx, lw)
    rows = axis_range(-vy1, -vy0, th, n_ty, lh)
    return [(ty, tx) for ty in rows for tx in cols]


def compose_channels(channel_tiles, contrasts, colors):
    """Blend per-channel intensity tiles into one RGBA8 tile.

    Per pixel and channel: norm = clamp((v - lo)/(hi - lo), 0, 1); output
    component k = clamp(round_half_up(sum_c color_c[k] * norm_c), 0, 255);
    alpha is 255. This is the ground truth any GPU path must match.
    """
    if not channel_tiles:
        raise ValueError("need at least one channel tile")
    shape = np.asarray(channel_tiles[0]).shape
    acc = np.zeros(shape + (3,), dtype=np.float64)
    for tile, (lo, hi), color in zip(channel_tiles, contrasts, colors):
        tile = np.asarray(tile, dtype=np.float64)
        if tile.shape != shape:
            raise ValueError(
                f"channel tile shapes differ: {tile.shape} vs {shape}"
            )
        if not lo < hi:
            raise ValueError(f"contrast limits must satisfy lo < hi, got [{lo}, {hi}]")
        norm = np.clip((tile - lo) / (hi - lo), 0.0, 1.0)
        for k in range(3):
            acc[..., k] += float(color[k]) * norm
    out = np.empty(shape + (4,), dtype=np.uint8)
    out[..., :3] = np.clip(np.floor(acc + 0.5), 0, 255)
    out[..., 3] = 255
    return out


class _TileCaches:
    """LRU caches for raw channel tiles and composed RGBA tiles.

    Raw tiles are kept separately (and sized per-channel) so that changing
    contrast/color settings recomposes without refetching chunks, while
    resident composed tiles stay bounded by tile_cache_capacity.
    """

    def __init__(self, composed_capacity, raw_capacity):
        self.composed = OrderedDict()
        self.raw = OrderedDict()
        self.composed_capacity = composed_capacity
        self.raw_capacity = raw_capacity

    @staticmethod
    def _get(cache, key, capacity, compute):
        if key in cache:
            cache.move_to_end(key)
            return cache[key]
        value = compute()
        cache[key] = value
        while len(cache) > capacity:
            cache.popitem(last=False)
        return value

    def composed_tile(self, key, compute):
        return self._get(self.composed, key, self.composed_capacity, compute)

    def raw_tile(self, key, compute):
        return self._get(self.raw, key, self.raw_capacity, compute)


def open_multiscale(ctx, group):
    """Level paths (fine to coarse) of a multiscale group, memoized."""

    def _load():
        store = ctx.registry.get_store(group.store_name)
        key = f"{group.path}/multiscale.json" if group.path else "multiscale.json"
        raw = store.get(key)
        if raw is None:
            raise NotFoundError(
                f"store {group.store_name!r} has no key {key!r}",
                store_name=group.store_name,
                key=key,
            )
        doc = json.loads(raw)
        levels = doc.get("levels")
        if not isinstance(levels, list) or not levels:
            raise UnsupportedFormatError(
                "multiscale.json must carry a non-empty 'levels' list"
            )
        return [str(level) for level in levels]

    return memoize(
        ctx.cache, f"multiscale:{group.store_name}:{group.path}", [group], _load
    )


class ImageLayer:
    kind = "image"

    def prepare(self, node, ctx):
        from ..chunkstore import ArrayHandle

        props = ImageProps.from_props(node.props)
        levels = open_multiscale(ctx, props.group)
        level = select_level(ctx.camera.zoom, len(levels))
        prefix = f"{props.group.path}/" if props.group.path else ""
        level_handle = ArrayHandle(props.group.store_name, f"{prefix}{levels[level]}")
        meta = open_array_memo(ctx, level_handle)
        if len(meta.shape) != 3:
            raise UnsupportedFormatError(
                f"multiscale level must be [channels, height, width], got {meta.shape}"
            )
        n_ch, lh, lw = meta.shape
        for ch in props.channels:
            if not 0 <= ch.channel_index < n_ch:
                raise ValueError(
                    f"channel_index {ch.channel_index} out of range for {n_ch} channels"
                )
        th, tw = meta.chunk_shape[1], meta.chunk_shape[2]
        tiles = visible_tiles(ctx.camera, level, (th, tw), (lh, lw))
        caches = memoize(
            ctx.cache,
            f"{node.id}:tilecache",
            [props.group, tuple(levels), props.tile_cache_capacity],
            lambda: _TileCaches(
                composed_capacity=props.tile_cache_capacity,
                raw_capacity=props.tile_cache_capacity * len(props.channels),
            ),
        )
        settings_fp = fingerprint(
            [(c.channel_index, tuple(c.color), c.contrast) for c in props.channels]
        )
        s = float(2 ** level)
        sampling = "nearest" if ctx.camera.zoom * s >= 1.0 else "bilinear"
        out = []
        for ty, tx in tiles:
            y0, x0 = ty * th, tx * tw
            h = min(th, lh - y0)
            w = min(tw, lw - x0)

            def _compose(ty=ty, tx=tx, y0=y0, x0=x0, h=h, w=w):
                channel_tiles = []
                for ch in props.channels:
                    raw = caches.raw_tile(
                        (level, ty, tx, ch.channel_index),
                        lambda ch=ch: read_region(
                            ctx.registry,
                            level_handle,
                            (ch.channel_index, y0, x0),
                            (1, h, w),
                            meta=meta,
                        )[0],
                    )
                    channel_tiles.append(raw)
                return compose_channels(
                    channel_tiles,
                    [c.contrast for c in props.channels],
                    [c.color for c in props.channels],
                )

            composed = caches.composed_tile((level, ty, tx, settings_fp), _compose)
            # tile world footprint -> screen rect
            wx0, wy1 = x0 * s, -(y0 * s)
            wx1, wy0 = (x0 + w) * s, -((y0 + h) * s)
            sx0, sy0 = world_to_screen(ctx.camera, wx0, wy1)
            sx1, sy1 = world_to_screen(ctx.camera, wx1, wy0)
            out.append(
                ImageBlit(
                    dest=(sx0, sy0, sx1 - sx0, sy1 - sy0),
                    source=composed,
                    sampling=sampling,
                )
            )
        return out

    def draw(self, node, prepared, ctx, dl):
        for blit in prepared:
            dl.add(blit)
