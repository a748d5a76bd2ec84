"""Shared helpers for built-in layer implementations."""

import numpy as np

from ..chunkstore import ArrayHandle, open_array, read_region
from ..drawlist import Rgba8
from ..memo import memoize


def as_handle(value):
    if isinstance(value, ArrayHandle):
        return value
    if isinstance(value, dict):
        return ArrayHandle(store_name=value["store"], path=value["path"])
    raise TypeError(f"expected an array handle, got {value!r}")


def as_color(value, default=None):
    if value is None:
        if default is None:
            raise ValueError("missing color")
        return Rgba8(*default)
    if isinstance(value, Rgba8):
        return value
    seq = list(value)
    if len(seq) == 3:
        seq.append(255)
    return Rgba8(*(int(c) for c in seq))


def open_array_memo(ctx, handle):
    """Parse array metadata once per session (stores are immutable)."""
    return memoize(
        ctx.cache,
        f"meta:{handle.store_name}:{handle.path}",
        [handle],
        lambda: open_array(ctx.registry, handle),
    )


def load_column(ctx, layer_id, role, handle):
    """Load a whole 1-D numeric column, memoized on handle identity."""

    def _load():
        meta = open_array_memo(ctx, handle)
        if len(meta.shape) != 1:
            raise TypeError(
                f"{role} column must be 1-D, got shape {meta.shape}"
            )
        return read_region(ctx.registry, handle, (0,), (meta.shape[0],), meta=meta)

    return memoize(ctx.cache, f"{layer_id}:{role}", [handle], _load)
