"""Fixture helpers: write arrays/pyramids in the on-disk layout the engine
reads. The rendering API itself never writes; these exist for test
corpora and demo data."""

import json
from pathlib import Path

import numpy as np

from .chunkstore import DTYPES

_DTYPE_NAMES = {np.dtype(v): k for k, v in DTYPES.items()}


def _putter(target):
    if isinstance(target, dict):
        def put(key, data):
            target[key] = bytes(data)
    else:
        base = Path(target)

        def put(key, data):
            path = base / key
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(data)
    return put


def write_zarr_array(target, path, array, chunk_shape):
    """Write ``array`` at ``path`` into a dict store or directory.

    Edge chunks are padded to full chunk size, matching the read side.
    """
    array = np.ascontiguousarray(array)
    dtype = array.dtype.newbyteorder("<")
    name = _DTYPE_NAMES.get(np.dtype(dtype))
    if name is None:
        raise ValueError(f"unsupported dtype {array.dtype}")
    chunk_shape = tuple(int(c) for c in chunk_shape)
    if len(chunk_shape) != array.ndim:
        raise ValueError("chunk_shape rank must match array rank")
    put = _putter(target)
    prefix = f"{path}/" if path else ""
    meta = {
        "zarr_format": 3,
        "node_type": "array",
        "shape": list(array.shape),
        "data_type": name,
        "chunk_grid": {
            "name": "regular",
            "configuration": {"chunk_shape": list(chunk_shape)},
        },
        "chunk_key_encoding": {
            "name": "default",
            "configuration": {"separator": "/"},
        },
        "codecs": [{"name": "bytes", "configuration": {"endian": "little"}}],
        "fill_value": 0,
    }
    put(f"{prefix}zarr.json", json.dumps(meta).encode())
    grid = [-(-s // c) for s, c in zip(array.shape, chunk_shape)]
    for coord in np.ndindex(*grid):
        full = np.zeros(chunk_shape, dtype=dtype)
        sel = tuple(
            slice(c * cs, min((c + 1) * cs, s))
            for c, cs, s in zip(coord, chunk_shape, array.shape)
        )
        span = tuple(slice(0, sl.stop - sl.start) for sl in sel)
        full[span] = array[sel].astype(dtype)
        key = prefix + "c/" + "/".join(str(c) for c in coord)
        put(key, full.tobytes())


def downsample2x(level):
    """2x block-mean downsample of a [channels, h, w] array."""
    c, h, w = level.shape
    h2, w2 = (h + 1) // 2, (w + 1) // 2
    padded = np.zeros((c, h2 * 2, w2 * 2), dtype=np.float64)
    padded[:, :h, :w] = level
    # replicate edges so odd sizes do not dim the last row/column
    if h % 2:
        padded[:, h:, :w] = level[:, h - 1:h, :]
    if w % 2:
        padded[:, :h, w:] = padded[:, :h, w - 1:w]
        if h % 2:
            padded[:, h:, w:] = level[:, h - 1:h, w - 1:w]
    out = padded.reshape(c, h2, 2, w2, 2).mean(axis=(2, 4))
    return out.astype(level.dtype)


def write_multiscale_group(target, path, base, chunk_shape, n_levels):
    """Write a fine-to-coarse dyadic pyramid from a [c, h, w] base array."""
    put = _putter(target)
    prefix = f"{path}/" if path else ""
    levels = [str(i) for i in range(n_levels)]
    put(f"{prefix}multiscale.json", json.dumps({"levels": levels}).encode())
    level = base
    for name in levels:
        write_zarr_array(target, f"{path}/{name}" if path else name, level, chunk_shape)
        level = downsample2x(level)
    return levels
