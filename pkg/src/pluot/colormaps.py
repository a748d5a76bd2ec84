"""Named 256-entry RGBA8 colormap lookup tables."""

import numpy as np

from ._luts import TABLES

_gray = np.zeros((256, 4), dtype=np.uint8)
_gray[:, 0] = _gray[:, 1] = _gray[:, 2] = np.arange(256)
_gray[:, 3] = 255

_BUILTIN = {"gray": _gray}
_BUILTIN.update(
    {
        name: np.frombuffer(data, dtype=np.uint8).reshape(256, 4).copy()
        for name, data in TABLES.items()
    }
)

DEFAULT = "viridis"


def get_colormap(name):
    """Return the (256, 4) uint8 LUT for a named colormap."""
    try:
        return _BUILTIN[name]
    except KeyError:
        raise KeyError(
            f"unknown colormap {name!r}; available: {sorted(_BUILTIN)}"
        )


def apply_colormap(lut, values, lo, hi):
    """Map values through min-max normalization to nearest LUT entries.

    Degenerate ranges (lo == hi) collapse to the midpoint entry.
    """
    lut = np.asarray(lut, dtype=np.uint8)
    if lut.shape != (256, 4):
        raise ValueError("colormap LUT must have exactly 256 RGBA entries")
    arr = np.asarray(values, dtype=np.float64)
    if hi > lo:
        with np.errstate(invalid="ignore"):
            norm = (arr - lo) / (hi - lo)
    else:
        norm = np.full_like(arr, 0.5)
    norm = np.clip(norm, 0.0, 1.0)
    norm[~np.isfinite(norm)] = 0.0  # NaN values land on the low entry
    idx = np.clip(np.floor(norm * 255.0 + 0.5), 0, 255).astype(np.intp)
    return lut[idx]
