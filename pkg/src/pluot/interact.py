"""Hit-testing for clicks and hover tooltips.

Kept in the engine core so every host (web viewer, notebooks, native
shells) shares identical pick semantics. A uniform screen-space grid with
cell size 2x the point radius gives O(N) construction and O(1)-ish
queries; results match a brute-force nearest-point scan including the
tie-break (equal distance -> larger datum index wins, i.e. topmost
drawn).
"""

import math
from dataclasses import dataclass

import numpy as np

from .chunkstore import open_array, read_region


@dataclass(frozen=True)
class PickResult:
    layer_id: str
    datum_index: int
    world_pos: tuple
    distance_px: float


class PickIndex:
    """Immutable after construction; safe for concurrent queries."""

    def __init__(self, centers, radius_px, cell_size, cells, layer_id, datum_indices, world):
        self.centers = centers
        self.radius_px = radius_px
        self.cell_size = cell_size
        self.cells = cells  # (cx, cy) -> list of row positions into centers
        self.layer_id = layer_id
        self.datum_indices = datum_indices
        self.world = world

    def __len__(self):
        return len(self.centers)

    def cells_of(self, row):
        """Grid cells whose rect the point's radius-disc overlaps (tests)."""
        return [cell for cell, rows in self.cells.items() if row in rows]


def _disc_overlaps_cell(px, py, r, cx, cy, size):
    nearest_x = min(max(px, cx * size), (cx + 1) * size)
    nearest_y = min(max(py, cy * size), (cy + 1) * size)
    return (px - nearest_x) ** 2 + (py - nearest_y) ** 2 <= r * r


def build_pick_index(points_px, radius_px, *, layer_id="", datum_indices=None, world=None):
    """Index screen-space points for radius queries.

    ``datum_indices``/``world`` carry the original row identity and world
    coordinates of each point (defaults: positional index, point itself).
    """
    if not radius_px > 0:
        raise ValueError("radius_px must be > 0")
    centers = np.asarray(points_px, dtype=np.float64).reshape(-1, 2)
    if datum_indices is None:
        datum_indices = np.arange(len(centers))
    else:
        datum_indices = np.asarray(datum_indices)
    world = centers if world is None else np.asarray(world, dtype=np.float64)
    size = 2.0 * radius_px
    cells = {}
    for row in range(len(centers)):
        px, py = centers[row]
        cx0 = math.floor((px - radius_px) / size)
        cx1 = math.floor((px + radius_px) / size)
        cy0 = math.floor((py - radius_px) / size)
        cy1 = math.floor((py + radius_px) / size)
        for cy in range(cy0, cy1 + 1):
            for cx in range(cx0, cx1 + 1):
                if _disc_overlaps_cell(px, py, radius_px, cx, cy, size):
                    cells.setdefault((cx, cy), []).append(row)
    return PickIndex(centers, radius_px, size, cells, layer_id, datum_indices, world)


def pick(index, cursor_px, max_dist_px):
    """Nearest indexed datum within max(max_dist_px, point radius) of the
    cursor; exact distance ties go to the larger datum index."""
    if max_dist_px < 0:
        raise ValueError("max_dist_px must be >= 0")
    if len(index) == 0:
        return None
    qx, qy = float(cursor_px[0]), float(cursor_px[1])
    reach = max(max_dist_px, index.radius_px)
    size = index.cell_size
    cx0 = math.floor((qx - reach) / size)
    cx1 = math.floor((qx + reach) / size)
    cy0 = math.floor((qy - reach) / size)
    cy1 = math.floor((qy + reach) / size)
    best_row = -1
    best_d2 = None
    seen = set()
    for cy in range(cy0, cy1 + 1):
        for cx in range(cx0, cx1 + 1):
            for row in index.cells.get((cx, cy), ()):
                if row in seen:
                    continue
                seen.add(row)
                dx = index.centers[row, 0] - qx
                dy = index.centers[row, 1] - qy
                d2 = dx * dx + dy * dy
                if d2 > reach * reach:
                    continue
                datum = int(index.datum_indices[row])
                if (
                    best_d2 is None
                    or d2 < best_d2
                    or (d2 == best_d2 and datum > int(index.datum_indices[best_row]))
                ):
                    best_row, best_d2 = row, d2
    if best_d2 is None:
        return None
    return PickResult(
        layer_id=index.layer_id,
        datum_index=int(index.datum_indices[best_row]),
        world_pos=(float(index.world[best_row, 0]), float(index.world[best_row, 1])),
        distance_px=math.sqrt(best_d2),
    )


def format_value(value):
    """Numeric tooltip formatting: up to 6 significant digits."""
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.6g}"


def tooltip_payload(result, columns, registry):
    """Ordered (name, formatted value) pairs for a picked datum.

    ``columns`` is a list of (name, ArrayHandle); each read is a
    single-element partial fetch touching exactly one chunk.
    """
    out = []
    for name, handle in columns:
        meta = open_array(registry, handle)
        if len(meta.shape) != 1:
            raise TypeError(f"tooltip column {name!r} must be 1-D")
        if not 0 <= result.datum_index < meta.shape[0]:
            raise IndexError(
                f"datum index {result.datum_index} out of range for column "
                f"{name!r} of length {meta.shape[0]}"
            )
        value = read_region(
            registry, handle, (result.datum_index,), (1,), meta=meta
        )[0]
        out.append((name, format_value(value)))
    return out


def pick_grid_cell_size(radius_px):
    return 2.0 * radius_px
