"""2D camera: the world<->screen mapping that drives culling, tile
selection, and interaction.

Conventions: world y grows upward, screen y grows downward with the origin
at the viewport's top-left; ``zoom`` is pixels per world unit.
"""

import math
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Camera2D:
    center_x: float
    center_y: float
    zoom: float
    width_px: int
    height_px: int

    def __post_init__(self):
        if not (math.isfinite(self.zoom) and self.zoom > 0):
            raise ValueError(f"zoom must be finite and > 0, got {self.zoom}")
        if self.width_px < 1 or self.height_px < 1:
            raise ValueError("viewport must be at least 1x1 px")
        if not (math.isfinite(self.center_x) and math.isfinite(self.center_y)):
            raise ValueError("camera center must be finite")

    def visible_world_rect(self):
        """(x0, y0, x1, y1) world-axis-aligned extent of the viewport."""
        half_w = self.width_px / 2.0 / self.zoom
        half_h = self.height_px / 2.0 / self.zoom
        return (
            self.center_x - half_w,
            self.center_y - half_h,
            self.center_x + half_w,
            self.center_y + half_h,
        )


def screen_to_world(camera, px, py):
    """Map a screen-pixel position to world coordinates."""
    wx = camera.center_x + (px - camera.width_px / 2.0) / camera.zoom
    wy = camera.center_y - (py - camera.height_px / 2.0) / camera.zoom
    return wx, wy


def world_to_screen(camera, wx, wy):
    """Map a world position to screen pixels (inverse of screen_to_world).

    Accepts scalars or numpy arrays for ``wx``/``wy``.
    """
    sx = (wx - camera.center_x) * camera.zoom + camera.width_px / 2.0
    sy = (camera.center_y - wy) * camera.zoom + camera.height_px / 2.0
    return sx, sy


def pan(camera, dx_px, dy_px):
    """Shift the camera so content follows a drag of (dx_px, dy_px)."""
    return replace(
        camera,
        center_x=camera.center_x - dx_px / camera.zoom,
        center_y=camera.center_y + dy_px / camera.zoom,
    )


def zoom_about(camera, anchor_px, factor):
    """Scale zoom by ``factor`` keeping the world point under ``anchor_px``
    fixed on screen."""
    if not (isinstance(factor, (int, float)) and math.isfinite(factor) and factor > 0):
        raise ValueError(f"zoom factor must be finite and > 0, got {factor}")
    ax, ay = anchor_px
    wx, wy = screen_to_world(camera, ax, ay)
    new_zoom = camera.zoom * factor
    return replace(
        camera,
        zoom=new_zoom,
        center_x=wx - (ax - camera.width_px / 2.0) / new_zoom,
        center_y=wy + (ay - camera.height_px / 2.0) / new_zoom,
    )
