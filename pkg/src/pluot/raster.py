"""Deterministic CPU reference rasterizer.

Intentionally aliased: a pixel is covered iff its center lies inside the
shape (centers at integer+0.5). Blending is non-premultiplied source-over
in float64 with half-up rounding, so identical draw lists produce
byte-identical output across runs and platforms. Rect interiors are the
half-open box [x, x+w) x [y, y+h); point/stroke coverage uses distance
<= radius/half-width.
"""

import numpy as np

from . import _font8x8
from .drawlist import GlyphRun, ImageBlit, Points, Polyline, Rects

# Points whose candidate-pixel tables would exceed this many entries are
# processed in slices to bound peak memory.
_POINT_BATCH_CANDIDATES = 8_000_000


def rasterize(dl, width_px, height_px, background):
    """Render a DrawList to RGBA8 bytes of length 4*width*height."""
    if width_px < 1 or height_px < 1:
        raise ValueError("canvas must be at least 1x1 px")
    canvas = np.empty((height_px, width_px, 4), dtype=np.uint8)
    canvas[:, :] = np.asarray(background, dtype=np.uint8)
    for prim in dl:
        if isinstance(prim, Points):
            _draw_points(canvas, prim)
        elif isinstance(prim, Polyline):
            _draw_polyline(canvas, prim)
        elif isinstance(prim, Rects):
            _draw_rects(canvas, prim)
        elif isinstance(prim, GlyphRun):
            _draw_glyphs(canvas, prim)
        elif isinstance(prim, ImageBlit):
            _draw_blit(canvas, prim)
        else:
            raise TypeError(f"unknown primitive {type(prim)!r}")
    return canvas.tobytes()


def _blend_at(canvas, ys, xs, src):
    """Source-over blend src (M,4 u8) onto canvas pixels (ys, xs), in order.

    Pixels may repeat; with any translucent source the blend is applied
    sequentially so later entries land on top.
    """
    if len(ys) == 0:
        return
    if (src[:, 3] == 255).all():
        canvas[ys, xs] = src  # duplicate indices: last write wins
        return
    flat = ys.astype(np.int64) * canvas.shape[1] + xs
    if len(np.unique(flat)) == len(flat):
        _blend_unique(canvas, ys, xs, src)
        return
    for i in range(len(flat)):  # ordered fallback, duplicates present
        _blend_unique(canvas, ys[i:i + 1], xs[i:i + 1], src[i:i + 1])


def _blend_unique(canvas, ys, xs, src):
    dst = canvas[ys, xs].astype(np.float64)
    sa = src[:, 3:].astype(np.float64) / 255.0
    da = dst[:, 3:] / 255.0
    out_a = sa + da * (1.0 - sa)
    num = src[:, :3].astype(np.float64) * sa + dst[:, :3] * da * (1.0 - sa)
    with np.errstate(invalid="ignore"):
        rgb = np.where(out_a > 0, num / np.where(out_a > 0, out_a, 1.0), 0.0)
    out = np.empty((len(ys), 4), dtype=np.uint8)
    out[:, :3] = np.floor(rgb + 0.5).astype(np.uint8)
    out[:, 3] = np.floor(out_a[:, 0] * 255.0 + 0.5).astype(np.uint8)
    canvas[ys, xs] = out


def _draw_points(canvas, prim):
    n = len(prim.centers)
    if n == 0:
        return
    h, w = canvas.shape[:2]
    r = float(prim.radius_px)
    cx = prim.centers[:, 0]
    cy = prim.centers[:, 1]
    finite = np.isfinite(cx) & np.isfinite(cy)
    # coarse cull: discs that cannot reach any pixel center
    keep = finite & (cx >= -r) & (cx <= w + r) & (cy >= -r) & (cy <= h + r)
    if not keep.all():
        cx, cy = cx[keep], cy[keep]
        colors = prim.colors[keep] if isinstance(prim.colors, np.ndarray) else prim.colors
    else:
        colors = prim.colors
    n = len(cx)
    if n == 0:
        return
    side = int(np.floor(2 * r)) + 2  # candidate box side, covers any phase
    batch = max(1, _POINT_BATCH_CANDIDATES // (side * side))
    for start in range(0, n, batch):
        sl = slice(start, min(start + batch, n))
        sub = colors[sl] if isinstance(colors, np.ndarray) else colors
        _draw_points_batch(canvas, cx[sl], cy[sl], r, sub, side)


def _draw_points_batch(canvas, cx, cy, r, colors, side):
    h, w = canvas.shape[:2]
    n = len(cx)
    ix0 = np.floor(cx - r - 0.5).astype(np.int64)
    iy0 = np.floor(cy - r - 0.5).astype(np.int64)
    offs = np.arange(side, dtype=np.int64)
    px = ix0[:, None, None] + offs[None, None, :]  # (n, 1, side)
    py = iy0[:, None, None] + offs[None, :, None]  # (n, side, 1)
    dx = px + 0.5 - cx[:, None, None]
    dy = py + 0.5 - cy[:, None, None]
    mask = (dx * dx + dy * dy) <= r * r
    px = np.broadcast_to(px, (n, side, side))
    py = np.broadcast_to(py, (n, side, side))
    mask &= (px >= 0) & (px < w) & (py >= 0) & (py < h)
    if not mask.any():
        return
    xs = px[mask]
    ys = py[mask]
    if isinstance(colors, np.ndarray):
        per_pix = np.broadcast_to(colors[:, None, None, :], (n, side, side, 4))[mask]
    else:
        per_pix = np.broadcast_to(np.asarray(colors, np.uint8), (len(xs), 4))
    _blend_at(canvas, ys, xs, per_pix)


def _draw_rects(canvas, prim):
    h, w = canvas.shape[:2]
    color = np.asarray(prim.color, dtype=np.uint8)
    for x, y, rw, rh in prim.rects:
        # pixel centers i+0.5 in [x, x+w) <=> i in [ceil(x-0.5), ceil(x+w-0.5))
        x0 = max(int(np.ceil(x - 0.5)), 0)
        y0 = max(int(np.ceil(y - 0.5)), 0)
        x1 = min(int(np.ceil(x + rw - 0.5)), w)
        y1 = min(int(np.ceil(y + rh - 0.5)), h)
        if x0 >= x1 or y0 >= y1:
            continue
        if color[3] == 255:
            canvas[y0:y1, x0:x1] = color
        else:
            ys, xs = np.mgrid[y0:y1, x0:x1]
            ys, xs = ys.ravel(), xs.ravel()
            _blend_unique(canvas, ys, xs, np.broadcast_to(color, (len(ys), 4)))


def _draw_polyline(canvas, prim):
    pts = prim.points
    if len(pts) == 0:
        return
    half = prim.width_px / 2.0
    color = np.asarray(prim.color, dtype=np.uint8)
    h, w = canvas.shape[:2]
    if len(pts) == 1:
        segs = [(pts[0], pts[0])]
    else:
        segs = zip(pts[:-1], pts[1:])
    # Collect covered pixels across all segments first so shared pixels at
    # joints blend once (a polyline is one logical stroke).
    covered = np.zeros((h, w), dtype=bool)
    for a, b in segs:
        x0 = max(int(np.floor(min(a[0], b[0]) - half - 0.5)), 0)
        x1 = min(int(np.ceil(max(a[0], b[0]) + half + 0.5)), w)
        y0 = max(int(np.floor(min(a[1], b[1]) - half - 0.5)), 0)
        y1 = min(int(np.ceil(max(a[1], b[1]) + half + 0.5)), h)
        if x0 >= x1 or y0 >= y1:
            continue
        ys, xs = np.mgrid[y0:y1, x0:x1]
        pcx = xs + 0.5
        pcy = ys + 0.5
        abx, aby = b[0] - a[0], b[1] - a[1]
        seg_len2 = abx * abx + aby * aby
        if seg_len2 == 0:
            ddx, ddy = pcx - a[0], pcy - a[1]
        else:
            t = ((pcx - a[0]) * abx + (pcy - a[1]) * aby) / seg_len2
            t = np.clip(t, 0.0, 1.0)
            ddx = pcx - (a[0] + t * abx)
            ddy = pcy - (a[1] + t * aby)
        hit = (ddx * ddx + ddy * ddy) <= half * half
        covered[ys[hit], xs[hit]] = True
    ys, xs = np.nonzero(covered)
    if len(ys):
        _blend_at(canvas, ys, xs, np.broadcast_to(color, (len(ys), 4)))


def _draw_glyphs(canvas, prim):
    scale = max(1, int(round(prim.size_px / 8.0)))
    ox = int(round(prim.origin[0]))
    oy = int(round(prim.origin[1]))
    h, w = canvas.shape[:2]
    color = np.asarray(prim.color, dtype=np.uint8)
    cell = 8 * scale
    mask = np.zeros((cell, len(prim.text) * cell), dtype=bool)
    for i, ch in enumerate(prim.text):
        rows = _font8x8.glyph_rows(ch)
        g = np.array(
            [[(row >> x) & 1 for x in range(8)] for row in rows], dtype=bool
        )
        if scale > 1:
            g = np.kron(g, np.ones((scale, scale), dtype=bool))
        mask[:, i * cell:(i + 1) * cell] = g
    # clip the glyph-run mask to the canvas
    y0, x0 = max(oy, 0), max(ox, 0)
    y1 = min(oy + mask.shape[0], h)
    x1 = min(ox + mask.shape[1], w)
    if y0 >= y1 or x0 >= x1:
        return
    sub = mask[y0 - oy:y1 - oy, x0 - ox:x1 - ox]
    ys, xs = np.nonzero(sub)
    if len(ys):
        _blend_at(canvas, ys + y0, xs + x0, np.broadcast_to(color, (len(ys), 4)))


def _draw_blit(canvas, prim):
    x, y, bw, bh = (float(v) for v in prim.dest)
    if bw <= 0 or bh <= 0:
        return
    h, w = canvas.shape[:2]
    src = prim.source
    sh, sw = src.shape[:2]
    if sh == 0 or sw == 0:
        return
    x0 = max(int(np.ceil(x - 0.5)), 0)
    y0 = max(int(np.ceil(y - 0.5)), 0)
    x1 = min(int(np.ceil(x + bw - 0.5)), w)
    y1 = min(int(np.ceil(y + bh - 0.5)), h)
    if x0 >= x1 or y0 >= y1:
        return
    # dest pixel centers mapped into source texel space
    u = (np.arange(x0, x1, dtype=np.float64) + 0.5 - x) / bw * sw
    v = (np.arange(y0, y1, dtype=np.float64) + 0.5 - y) / bh * sh
    if prim.sampling == "nearest":
        sx = np.clip(np.floor(u).astype(np.int64), 0, sw - 1)
        sy = np.clip(np.floor(v).astype(np.int64), 0, sh - 1)
        sampled = src[sy[:, None], sx[None, :]].astype(np.float64)
    else:
        sampled = _bilinear(src, u, v)
    ys, xs = np.mgrid[y0:y1, x0:x1]
    flat = np.floor(sampled + 0.5).astype(np.uint8).reshape(-1, 4)
    _blend_at(canvas, ys.ravel(), xs.ravel(), flat)


def _bilinear(src, u, v):
    sh, sw = src.shape[:2]
    fu = u - 0.5
    fv = v - 0.5
    u0 = np.floor(fu).astype(np.int64)
    v0 = np.floor(fv).astype(np.int64)
    au = (fu - u0)[None, :, None]
    av = (fv - v0)[:, None, None]
    u0c = np.clip(u0, 0, sw - 1)
    u1c = np.clip(u0 + 1, 0, sw - 1)
    v0c = np.clip(v0, 0, sh - 1)
    v1c = np.clip(v0 + 1, 0, sh - 1)
    s = src.astype(np.float64)
    top = s[v0c[:, None], u0c[None, :]] * (1 - au) + s[v0c[:, None], u1c[None, :]] * au
    bot = s[v1c[:, None], u0c[None, :]] * (1 - au) + s[v1c[:, None], u1c[None, :]] * au
    return top * (1 - av) + bot * av
