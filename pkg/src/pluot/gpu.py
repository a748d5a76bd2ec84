"""Optional tensor rasterizer for accelerator devices.

Coverage semantics match the CPU reference (pixel-center rule,
source-over); anti-aliasing is permitted by contract, so validation is
structural (interior samples), never image diffs. When no accelerator is
present, gpu_rasterize raises GpuUnavailableError and the caller falls
back to the CPU rasterizer. ``device`` may be forced (including "cpu")
to exercise the kernels without hardware.
"""

import numpy as np

from .drawlist import GlyphRun, ImageBlit, Points, Polyline, Rects
from .errors import GpuUnavailableError


def _torch():
    try:
        import torch
    except ImportError:
        raise GpuUnavailableError("torch is not installed")
    return torch


def resolve_device(device=None):
    torch = _torch()
    if device is not None:
        return torch.device(device)
    if torch.cuda.is_available():
        return torch.device("cuda")
    if getattr(torch.backends, "mps", None) and torch.backends.mps.is_available():
        return torch.device("mps")
    raise GpuUnavailableError("no CUDA or MPS device available")


def gpu_available():
    try:
        resolve_device()
        return True
    except GpuUnavailableError:
        return False


def gpu_rasterize(dl, width_px, height_px, background, device=None):
    """Rasterize a DrawList with tensor ops on an accelerator device."""
    torch = _torch()
    dev = resolve_device(device)
    if width_px < 1 or height_px < 1:
        raise ValueError("canvas must be at least 1x1 px")
    canvas = torch.empty((height_px, width_px, 4), dtype=torch.float64, device=dev)
    canvas[:, :] = torch.tensor(
        [float(c) for c in background], dtype=torch.float64, device=dev
    )
    ys, xs = torch.meshgrid(
        torch.arange(height_px, dtype=torch.float64, device=dev) + 0.5,
        torch.arange(width_px, dtype=torch.float64, device=dev) + 0.5,
        indexing="ij",
    )
    for prim in dl:
        if isinstance(prim, Points):
            _points(torch, canvas, xs, ys, prim, dev)
        elif isinstance(prim, Rects):
            _rects(torch, canvas, xs, ys, prim, dev)
        elif isinstance(prim, Polyline):
            _polyline(torch, canvas, xs, ys, prim, dev)
        elif isinstance(prim, (GlyphRun, ImageBlit)):
            # no tensor path for glyphs/blits; composite the CPU raster
            _via_cpu(torch, canvas, prim, width_px, height_px, dev)
        else:
            raise TypeError(f"unknown primitive {type(prim)!r}")
    out = torch.floor(canvas + 0.5).clamp(0, 255).to(torch.uint8)
    return out.cpu().numpy().tobytes()


def _blend_mask(canvas, mask, color):
    a = float(color[3]) / 255.0
    if a == 0:
        return
    src = canvas.new_tensor([float(color[0]), float(color[1]), float(color[2])])
    m = mask.unsqueeze(-1)
    dst_rgb = canvas[..., :3]
    dst_a = canvas[..., 3:] / 255.0
    out_a = a + dst_a * (1 - a)
    num = src * a + dst_rgb * dst_a * (1 - a)
    blended_rgb = num / out_a.clamp(min=1e-12)
    canvas[..., :3] = dst_rgb * (~m) + blended_rgb * m
    canvas[..., 3:] = canvas[..., 3:] * (~m) + out_a * 255.0 * m


def _points(torch, canvas, xs, ys, prim, dev):
    if len(prim.centers) == 0:
        return
    centers = torch.from_numpy(prim.centers).to(dev)
    r2 = float(prim.radius_px) ** 2
    per_point = isinstance(prim.colors, np.ndarray)
    colors = (
        torch.from_numpy(prim.colors.astype(np.float64)).to(dev)
        if per_point
        else None
    )
    for i in range(len(centers)):
        dx = xs - centers[i, 0]
        dy = ys - centers[i, 1]
        mask = (dx * dx + dy * dy) <= r2
        color = colors[i].tolist() if per_point else prim.colors
        _blend_mask(canvas, mask, color)


def _rects(torch, canvas, xs, ys, prim, dev):
    for x, y, w, h in prim.rects:
        mask = (xs >= x) & (xs < x + w) & (ys >= y) & (ys < y + h)
        _blend_mask(canvas, mask, prim.color)


def _polyline(torch, canvas, xs, ys, prim, dev):
    pts = prim.points
    if len(pts) == 0:
        return
    half2 = (prim.width_px / 2.0) ** 2
    covered = torch.zeros(canvas.shape[:2], dtype=torch.bool, device=dev)
    pairs = zip(pts[:-1], pts[1:]) if len(pts) > 1 else [(pts[0], pts[0])]
    for a, b in pairs:
        abx, aby = float(b[0] - a[0]), float(b[1] - a[1])
        len2 = abx * abx + aby * aby
        if len2 == 0:
            ddx, ddy = xs - float(a[0]), ys - float(a[1])
        else:
            t = ((xs - float(a[0])) * abx + (ys - float(a[1])) * aby) / len2
            t = t.clamp(0.0, 1.0)
            ddx = xs - (float(a[0]) + t * abx)
            ddy = ys - (float(a[1]) + t * aby)
        covered |= (ddx * ddx + ddy * ddy) <= half2
    _blend_mask(canvas, covered, prim.color)


def _via_cpu(torch, canvas, prim, width_px, height_px, dev):
    from .drawlist import DrawList, Rgba8
    from .raster import rasterize

    base = rasterize(DrawList([prim]), width_px, height_px, Rgba8(0, 0, 0, 0))
    overlay = torch.from_numpy(
        np.frombuffer(base, dtype=np.uint8)
        .reshape(height_px, width_px, 4)
        .astype(np.float64)
    ).to(dev)
    sa = overlay[..., 3:] / 255.0
    da = canvas[..., 3:] / 255.0
    out_a = sa + da * (1 - sa)
    num = overlay[..., :3] * sa + canvas[..., :3] * da * (1 - sa)
    canvas[..., :3] = num / out_a.clamp(min=1e-12)
    canvas[..., 3:] = out_a * 255.0
