"""SVG 1.1 serialization of a DrawList.

Element order matches primitive order; numeric attributes carry up to six
fractional digits. Points become circles, polylines polylines, rects
rects, glyph runs text elements, and image blits data-URI PNG images.
"""

import base64
from xml.sax.saxutils import escape

from .drawlist import GlyphRun, ImageBlit, Points, Polyline, Rects
from .png import encode_png


def fmt_num(v):
    """Compact decimal with at most 6 fractional digits."""
    s = f"{float(v):.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _fill(color):
    attr = f'fill="#{color.r:02x}{color.g:02x}{color.b:02x}"'
    if color.a != 255:
        attr += f' fill-opacity="{fmt_num(color.a / 255.0)}"'
    return attr


def _stroke(color, width):
    attr = (
        f'fill="none" stroke="#{color.r:02x}{color.g:02x}{color.b:02x}"'
        f' stroke-width="{fmt_num(width)}"'
    )
    if color.a != 255:
        attr += f' stroke-opacity="{fmt_num(color.a / 255.0)}"'
    return attr


def to_svg(dl, width_px, height_px, background):
    """Serialize a DrawList into a standalone SVG document string."""
    if width_px < 1 or height_px < 1:
        raise ValueError("canvas must be at least 1x1 px")
    w, h = fmt_num(width_px), fmt_num(height_px)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" {_fill(background)}/>',
    ]
    for prim in dl:
        if isinstance(prim, Points):
            r = fmt_num(prim.radius_px)
            uniform = not hasattr(prim.colors, "shape")
            for i, (cx, cy) in enumerate(prim.centers):
                color = prim.colors if uniform else _row_color(prim.colors[i])
                parts.append(
                    f'<circle cx="{fmt_num(cx)}" cy="{fmt_num(cy)}" r="{r}" '
                    f"{_fill(color)}/>"
                )
        elif isinstance(prim, Polyline):
            pts = " ".join(f"{fmt_num(x)},{fmt_num(y)}" for x, y in prim.points)
            parts.append(
                f'<polyline points="{pts}" {_stroke(prim.color, prim.width_px)} '
                f'stroke-linecap="round" stroke-linejoin="round"/>'
            )
        elif isinstance(prim, Rects):
            for x, y, rw, rh in prim.rects:
                parts.append(
                    f'<rect x="{fmt_num(x)}" y="{fmt_num(y)}" '
                    f'width="{fmt_num(rw)}" height="{fmt_num(rh)}" '
                    f"{_fill(prim.color)}/>"
                )
        elif isinstance(prim, GlyphRun):
            # bitmap glyphs hang from the origin; an 8px-em baseline sits
            # ~6/8 of the way down the cell
            x = fmt_num(prim.origin[0])
            y = fmt_num(prim.origin[1] + prim.size_px * 0.75)
            parts.append(
                f'<text x="{x}" y="{y}" font-family="monospace" '
                f'font-size="{fmt_num(prim.size_px)}" {_fill(prim.color)}>'
                f"{escape(prim.text)}</text>"
            )
        elif isinstance(prim, ImageBlit):
            x, y, bw, bh = prim.dest
            sh, sw = prim.source.shape[:2]
            png = encode_png(sw, sh, prim.source.tobytes())
            href = "data:image/png;base64," + base64.b64encode(png).decode()
            rendering = "pixelated" if prim.sampling == "nearest" else "auto"
            parts.append(
                f'<image x="{fmt_num(x)}" y="{fmt_num(y)}" '
                f'width="{fmt_num(bw)}" height="{fmt_num(bh)}" '
                f'preserveAspectRatio="none" '
                f'style="image-rendering:{rendering}" href="{href}"/>'
            )
        else:
            raise TypeError(f"unknown primitive {type(prim)!r}")
    parts.append("</svg>")
    return "\n".join(parts)


def _row_color(row):
    from .drawlist import Rgba8

    return Rgba8(int(row[0]), int(row[1]), int(row[2]), int(row[3]))
