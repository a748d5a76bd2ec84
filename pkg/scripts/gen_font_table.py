"""Regenerate the embedded 8x8 bitmap font table in src/pluot/_font8x8.py.

Rasterizes DejaVu Sans Mono (shipped with matplotlib, public-domain-ish
Bitstream Vera license) at a small pixel size and thresholds the coverage
into 8x8 glyph bitmaps for printable ASCII. Run manually; the output file
is committed so the renderer has no font dependency at runtime.
"""

import base64
from pathlib import Path

import matplotlib
from PIL import Image, ImageDraw, ImageFont

OUT = Path(__file__).resolve().parents[1] / "src" / "pluot" / "_font8x8.py"

FONT_PATH = (
    Path(matplotlib.get_data_path()) / "fonts" / "ttf" / "DejaVuSansMono.ttf"
)

CELL = 8
FIRST, LAST = 32, 126


def glyph_rows(font, ch):
    # Draw on the font's own baseline inside an advance-wide, ascent+descent
    # tall cell, then box-downsample that cell to 8x8 and threshold.
    ascent, descent = font.getmetrics()
    advance = int(round(font.getlength("M")))
    img = Image.new("L", (advance, ascent + descent), 0)
    draw = ImageDraw.Draw(img)
    draw.text((0, 0), ch, fill=255, font=font)
    small = img.resize((CELL, CELL), Image.BOX)
    rows = []
    for y in range(CELL):
        bits = 0
        for x in range(CELL):
            if small.getpixel((x, y)) >= 72:
                bits |= 1 << x
        rows.append(bits)
    return rows


def main():
    font = ImageFont.truetype(str(FONT_PATH), 64)
    data = bytearray()
    for code in range(FIRST, LAST + 1):
        data.extend(glyph_rows(font, chr(code)))
    b64 = base64.b64encode(bytes(data)).decode()
    lines = [
        '"""Embedded 8x8 monospace bitmap font (printable ASCII 32-126).',
        "",
        "Generated by scripts/gen_font_table.py; do not edit by hand.",
        "Each glyph is 8 bytes, one per row top to bottom; bit k of a row",
        'byte set means column k (left to right) is inked."""',
        "",
        "import base64",
        "",
        f"FIRST_CODE = {FIRST}",
        f"LAST_CODE = {LAST}",
        "",
        "_DATA = base64.b64decode(",
    ]
    for i in range(0, len(b64), 72):
        lines.append(f'    "{b64[i:i + 72]}"')
    lines += [
        ")",
        "",
        "",
        "def glyph_rows(ch: str) -> bytes:",
        '    """Return the 8 row bytes for a character (fallback: \'?\')."""',
        "    code = ord(ch)",
        "    if not FIRST_CODE <= code <= LAST_CODE:",
        '        code = ord("?")',
        "    off = (code - FIRST_CODE) * 8",
        "    return _DATA[off:off + 8]",
        "",
    ]
    OUT.write_text("\n".join(lines))
    # eyeball check
    for ch in "Ag5.":
        print(f"--- {ch!r}")
        for row in glyph_rows(font, ch):
            print("".join("#" if row >> x & 1 else "." for x in range(8)))


if __name__ == "__main__":
    main()
