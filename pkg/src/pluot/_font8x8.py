"""Embedded 8x8 monospace bitmap font (printable ASCII 32-126).

Generated by scripts/gen_font_table.py; do not edit by hand.
Each glyph is 8 bytes, one per row top to bottom; bit k of a row
byte set means column k (left to right) is inked."""

import base64

FIRST_CODE = 32
LAST_CODE = 126

_DATA = base64.b64decode(
    "AAAAAAAAAAAAGBgYGBgAAAAkNAAAAAAAAEhs/n8WAgAAEH4eeH4YAAAGCX5+2CAAADwGDvtn"
    "HAAAGBgAAAAAAAAQGAgMGBAAAAwYEBAYCAAACD5+AAAAAAAACBh+GAAAAAAAAAAYCAAAAAAA"
    "PAAAAAAAAAAAGAgAAGAwGAgEAgAAPGZaQmYYAAAcGBgYOHwAAD5gIBgOPgAAPmA8YGIcAAAw"
    "OCR+MCAAAD4GPmBiHgAAPAZ+QmYYAAB+YDAYDAAAADxmPGZmHAAAPGJifHAcAAAAABgAGAgA"
    "AAAAGAAYCAAAAEA+HmAAAAAAAH5+AAAAAAACfHgHAAAAPGA4GAgIAAAQRvvN+wYwABg8JH5D"
    "AAAAPmZ+RmYeAAB8BgIGTjgAAD5iQmJ2BgAAfgZ+BgZ8AAB+Bn4GBgAAAHwGA2JmOAAAQkJ+"
    "QkJCAAB+GBgYGDwAADwgICAyHAAAQjIeMmICAAAGBgYGBnwAAGfn29vDAAAARk5KcmJCAAA8"
    "ZkJCZhgAAD5GZh4GAAAAPGZCQmY4AAA+Yn42QgIAAHwCPmBiHAAA/xgYGBgAAABCYmJiZhgA"
    "AENiZjQcCAAAgcPbfmYAAABCJBg8ZgAAAENmPBgYAAAAfmA4DAZ+AAA4CAgICDgAAAIGDBgw"
    "YAAAHBgYGBgcAAAYZgAAAAAAAAAAAAAAAP8ADAAAAAAAAAAAPGB+ZgwAAAY+ZkZmGAAAADgG"
    "Bk44AABgfGZiZhwAAAA8Zn5GOAAAeH4YGBgAAAAAXGZidmg8AAY+ZmZmAAAAGAwYGBh8AAAQ"
    "HBgQEBgOAAZGNj5mAAAADggICBggAAAAblvb2wAAAAA6ZmZmAAAAADxmQmYYAAAAOmZGZh4C"
    "AABcZmJmeEAAAHQMDAwAAAAAPAY8YBwAAAg+DAwYIAAAAEJmZmYMAAAAQmYkPAgAAACBw1p2"
    "AAAAAEI8GGZCAAAAQmYkGBgOAAB8MBgOPAAAeBgYDhgYIAAYGBgYGBgYAA4YGDgYGAQAAAAA"
    "fgAAAA=="
)


def glyph_rows(ch: str) -> bytes:
    """Return the 8 row bytes for a character (fallback: '?')."""
    code = ord(ch)
    if not FIRST_CODE <= code <= LAST_CODE:
        code = ord("?")
    off = (code - FIRST_CODE) * 8
    return _DATA[off:off + 8]
