"""Minimal lossless PNG output: 8-bit RGBA, filter 0, fixed zlib level.

Hand-rolled over stdlib zlib/struct so encoding stays byte-deterministic
and independent of any image library (the test suite decodes with an
unrelated decoder).
"""

import struct
import zlib

_SIGNATURE = b"\x89PNG\r\n\x1a\n"


def _chunk(tag, payload):
    return (
        struct.pack(">I", len(payload))
        + tag
        + payload
        + struct.pack(">I", zlib.crc32(tag + payload) & 0xFFFFFFFF)
    )


def encode_png(width, height, pixels):
    """Encode RGBA8 bytes (row-major, length 4*width*height) as a PNG."""
    if width < 1 or height < 1:
        raise ValueError("image must be at least 1x1")
    pixels = bytes(pixels)
    expected = 4 * width * height
    if len(pixels) != expected:
        raise ValueError(
            f"pixel buffer is {len(pixels)} bytes, expected {expected} "
            f"for {width}x{height} RGBA8"
        )
    stride = 4 * width
    raw = bytearray()
    for y in range(height):
        raw.append(0)  # filter type 0 (None)
        raw += pixels[y * stride:(y + 1) * stride]
    ihdr = struct.pack(">IIBBBBB", width, height, 8, 6, 0, 0, 0)
    return (
        _SIGNATURE
        + _chunk(b"IHDR", ihdr)
        + _chunk(b"IDAT", zlib.compress(bytes(raw), 6))
        + _chunk(b"IEND", b"")
    )


def png_dimensions(data):
    """(width, height) read from a PNG header; used by CLI round-trip checks."""
    if data[:8] != _SIGNATURE or data[12:16] != b"IHDR":
        raise ValueError("not a PNG file")
    return struct.unpack(">II", data[16:24])
