import io

import numpy as np
import pytest
from PIL import Image

from pluot import encode_png, png_dimensions


def pil_decode(data):
    img = Image.open(io.BytesIO(data))
    img.load()
    assert img.mode == "RGBA"
    return np.asarray(img)


class TestEncodePng:
    def test_signature(self):
        data = encode_png(1, 1, bytes([0, 0, 0, 255]))
        assert data[:8] == bytes([0x89, 0x50, 0x4E, 0x47, 0x0D, 0x0A, 0x1A, 0x0A])

    def test_one_red_pixel_round_trip(self):
        data = encode_png(1, 1, bytes([255, 0, 0, 255]))
        assert pil_decode(data).reshape(4).tolist() == [255, 0, 0, 255]

    def test_random_image_round_trip_against_independent_decoder(self, rng):
        pixels = rng.integers(0, 256, size=(16, 16, 4)).astype(np.uint8)
        data = encode_png(16, 16, pixels.tobytes())
        assert (pil_decode(data) == pixels).all()

    def test_byte_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            encode_png(2, 2, bytes(15))

    def test_empty_dimensions_rejected(self):
        with pytest.raises(ValueError):
            encode_png(0, 1, b"")

    def test_deterministic(self, rng):
        pixels = rng.integers(0, 256, size=4 * 8 * 8).astype(np.uint8).tobytes()
        assert encode_png(8, 8, pixels) == encode_png(8, 8, pixels)


class TestPngDimensions:
    def test_reads_header(self):
        data = encode_png(7, 3, bytes(4 * 7 * 3))
        assert png_dimensions(data) == (7, 3)

    def test_rejects_non_png(self):
        with pytest.raises(ValueError):
            png_dimensions(b"not a png at all....")
