import numpy as np
import pytest

from pluot import DrawList, GlyphRun, ImageBlit, Points, Polyline, Rects, Rgba8, rasterize

from oracles import brute_raster_points

WHITE = Rgba8(255, 255, 255, 255)
RED = Rgba8(255, 0, 0, 255)


def as_grid(raw, w, h):
    return np.frombuffer(raw, dtype=np.uint8).reshape(h, w, 4)


class TestBackgroundAndRects:
    def test_empty_drawlist_is_background(self):
        raw = rasterize(DrawList(), 3, 2, Rgba8(1, 2, 3, 4))
        assert len(raw) == 4 * 3 * 2
        assert as_grid(raw, 3, 2).reshape(-1, 4).tolist() == [[1, 2, 3, 4]] * 6

    def test_full_coverage_rect(self):
        dl = DrawList([Rects([(0, 0, 4, 4)], RED)])
        grid = as_grid(rasterize(dl, 4, 4, WHITE), 4, 4)
        assert (grid == [255, 0, 0, 255]).all()

    def test_pixel_center_rule_half_open(self):
        # rect [1, 3) x [1, 2): covers centers 1.5, 2.5 in x and 1.5 in y
        dl = DrawList([Rects([(1, 1, 2, 1)], RED)])
        grid = as_grid(rasterize(dl, 4, 3, WHITE), 4, 3)
        covered = {(x, y) for y in range(3) for x in range(4)
                   if grid[y, x].tolist() == [255, 0, 0, 255]}
        assert covered == {(1, 1), (2, 1)}

    def test_zero_area_rect_draws_nothing(self):
        dl = DrawList([Rects([(1, 1, 0, 5)], RED)])
        assert rasterize(dl, 4, 4, WHITE) == rasterize(DrawList(), 4, 4, WHITE)


class TestPoints:
    def test_radius_one_disc_matches_distance_oracle(self):
        dl = DrawList([Points([(2.0, 2.0)], 1.0, RED)])
        grid = as_grid(rasterize(dl, 4, 4, WHITE), 4, 4)
        for y in range(4):
            for x in range(4):
                inside = (x + 0.5 - 2.0) ** 2 + (y + 0.5 - 2.0) ** 2 <= 1.0
                expected = [255, 0, 0, 255] if inside else [255, 255, 255, 255]
                assert grid[y, x].tolist() == expected, (x, y)

    def test_random_points_match_brute_force(self, rng):
        w = h = 12
        for _ in range(25):
            n = int(rng.integers(0, 6))
            pts = []
            centers = []
            colors = np.empty((n, 4), dtype=np.uint8)
            for i in range(n):
                cx = float(rng.uniform(-3, w + 3))
                cy = float(rng.uniform(-3, h + 3))
                r = float(rng.uniform(0.3, 3.0))
                rgba = tuple(int(v) for v in rng.integers(0, 256, size=4))
                pts.append((cx, cy, r, rgba))
                centers.append((cx, cy))
                colors[i] = rgba
            if not pts:
                continue
            radius = pts[0][2]
            pts = [(cx, cy, radius, c) for cx, cy, _, c in pts]
            dl = DrawList([Points(centers, radius, colors)])
            got = as_grid(rasterize(dl, w, h, WHITE), w, h)
            want = brute_raster_points(w, h, WHITE, pts)
            for y in range(h):
                for x in range(w):
                    assert tuple(got[y, x].tolist()) == want[y][x], (x, y)

    def test_point_order_last_on_top(self):
        colors = np.array([[255, 0, 0, 255], [0, 255, 0, 255]], dtype=np.uint8)
        dl = DrawList([Points([(2.0, 2.0), (2.0, 2.0)], 1.0, colors)])
        grid = as_grid(rasterize(dl, 4, 4, WHITE), 4, 4)
        assert grid[2, 2].tolist() == [0, 255, 0, 255]

    def test_off_canvas_points_clipped_silently(self):
        dl = DrawList([Points([(-10.0, -10.0), (100.0, 5.0)], 2.0, RED)])
        assert rasterize(dl, 8, 8, WHITE) == rasterize(DrawList(), 8, 8, WHITE)


class TestBlending:
    def test_opaque_idempotence(self):
        dl1 = DrawList([Rects([(1, 1, 3, 3)], RED)])
        dl2 = DrawList([Rects([(1, 1, 3, 3)], RED), Rects([(1, 1, 3, 3)], RED)])
        assert rasterize(dl1, 6, 6, WHITE) == rasterize(dl2, 6, 6, WHITE)

    def test_half_alpha_over_white(self):
        dl = DrawList([Rects([(0, 0, 1, 1)], Rgba8(0, 0, 0, 128))])
        grid = as_grid(rasterize(dl, 1, 1, WHITE), 1, 1)
        # src-over: 255*(1-128/255) = 127.0 -> rounds half-up to 127
        assert grid[0, 0].tolist() == [127, 127, 127, 255]

    def test_translucent_over_transparent_background(self):
        dl = DrawList([Rects([(0, 0, 1, 1)], Rgba8(200, 0, 0, 100))])
        grid = as_grid(rasterize(dl, 1, 1, Rgba8(0, 0, 0, 0)), 1, 1)
        assert grid[0, 0].tolist() == [200, 0, 0, 100]

    def test_determinism_across_runs(self, rng):
        centers = rng.uniform(0, 16, size=(50, 2))
        colors = rng.integers(0, 256, size=(50, 4)).astype(np.uint8)
        dl = DrawList([Points(centers, 1.5, colors), Rects([(2, 2, 5, 5)], Rgba8(0, 0, 255, 99))])
        assert rasterize(dl, 16, 16, WHITE) == rasterize(dl, 16, 16, WHITE)


class TestPolyline:
    def test_horizontal_line_coverage_matches_distance_oracle(self):
        dl = DrawList([Polyline([(1.0, 3.0), (7.0, 3.0)], 2.0, RED)])
        grid = as_grid(rasterize(dl, 8, 6, WHITE), 8, 6)
        for y in range(6):
            for x in range(8):
                px, py = x + 0.5, y + 0.5
                t = min(max((px - 1.0) / 6.0, 0.0), 1.0)
                qx, qy = 1.0 + 6.0 * t, 3.0
                inside = (px - qx) ** 2 + (py - qy) ** 2 <= 1.0
                expected = [255, 0, 0, 255] if inside else [255, 255, 255, 255]
                assert grid[y, x].tolist() == expected, (x, y)

    def test_single_point_polyline_is_a_dot(self):
        dl = DrawList([Polyline([(4.0, 4.0)], 3.0, RED)])
        grid = as_grid(rasterize(dl, 8, 8, WHITE), 8, 8)
        assert grid[4, 4].tolist() == [255, 0, 0, 255]

    def test_shared_joint_blends_once(self):
        color = Rgba8(0, 0, 0, 128)
        dl = DrawList([Polyline([(1.0, 4.0), (4.0, 4.0), (7.0, 4.0)], 3.0, color)])
        grid = as_grid(rasterize(dl, 8, 8, WHITE), 8, 8)
        # the joint pixel must blend exactly once -> same value as mid-span
        assert grid[4, 4].tolist() == grid[4, 2].tolist() == [127, 127, 127, 255]

    def test_fully_offscreen_clipped(self):
        dl = DrawList([Polyline([(-20.0, -20.0), (-10.0, -25.0)], 2.0, RED)])
        assert rasterize(dl, 8, 8, WHITE) == rasterize(DrawList(), 8, 8, WHITE)


class TestGlyphsAndBlits:
    def test_glyph_inks_pixels_inside_cell_only(self):
        dl = DrawList([GlyphRun((4, 4), "0", 8.0, RED)])
        grid = as_grid(rasterize(dl, 16, 16, WHITE), 16, 16)
        inked = np.argwhere((grid == [255, 0, 0, 255]).all(axis=2))
        assert len(inked) > 0
        assert (inked[:, 0] >= 4).all() and (inked[:, 0] < 12).all()
        assert (inked[:, 1] >= 4).all() and (inked[:, 1] < 12).all()

    def test_glyph_scale_doubles_cell(self):
        dl = DrawList([GlyphRun((0, 0), "8", 16.0, RED)])
        grid = as_grid(rasterize(dl, 16, 16, WHITE), 16, 16)
        inked = np.argwhere((grid == [255, 0, 0, 255]).all(axis=2))
        assert inked[:, 0].max() >= 8  # glyph taller than one 8px cell

    def test_glyph_clipped_at_canvas_edge(self):
        dl = DrawList([GlyphRun((-4, -4), "M", 8.0, RED)])
        rasterize(dl, 8, 8, WHITE)  # must not raise

    def test_blit_nearest_quadrants(self):
        src = np.zeros((2, 2, 4), dtype=np.uint8)
        src[0, 0] = [255, 0, 0, 255]
        src[0, 1] = [0, 255, 0, 255]
        src[1, 0] = [0, 0, 255, 255]
        src[1, 1] = [255, 255, 0, 255]
        dl = DrawList([ImageBlit((0, 0, 4, 4), src, "nearest")])
        grid = as_grid(rasterize(dl, 4, 4, WHITE), 4, 4)
        assert grid[0, 0].tolist() == [255, 0, 0, 255]
        assert grid[0, 3].tolist() == [0, 255, 0, 255]
        assert grid[3, 0].tolist() == [0, 0, 255, 255]
        assert grid[3, 3].tolist() == [255, 255, 0, 255]

    def test_blit_bilinear_midpoint_average(self):
        src = np.zeros((1, 2, 4), dtype=np.uint8)
        src[0, 0] = [0, 0, 0, 255]
        src[0, 1] = [255, 255, 255, 255]
        # dest 2x1: centers at u=0.5 and 1.5 in texel space -> exact texels;
        # a 4-wide dest puts centers at u=0.5,1.0,1.5,2.0 -> second is 50/50
        dl = DrawList([ImageBlit((0, 0, 4, 1), src, "bilinear")])
        grid = as_grid(rasterize(dl, 4, 1, WHITE), 4, 1)
        assert grid[0, 0].tolist() == [0, 0, 0, 255]
        assert grid[0, 1].tolist() == [64, 64, 64, 255]  # 0.25 across
        assert grid[0, 3].tolist() == [255, 255, 255, 255]

    def test_blit_partially_offscreen(self):
        src = np.full((2, 2, 4), 255, dtype=np.uint8)
        dl = DrawList([ImageBlit((-1, -1, 4, 4), src, "nearest")])
        rasterize(dl, 4, 4, WHITE)  # must not raise


class TestValidation:
    def test_rejects_empty_canvas(self):
        with pytest.raises(ValueError):
            rasterize(DrawList(), 0, 4, WHITE)
