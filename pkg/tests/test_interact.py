import numpy as np
import pytest

from pluot import ArrayHandle, build_pick_index, pick, tooltip_payload
from pluot.interact import PickResult
from pluot.testing import write_zarr_array

from conftest import memory_registry
from oracles import brute_pick


class TestBuildPickIndex:
    def test_empty_index(self):
        index = build_pick_index([], 2.0)
        assert len(index) == 0
        assert pick(index, (0, 0), 10.0) is None

    def test_single_point_present_in_overlapped_cells(self):
        index = build_pick_index([(8.0, 8.0)], 2.0)  # cell size 4
        cells = index.cells_of(0)
        # disc [6,10]^2 touches the four cells around the corner at (8,8)
        assert sorted(cells) == [(1, 1), (1, 2), (2, 1), (2, 2)]

    def test_membership_matches_brute_force_disc_cell_overlap(self, rng):
        radius = 3.0
        size = 2 * radius
        pts = rng.uniform(0, 100, size=(1000, 2))
        index = build_pick_index(pts, radius)
        for row in rng.integers(0, 1000, size=50):
            px, py = pts[row]
            expected = set()
            for cy in range(int((py - radius) // size) - 1, int((py + radius) // size) + 2):
                for cx in range(int((px - radius) // size) - 1, int((px + radius) // size) + 2):
                    nx = min(max(px, cx * size), (cx + 1) * size)
                    ny = min(max(py, cy * size), (cy + 1) * size)
                    if (px - nx) ** 2 + (py - ny) ** 2 <= radius * radius:
                        expected.add((cx, cy))
            assert set(index.cells_of(int(row))) == expected

    def test_zero_radius_rejected(self):
        with pytest.raises(ValueError):
            build_pick_index([(0, 0)], 0.0)


class TestPick:
    def test_cursor_on_lone_point(self):
        index = build_pick_index([(10.0, 10.0)], 2.0)
        result = pick(index, (10.0, 10.0), 5.0)
        assert result.datum_index == 0
        assert result.distance_px == 0.0

    def test_cursor_beyond_max_dist(self):
        index = build_pick_index([(10.0, 10.0)], 2.0)
        assert pick(index, (50.0, 50.0), 5.0) is None

    def test_coincident_points_higher_index_wins(self):
        index = build_pick_index([(5.0, 5.0), (5.0, 5.0)], 2.0)
        assert pick(index, (5.0, 5.0), 3.0).datum_index == 1

    def test_click_inside_disc_with_zero_max_dist(self):
        # reach = max(max_dist, radius): the disc itself stays clickable
        index = build_pick_index([(10.0, 10.0)], 4.0)
        result = pick(index, (12.0, 10.0), 0.0)
        assert result is not None
        assert result.distance_px == 2.0

    def test_nearest_wins(self):
        index = build_pick_index([(0.0, 0.0), (10.0, 0.0)], 2.0)
        assert pick(index, (4.0, 0.0), 20.0).datum_index == 0
        assert pick(index, (6.0, 0.0), 20.0).datum_index == 1

    def test_thousand_random_queries_match_brute_force(self, rng):
        pts = rng.uniform(0, 200, size=(400, 2)).round(1)  # rounding forces ties
        radius = 2.5
        index = build_pick_index(pts, radius)
        for _ in range(1000):
            cursor = tuple(rng.uniform(-10, 210, size=2).round(1))
            max_dist = float(rng.choice([0.0, 2.0, 8.0, 30.0]))
            expected = brute_pick(pts.tolist(), radius, cursor, max_dist)
            got = pick(index, cursor, max_dist)
            if expected is None:
                assert got is None
            else:
                assert got.datum_index == expected[0]
                assert got.distance_px == pytest.approx(expected[1])

    def test_grid_completeness_large_max_dist(self, rng):
        pts = rng.uniform(0, 50, size=(100, 2))
        index = build_pick_index(pts, 1.0)
        # cursor far away but max_dist large enough to reach everything
        got = pick(index, (500.0, 500.0), 1000.0)
        expected = brute_pick(pts.tolist(), 1.0, (500.0, 500.0), 1000.0)
        assert got.datum_index == expected[0]

    def test_custom_datum_indices_and_world(self):
        index = build_pick_index(
            [(1.0, 1.0)], 2.0, layer_id="pts", datum_indices=[42],
            world=[(7.5, -3.25)],
        )
        result = pick(index, (1.0, 1.0), 1.0)
        assert result.layer_id == "pts"
        assert result.datum_index == 42
        assert result.world_pos == (7.5, -3.25)


class TestTooltipPayload:
    def _registry(self):
        entries = {}
        write_zarr_array(entries, "a", np.array([1.5, 2.5, 3.5], dtype=np.float32), (2,))
        write_zarr_array(entries, "b", np.array([10, 20, 30], dtype=np.int32), (1,))
        return memory_registry(entries)

    def _result(self, idx=0):
        return PickResult(layer_id="pts", datum_index=idx, world_pos=(0, 0), distance_px=0)

    def test_no_columns_empty_list(self):
        assert tooltip_payload(self._result(), [], self._registry()) == []

    def test_f32_value_formatting(self):
        reg = self._registry()
        payload = tooltip_payload(self._result(0), [("col", ArrayHandle("mem", "a"))], reg)
        assert payload == [("col", "1.5")]

    def test_six_significant_digits(self):
        entries = {}
        write_zarr_array(entries, "c", np.array([1.23456789], dtype=np.float64), (1,))
        reg = memory_registry(entries)
        payload = tooltip_payload(self._result(0), [("c", ArrayHandle("mem", "c"))], reg)
        assert payload == [("c", "1.23457")]

    def test_integer_column(self):
        reg = self._registry()
        payload = tooltip_payload(self._result(2), [("b", ArrayHandle("mem", "b"))], reg)
        assert payload == [("b", "30")]

    def test_single_element_read_touches_one_chunk(self):
        reg = self._registry()
        reg.reset_fetch_log()
        tooltip_payload(self._result(2), [("a", ArrayHandle("mem", "a"))], reg)
        assert [k for _, k in reg.chunk_fetches()] == ["a/c/1"]

    def test_out_of_range_index(self):
        reg = self._registry()
        with pytest.raises(IndexError):
            tooltip_payload(self._result(9), [("a", ArrayHandle("mem", "a"))], reg)
