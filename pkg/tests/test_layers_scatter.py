import numpy as np
import pytest

from pluot import (
    ArrayHandle,
    Camera2D,
    CapacityError,
    MemoCache,
    RenderParams,
    get_colormap,
    world_to_screen,
)
from pluot.compute import CpuBackend
from pluot.layers.scatter import ScatterLayer, ScatterProps
from pluot.scene import LayerNode, RenderContext, RenderStats
from pluot.testing import write_zarr_array

from conftest import memory_registry


def scatter_setup(x, y, value=None, chunk=64, **props):
    entries = {}
    write_zarr_array(entries, "x", np.asarray(x, dtype=np.float64), (chunk,))
    write_zarr_array(entries, "y", np.asarray(y, dtype=np.float64), (chunk,))
    if value is not None:
        write_zarr_array(entries, "v", np.asarray(value, dtype=np.float64), (chunk,))
        props["value"] = {"store": "mem", "path": "v"}
    reg = memory_registry(entries)
    node = LayerNode(
        id="pts",
        kind="scatter",
        props={"x": {"store": "mem", "path": "x"}, "y": {"store": "mem", "path": "y"},
               **props},
    )
    return reg, node


def make_ctx(registry, camera=None):
    camera = camera or Camera2D(0, 0, 1.0, 800, 600)
    params = RenderParams(camera.width_px, camera.height_px)
    return RenderContext(camera, params, registry, MemoCache(), CpuBackend(), RenderStats())


class TestPrepare:
    def test_empty_columns_give_empty_buffer(self):
        reg, node = scatter_setup([], [])
        prepared = ScatterLayer().prepare(node, make_ctx(reg))
        assert len(prepared.centers) == 0

    def test_point_at_camera_center_projects_to_viewport_center(self):
        reg, node = scatter_setup([0.0], [0.0])
        prepared = ScatterLayer().prepare(node, make_ctx(reg))
        assert prepared.centers.tolist() == [[400.0, 300.0]]
        assert prepared.indices.tolist() == [0]

    def test_culling_matches_projection_bounds_oracle(self, rng):
        n = 1000
        x = rng.uniform(-1200, 1200, size=n)
        y = rng.uniform(-1000, 1000, size=n)
        radius = 3.0
        reg, node = scatter_setup(x, y, radius_px=radius)
        cam = Camera2D(0, 0, 1.0, 800, 600)
        prepared = ScatterLayer().prepare(node, make_ctx(reg, cam))
        expected = set()
        for i in range(n):
            sx, sy = world_to_screen(cam, x[i], y[i])
            if -radius <= sx <= 800 + radius and -radius <= sy <= 600 + radius:
                expected.add(i)
        assert set(prepared.indices.tolist()) == expected

    def test_culling_soundness_no_culled_point_covers_a_pixel(self, rng):
        # a culled point's disc cannot reach any pixel center
        n = 500
        x = rng.uniform(-900, 900, size=n)
        y = rng.uniform(-700, 700, size=n)
        radius = 2.5
        reg, node = scatter_setup(x, y, radius_px=radius)
        cam = Camera2D(0, 0, 1.0, 800, 600)
        prepared = ScatterLayer().prepare(node, make_ctx(reg, cam))
        kept = set(prepared.indices.tolist())
        for i in set(range(n)) - kept:
            sx, sy = world_to_screen(cam, x[i], y[i])
            nearest_x = min(max(sx, 0.5), 799.5)
            nearest_y = min(max(sy, 0.5), 599.5)
            assert (sx - nearest_x) ** 2 + (sy - nearest_y) ** 2 > radius ** 2

    def test_length_mismatch_rejected(self):
        reg, node = scatter_setup([1.0, 2.0], [1.0])
        with pytest.raises(ValueError, match="length"):
            ScatterLayer().prepare(node, make_ctx(reg))

    def test_value_column_colors_via_colormap_endpoints(self):
        reg, node = scatter_setup([0.0, 1.0], [0.0, 0.0], value=[10.0, 20.0])
        prepared = ScatterLayer().prepare(node, make_ctx(reg))
        lut = get_colormap("viridis")
        assert prepared.colors[0].tolist() == lut[0].tolist()
        assert prepared.colors[1].tolist() == lut[255].tolist()

    def test_uniform_color_when_no_value_column(self):
        reg, node = scatter_setup([0.0], [0.0], uniform_color=[9, 8, 7, 255])
        prepared = ScatterLayer().prepare(node, make_ctx(reg))
        assert tuple(prepared.colors) == (9, 8, 7, 255)

    def test_columns_loaded_once_across_renders(self):
        reg, node = scatter_setup([0.0, 1.0], [0.0, 1.0])
        ctx = make_ctx(reg)
        layer = ScatterLayer()
        layer.prepare(node, ctx)
        reg.reset_fetch_log()
        layer.prepare(node, ctx)  # same cache -> memo hit
        assert reg.fetch_log == []

    def test_only_referenced_columns_fetched(self):
        reg, node = scatter_setup([0.0], [0.0], value=[5.0])
        node.props.pop("value")
        ctx = make_ctx(reg)
        ScatterLayer().prepare(node, ctx)
        touched = {key for _, key in reg.fetch_log}
        assert not any(key.startswith("v/") for key in touched)


class TestDraw:
    def _prepared(self, n, cap=50_000):
        reg, node = scatter_setup(
            np.linspace(-10, 10, n), np.zeros(n), vector_point_cap=cap
        )
        ctx = make_ctx(reg)
        return node, ScatterLayer().prepare(node, ctx), ctx

    def test_emits_one_points_primitive(self):
        from pluot import DrawList

        node, prepared, ctx = self._prepared(5)
        dl = DrawList()
        ScatterLayer().draw(node, prepared, ctx, dl)
        assert len(dl) == 1
        assert len(dl.primitives[0].centers) == 5

    def test_vector_cap_boundary(self):
        from pluot import DrawList

        node, prepared, ctx = self._prepared(11, cap=10)
        vec_params = RenderParams(800, 600, output_kind="vector")
        ctx.params = vec_params
        with pytest.raises(CapacityError, match="bitmap"):
            ScatterLayer().draw(node, prepared, ctx, DrawList())

    def test_at_cap_is_allowed(self):
        from pluot import DrawList

        node, prepared, ctx = self._prepared(10, cap=10)
        ctx.params = RenderParams(800, 600, output_kind="vector")
        ScatterLayer().draw(node, prepared, ctx, DrawList())

    def test_bitmap_path_has_no_cap(self):
        from pluot import DrawList

        node, prepared, ctx = self._prepared(11, cap=10)
        ScatterLayer().draw(node, prepared, ctx, DrawList())


class TestProps:
    def test_radius_must_be_positive(self):
        with pytest.raises(ValueError):
            ScatterProps(
                x=ArrayHandle("m", "x"), y=ArrayHandle("m", "y"), radius_px=0.0
            )

    def test_defaults(self):
        props = ScatterProps.from_props(
            {"x": {"store": "m", "path": "x"}, "y": {"store": "m", "path": "y"}}
        )
        assert props.vector_point_cap == 50_000
        assert props.radius_px == 2.0
