"""Plot-spec files: a versioned JSON description of size, camera, stores,
and layers that the CLI, HTTP service, and language bindings all render
through the same engine path.

The published JSON schema ships in-package as ``plotspec.schema.json``.
"""

import json
from importlib import resources
from pathlib import Path

import jsonschema

from .camera import Camera2D
from .chunkstore import FileSystemStore, MemoryStore, StoreRegistry
from .drawlist import Rgba8
from .errors import SpecError
from .memo import MemoCache
from .scene import LayerNode, RenderParams, render


def _schema():
    with resources.files("pluot").joinpath("plotspec.schema.json").open("rb") as fh:
        return json.load(fh)


_VALIDATOR = jsonschema.Draft202012Validator(_schema())


def validate_spec(spec):
    """Validate a spec mapping against the published schema, then check
    cross-references (store names, unique layer ids). Raises SpecError."""
    errors = sorted(_VALIDATOR.iter_errors(spec), key=jsonschema.exceptions.relevance)
    if errors:
        best = jsonschema.exceptions.best_match(errors)
        field = best.json_path.lstrip("$").lstrip(".") or "(root)"
        raise SpecError(f"{field}: {best.message}", field=field)
    declared = {s["name"] for s in spec.get("stores", [])}
    names = [s["name"] for s in spec.get("stores", [])]
    if len(names) != len(set(names)):
        raise SpecError("stores: duplicate store names", field="stores")
    ids = set()
    for i, layer in enumerate(spec["layers"]):
        lid = layer.get("id", f"layer{i}")
        if lid in ids:
            raise SpecError(
                f"layers[{i}].id: duplicate layer id {lid!r}", field=f"layers[{i}].id"
            )
        ids.add(lid)
    return declared


def _handle_fields(layer):
    for key in ("x", "y", "value", "values", "group"):
        if isinstance(layer.get(key), dict):
            yield key, layer[key]
    for col in layer.get("tooltip_columns", []):
        yield "tooltip_columns", col


def check_store_references(spec, registry):
    for i, layer in enumerate(spec["layers"]):
        for key, handle in _handle_fields(layer):
            if handle["store"] not in registry:
                raise SpecError(
                    f"layers[{i}].{key}.store: store {handle['store']!r} is not "
                    "declared or registered",
                    field=f"layers[{i}].{key}.store",
                )


def build_registry(spec, ambient=None, allowed_roots=None):
    """Construct stores declared in the spec on top of an optional ambient
    registry (used by bindings for pre-registered stores).

    ``allowed_roots`` confines filesystem stores to the given directories
    (the HTTP service's whitelist); escapes raise SpecError.
    """
    registry = ambient if ambient is not None else StoreRegistry()
    for i, store_spec in enumerate(spec.get("stores", [])):
        name = store_spec["name"]
        kind = store_spec["kind"]
        root = store_spec.get("root")
        if kind == "filesystem":
            if not root:
                raise SpecError(
                    f"stores[{i}].root: filesystem stores need a root",
                    field=f"stores[{i}].root",
                )
            path = Path(root)
            if allowed_roots is not None:
                path = path.resolve()
                if not any(
                    path.is_relative_to(Path(allow).resolve())
                    for allow in allowed_roots
                ):
                    raise SpecError(
                        f"stores[{i}].root: {root!r} is outside the allowed "
                        "store roots",
                        field=f"stores[{i}].root",
                    )
            registry.register(name, FileSystemStore(path))
        else:
            entries = {}
            if root:
                base = Path(root)
                entries = {
                    str(p.relative_to(base)).replace("\\", "/"): p.read_bytes()
                    for p in base.rglob("*")
                    if p.is_file()
                }
            registry.register(name, MemoryStore(entries))
    check_store_references(spec, registry)
    return registry


def build_scene(spec):
    scene = []
    for i, layer in enumerate(spec["layers"]):
        props = {k: v for k, v in layer.items() if k not in ("type", "id")}
        scene.append(
            LayerNode(id=layer.get("id", f"layer{i}"), kind=layer["type"], props=props)
        )
    return scene


def build_camera(spec, width=None, height=None):
    cam = spec["camera"]
    return Camera2D(
        center_x=float(cam["center"][0]),
        center_y=float(cam["center"][1]),
        zoom=float(cam["zoom"]),
        width_px=int(width or spec["width"]),
        height_px=int(height or spec["height"]),
    )


def render_spec(
    spec,
    output_kind,
    *,
    registry=None,
    cache=None,
    width=None,
    height=None,
    allowed_roots=None,
    stats=None,
):
    """Validate and render a spec mapping to a Bitmap or Vector."""
    validate_spec(spec)
    registry = build_registry(spec, ambient=registry, allowed_roots=allowed_roots)
    camera = build_camera(spec, width, height)
    params = RenderParams(
        width_px=camera.width_px,
        height_px=camera.height_px,
        device_pixel_ratio=float(spec.get("device_pixel_ratio", 1.0)),
        background=Rgba8(*spec.get("background", (255, 255, 255, 255))),
        output_kind=output_kind,
    )
    cache = cache if cache is not None else MemoCache()
    return render(build_scene(spec), camera, params, registry, cache, stats=stats)


def load_spec(path):
    """Parse a spec file; JSON syntax errors become line-addressed
    SpecErrors."""
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(
            f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}", field=None
        ) from exc


def pick_spec(spec, cursor_px, max_dist_px, *, registry=None, cache=None,
              width=None, height=None, allowed_roots=None):
    """Hit-test a spec at a cursor position without producing pixels.

    Runs the scatter layers' prepare phase (warm-cache cheap), builds pick
    indexes, and returns (PickResult, tooltip pairs) for the topmost hit,
    or None. Later layers win distance ties.
    """
    from .compute import CpuBackend
    from .interact import build_pick_index, pick, tooltip_payload
    from .layers.scatter import ScatterLayer, ScatterProps
    from .scene import RenderStats, RenderContext

    validate_spec(spec)
    registry = build_registry(spec, ambient=registry, allowed_roots=allowed_roots)
    camera = build_camera(spec, width, height)
    params = RenderParams(
        width_px=camera.width_px, height_px=camera.height_px, output_kind="bitmap"
    )
    ctx = RenderContext(
        camera=camera,
        params=params,
        registry=registry,
        cache=cache if cache is not None else MemoCache(),
        backend=CpuBackend(),
        stats=RenderStats(),
    )
    impl = ScatterLayer()
    best = None
    best_tooltip = None
    for node in build_scene(spec):
        if node.kind != "scatter":
            continue
        prepared = impl.prepare(node, ctx)
        if len(prepared.centers) == 0:
            continue
        index = build_pick_index(
            prepared.centers,
            prepared.radius_px,
            layer_id=node.id,
            datum_indices=prepared.indices,
            world=prepared.world,
        )
        result = pick(index, cursor_px, max_dist_px)
        if result is None:
            continue
        if best is None or result.distance_px <= best.distance_px:
            best = result
            columns = [
                (col["name"], _column_handle(col))
                for col in node.props.get("tooltip_columns", [])
            ]
            best_tooltip = tooltip_payload(result, columns, registry)
    if best is None:
        return None
    return best, best_tooltip


def _column_handle(col):
    from .chunkstore import ArrayHandle

    return ArrayHandle(store_name=col["store"], path=col["path"])
