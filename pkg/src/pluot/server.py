"""``pluot-serve``: HTTP rendering service.

POST /render?format=png|svg renders a plot-spec body to bytes/markup;
POST /pick hit-tests a cursor position; GET /healthz liveness. Filesystem
stores are confined to a whitelist of roots (--root flag or
PLUOT_STORE_ROOT), rejecting path traversal. Each request renders with a
fresh cache, so identical sequential requests return identical bytes.
"""

import argparse
import os

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse, PlainTextResponse, Response

from .errors import CapacityError, CorruptChunkError, LayerError, NotFoundError, SpecError
from .plotspec import pick_spec, render_spec
from .png import encode_png

ROOT_ENV_VAR = "PLUOT_STORE_ROOT"


def _allowed_roots(store_root):
    if store_root:
        return [store_root]
    env = os.environ.get(ROOT_ENV_VAR)
    return [env] if env else []


def create_app(store_root=None):
    app = FastAPI(title="pluot render service")
    # browser viewers may be served from static hosting on another origin
    from fastapi.middleware.cors import CORSMiddleware

    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    roots = _allowed_roots(store_root)

    def problem(status, message, field=None):
        body = {"error": message}
        if field is not None:
            body["field"] = field
        return JSONResponse(status_code=status, content=body)

    @app.get("/healthz")
    def healthz():
        return PlainTextResponse("ok")

    @app.post("/render")
    async def render_endpoint(request: Request, format: str = Query("png")):
        if format not in ("png", "svg"):
            return problem(400, f"unknown format {format!r}")
        try:
            spec = await request.json()
        except Exception:
            return problem(400, "request body is not valid JSON")
        if not isinstance(spec, dict):
            return problem(400, "request body must be a JSON object")
        try:
            if format == "svg":
                result = render_spec(spec, "vector", allowed_roots=roots)
                return Response(content=result.svg, media_type="image/svg+xml")
            result = render_spec(spec, "bitmap", allowed_roots=roots)
            png = encode_png(result.width_px, result.height_px, result.pixels)
            return Response(content=png, media_type="image/png")
        except SpecError as exc:
            return problem(400, str(exc), field=exc.field)
        except NotFoundError as exc:
            return problem(404, str(exc))
        except LayerError as exc:
            if exc.store_key is not None:
                return problem(404, str(exc))
            return problem(500, str(exc))
        except (CapacityError, CorruptChunkError) as exc:
            return problem(500, str(exc))

    @app.post("/pick")
    async def pick_endpoint(request: Request):
        try:
            body = await request.json()
        except Exception:
            return problem(400, "request body is not valid JSON")
        spec = body.get("spec")
        cursor = body.get("cursor")
        if not isinstance(spec, dict) or not isinstance(cursor, (list, tuple)):
            return problem(400, "body must carry 'spec' and 'cursor' [x, y]")
        max_dist = float(body.get("max_dist_px", 8.0))
        try:
            hit = pick_spec(spec, tuple(cursor), max_dist, allowed_roots=roots)
        except SpecError as exc:
            return problem(400, str(exc), field=exc.field)
        except NotFoundError as exc:
            return problem(404, str(exc))
        except LayerError as exc:
            return problem(404 if exc.store_key is not None else 500, str(exc))
        if hit is None:
            return JSONResponse({"result": None})
        result, tooltip = hit
        return JSONResponse(
            {
                "result": {
                    "layer_id": result.layer_id,
                    "datum_index": result.datum_index,
                    "world_pos": list(result.world_pos),
                    "distance_px": result.distance_px,
                    "tooltip": [list(pair) for pair in tooltip],
                }
            }
        )

    return app


def main(argv=None):
    parser = argparse.ArgumentParser(prog="pluot-serve", description=__doc__)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument(
        "--root",
        default=None,
        help=f"directory whitelist for filesystem stores (default: ${ROOT_ENV_VAR})",
    )
    args = parser.parse_args(argv)
    import uvicorn

    uvicorn.run(create_app(args.root), host=args.host, port=args.port)


if __name__ == "__main__":
    main()
