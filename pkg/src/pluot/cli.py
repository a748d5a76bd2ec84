"""``pluot-render``: render a plot-spec file to a PNG or SVG file.

Exit codes: 0 success, 2 invalid spec/usage, 3 store or data failure.
"""

import argparse
import sys
from pathlib import Path

from .errors import CorruptChunkError, NotFoundError, SpecError
from .plotspec import load_spec, render_spec
from .png import encode_png


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="pluot-render",
        description="Render a plot spec to a .png or .svg file.",
    )
    parser.add_argument("--spec", required=True, help="path to the plot-spec JSON file")
    parser.add_argument("--out", required=True, help="output file (.png or .svg)")
    parser.add_argument("--width", type=int, help="override spec width (px)")
    parser.add_argument("--height", type=int, help="override spec height (px)")
    args = parser.parse_args(argv)

    out = Path(args.out)
    suffix = out.suffix.lower()
    if suffix not in (".png", ".svg"):
        print(f"error: --out must end in .png or .svg, got {args.out!r}", file=sys.stderr)
        return 2
    try:
        spec = load_spec(args.spec)
        if suffix == ".svg":
            result = render_spec(
                spec, "vector", width=args.width, height=args.height
            )
            out.write_text(result.svg)
        else:
            result = render_spec(
                spec, "bitmap", width=args.width, height=args.height
            )
            out.write_bytes(
                encode_png(result.width_px, result.height_px, result.pixels)
            )
    except SpecError as exc:
        print(f"error: invalid spec: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotFoundError, CorruptChunkError) as exc:
        print(f"error: data access failed: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # layer/store failures keep their attribution
        from .errors import LayerError, PluotError

        if isinstance(exc, LayerError):
            print(f"error: {exc}", file=sys.stderr)
            return 3
        if isinstance(exc, PluotError):
            print(f"error: {exc}", file=sys.stderr)
            return 3
        raise
    return 0


if __name__ == "__main__":
    sys.exit(main())
