"""Regenerate the frozen colormap LUTs in src/pluot/_luts.py.

Samples matplotlib's CC0 viridis/magma maps into 256-entry RGBA8 tables so
the renderer carries no matplotlib dependency at runtime. Run manually;
the output file is committed.
"""

import base64
from pathlib import Path

import numpy as np
from matplotlib import colormaps as mpl_maps

OUT = Path(__file__).resolve().parents[1] / "src" / "pluot" / "_luts.py"

NAMES = ["viridis", "magma"]


def main():
    chunks = []
    for name in NAMES:
        cmap = mpl_maps[name]
        rgba = (cmap(np.linspace(0.0, 1.0, 256)) * 255.0 + 0.5).astype(np.uint8)
        rgba[:, 3] = 255
        b64 = base64.b64encode(rgba.tobytes()).decode()
        rows = "\n".join(
            f'    "{b64[i:i + 72]}"' for i in range(0, len(b64), 72)
        )
        chunks.append(f'"{name}": base64.b64decode(\n{rows}\n)')
    body = ",\n".join(chunks)
    OUT.write_text(
        '"""Frozen 256-entry RGBA8 colormap tables (CC0 viridis/magma).\n'
        "\n"
        'Generated by scripts/gen_colormaps.py; do not edit by hand."""\n'
        "\n"
        "import base64\n"
        "\n"
        "TABLES = {\n" + body + ",\n}\n"
    )
    print("wrote", OUT)


if __name__ == "__main__":
    main()
