"""TikZ and SVG drawings of lattice paths: grid, dashed boundary line, bold
path and South-step labels."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .paths import LatticePath


def _label_positions(path: LatticePath) -> list:
    """``(x, y_mid, label)`` for each labeled South step."""
    if path.labels is None:
        return []
    out = []
    labels = iter(path.labels)
    x, y = 0, path.n
    for step in path.steps:
        if step == "S":
            out.append((x, y - 0.5, next(labels)))
            y -= 1
        else:
            x += 1
    return out


def _diagonal(n: int, k: int) -> tuple:
    # the line x + y = n + k clipped to the n x n box
    return (k, n), (n, k)


def to_tikz(path: LatticePath, k: int = 0, scale: float = 0.8) -> str:
    n = path.n
    (x0, y0), (x1, y1) = _diagonal(n, k)
    coords = "--".join(f"({x},{y})" for x, y in path.corners())
    lines = [
        f"\\begin{{tikzpicture}}[scale={scale}]",
        f"\\draw[help lines] (0,0) grid +({n},{n});",
        f"\\draw[dashed] ({x0},{y0}) -- ({x1},{y1});",
        f"\\draw [color=black, line width=2] {coords};",
    ]
    for x, y, label in _label_positions(path):
        lines.append(f"\\draw ({x - 0.25:g},{y:g}) node {{{label}}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def to_svg(path: LatticePath, k: int = 0, cell: int = 40) -> str:
    n = path.n
    pad = cell
    size = n * cell + 2 * pad

    def px(x, y):
        # SVG's y axis points down
        return pad + x * cell, pad + (n - y) * cell

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        '<g stroke="#bbbbbb" stroke-width="1">',
    ]
    for i in range(n + 1):
        ax, ay = px(i, 0)
        bx, by = px(i, n)
        parts.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
        ax, ay = px(0, i)
        bx, by = px(n, i)
        parts.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
    parts.append("</g>")
    (dx0, dy0), (dx1, dy1) = _diagonal(n, k)
    ax, ay = px(dx0, dy0)
    bx, by = px(dx1, dy1)
    parts.append(
        f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="black" stroke-dasharray="6,4"/>'
    )
    points = " ".join("%g,%g" % px(x, y) for x, y in path.corners())
    parts.append(f'<polyline points="{points}" fill="none" stroke="black" stroke-width="4"/>')
    for x, y, label in _label_positions(path):
        tx, ty = px(x - 0.25, y)
        parts.append(
            f'<text x="{tx:g}" y="{ty:g}" font-size="{cell // 2}" '
            f'text-anchor="middle" dominant-baseline="central">{escape(str(label))}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
