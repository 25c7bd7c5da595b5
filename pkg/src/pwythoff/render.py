"""Text, PPM and SVG renders of a solved board (origin at the lower left)."""

from __future__ import annotations

from .solver import OutcomeTable

P_RGB = (0, 0, 0)
N_RGB = (255, 255, 255)
CUT_RGB = (128, 128, 128)


def _cell(table: OutcomeTable, x: int, y: int) -> str:
    o = table.outcome((x, y))
    return "#" if o is None else ("P" if o == "P" else ".")


def text_grid(table: OutcomeTable) -> str:
    """One line per row ``y``, top row first; ``P``, ``.`` and ``#`` for removed cells."""
    B = table.bound
    lines = ["".join(_cell(table, x, y) for x in range(B + 1)) for y in range(B, -1, -1)]
    return "\n".join(lines) + "\n"


def ppm(table: OutcomeTable) -> bytes:
    """Binary P6 image, one pixel per cell."""
    B = table.bound
    colors = {"P": P_RGB, ".": N_RGB, "#": CUT_RGB}
    body = bytearray()
    for y in range(B, -1, -1):
        for x in range(B + 1):
            body.extend(colors[_cell(table, x, y)])
    return f"P6\n{B + 1} {B + 1}\n255\n".encode("ascii") + bytes(body)


def svg(table: OutcomeTable) -> str:
    B = table.bound
    n = B + 1
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{n}" height="{n}" viewBox="0 0 {n} {n}">',
        f'<rect x="0" y="0" width="{n}" height="{n}" fill="white"/>',
    ]
    for y in range(B, -1, -1):
        for x in range(n):
            c = _cell(table, x, y)
            if c == ".":
                continue
            fill = "black" if c == "P" else "gray"
            out.append(f'<rect x="{x}" y="{B - y}" width="1" height="1" fill="{fill}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
