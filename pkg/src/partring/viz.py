"""SVG rendering of all partitions of n as a pile of Cuisenaire rods.

Each partition is one row; the rows stack into a block of n * p(n) unit cells.
Output is byte-stable: fixed palette, fixed ordering, no metadata.
"""

from __future__ import annotations

from partring.numtheory import sigma_table
from partring.partition import partitions_of
from partring.partition_count import p_pentagonal

CELL = 20
GAP = 2
ROW_GAP = 4
MARGIN = 10
CAPTION_LINE = 14
CAPTION_CHAR = 6  # estimated advance of a 10px sans-serif glyph
MAX_N = 30

# Rod colors: 2 -> 4 -> 8 reds, 3 -> 6 -> 9 greens/blue, 5 -> 10 yellow/orange, 7 black.
PALETTE = {
    1: "#ffffff",
    2: "#e41a1c",
    3: "#4daf4a",
    4: "#a50f4d",
    5: "#ffd92f",
    6: "#1b5e20",
    7: "#000000",
    8: "#8b4513",
    9: "#1f4fd1",
    10: "#ff8c00",
}
LARGE_FILL = "#d3d3d3"
STROKE = "#333333"
UNIT_STROKE = "#808080"


def rod_color(part: int) -> str:
    return PALETTE.get(part, LARGE_FILL)


def identity_caption(n: int) -> list[str]:
    """Footer lines spelling out n·p(n) = Σ σ(k) p(n−k) for this n."""
    p = p_pentagonal(n)
    sig = sigma_table(n)
    terms = " + ".join(f"{sig[k]}·{p[n - k]}" for k in range(1, n + 1))
    return [
        f"{n}·p({n}) = {n}·{p[n]} = {n * p[n]}",
        f"= Σ σ(k)p({n}−k) = {terms}",
    ]


def render_svg(n: int) -> str:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
    rows = [tuple(reversed(a.parts)) for a in partitions_of(n)]
    caption = identity_caption(n)
    width = 2 * MARGIN + max(
        n * CELL + (n - 1) * GAP, max(len(line) for line in caption) * CAPTION_CHAR
    )
    body_h = len(rows) * (CELL + ROW_GAP) - ROW_GAP
    height = 2 * MARGIN + body_h + CAPTION_LINE * (len(caption) + 1)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for i, parts in enumerate(rows):
        y = MARGIN + i * (CELL + ROW_GAP)
        out.append(f'<g class="row" data-parts="{",".join(map(str, parts))}">')
        x = MARGIN
        for part in parts:
            fill = rod_color(part)
            stroke = UNIT_STROKE if part == 1 else STROKE
            for j in range(part):
                out.append(
                    f'<rect class="cell" x="{x + j * CELL}" y="{y}" width="{CELL}" '
                    f'height="{CELL}" fill="{fill}" stroke="{stroke}" stroke-width="1"/>'
                )
            if part > 10:
                cx = x + part * CELL // 2
                out.append(
                    f'<text x="{cx}" y="{y + 14}" font-family="sans-serif" '
                    f'font-size="12" text-anchor="middle">{part}</text>'
                )
            x += part * CELL + GAP
        out.append("</g>")
    for i, line in enumerate(caption):
        cap_y = MARGIN + body_h + CAPTION_LINE * (i + 2)
        out.append(
            f'<text class="caption" x="{MARGIN}" y="{cap_y}" font-family="sans-serif" '
            f'font-size="10">{line}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
