"""Braid diagram rendering, text and SVG.

Diagrams run top to bottom, one crossing row per letter, strands numbered
left to right.  A positive letter on atom i draws strand i+1 crossing
over strand i; the inverse puts strand i over.  Both backends use fixed
per-row cells so output is deterministic and diffable.
"""

from __future__ import annotations

from typing import Optional, Sequence, Union

from .contexts import GarsideContext
from .words import Letter, Word, parse_word, word

Wordish = Union[str, Sequence[Letter]]

_MARGIN = 20
_SPACING = 40
_ROW = 40
_GAP = 0.35


def _check(w: Wordish, ctx: GarsideContext, highlight) -> Word:
    if ctx.kind != "braid":
        raise ValueError(f"rendering draws strand diagrams; {ctx.key} is not a braid context")
    w = ctx.parse(w) if isinstance(w, str) else word(w)
    for atom, _ in w:
        if atom > ctx.natoms:
            raise ValueError(f"atom {atom} out of range for {ctx.key}")
    if highlight is not None:
        i, j = highlight
        if not 0 <= i < j < len(w):
            raise IndexError(f"highlight pair ({i}, {j}) out of range for length {len(w)}")
    return w


def render_diagram(
    w: Wordish,
    ctx: GarsideContext,
    fmt: str = "ascii",
    highlight: Optional[tuple[int, int]] = None,
) -> str:
    """Draw the diagram coded by w; ``highlight`` marks a pair's rows."""
    w = _check(w, ctx, highlight)
    if fmt == "ascii":
        return _ascii(w, ctx.strands, highlight)
    if fmt == "svg":
        return _svg(w, ctx.strands, highlight)
    raise ValueError(f"unknown format {fmt!r}")


def _ascii(w: Word, strands: int, highlight) -> str:
    cols = [2 * k for k in range(strands)]
    flat = ["|" if c in cols else " " for c in range(cols[-1] + 1)]
    marked = set(highlight) if highlight else set()
    lines = ["".join(flat)]
    for t, (atom, exp) in enumerate(w):
        a, b = cols[atom - 1], cols[atom]
        top = flat.copy()
        mid = flat.copy()
        bot = flat.copy()
        top[a], top[b] = "\\", "/"
        mid[a] = mid[b] = " "
        mid[a + 1] = "/" if exp > 0 else "\\"
        bot[a], bot[b] = "/", "\\"
        rows = ["".join(top), "".join(mid), "".join(bot)]
        if t in marked:
            rows[1] += "  <"
        lines.extend(rows)
    lines.append("".join(flat))
    return "\n".join(lines)


def _seg(x1: float, y1: float, x2: float, y2: float) -> str:
    pts = (x1, y1, x2, y2)
    vals = [f"{v:g}" for v in pts]
    return f'<line x1="{vals[0]}" y1="{vals[1]}" x2="{vals[2]}" y2="{vals[3]}"/>'


def _svg(w: Word, strands: int, highlight) -> str:
    xs = [_MARGIN + _SPACING * k for k in range(strands)]
    nrows = max(len(w), 1)
    width = 2 * _MARGIN + _SPACING * (strands - 1)
    height = 2 * _MARGIN + _ROW * nrows
    body: list[str] = []
    marks: list[str] = []
    marked = set(highlight) if highlight else set()
    if not w:
        for x in xs:
            body.append(_seg(x, _MARGIN, x, _MARGIN + _ROW))
    for t, (atom, exp) in enumerate(w):
        y0 = _MARGIN + _ROW * t
        y1 = y0 + _ROW
        a, b = xs[atom - 1], xs[atom]
        for k, x in enumerate(xs):
            if k not in (atom - 1, atom):
                body.append(_seg(x, y0, x, y1))
        # positive: the right strand crosses over, drawn unbroken
        over = (b, a) if exp > 0 else (a, b)
        under = (a, b) if exp > 0 else (b, a)
        body.append(_seg(over[0], y0, over[1], y1))
        ux0, ux1 = under
        dx, dy = ux1 - ux0, _ROW
        body.append(_seg(ux0, y0, ux0 + dx * _GAP, y0 + dy * _GAP))
        body.append(_seg(ux1 - dx * _GAP, y1 - dy * _GAP, ux1, y1))
        if t in marked:
            cx = (a + b) / 2
            cy = y0 + _ROW / 2
            marks.append(f'<circle cx="{cx:g}" cy="{cy:g}" r="16"/>')
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        '<g stroke="#000" stroke-width="2" fill="none" stroke-linecap="round">',
        *body,
        "</g>",
    ]
    if marks:
        parts.append('<g stroke="#c22" stroke-width="2" fill="none">')
        parts.extend(marks)
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts)
