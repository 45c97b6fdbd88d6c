"""Factor-table JSON and DOT export for window restrictions of a handle."""

from __future__ import annotations

import colorsys
import hashlib
import json

from .verify import window_elements


def factor_table(handle, n: int) -> dict:
    """Window factor table: every window edge with its factor id."""
    g = handle.group
    window = window_elements(g, n)
    edges = []
    for i, x in enumerate(window):
        for y in window[i + 1 :]:
            if handle.connection_membership(g.difference(y, x)):
                fid = handle.factor_of_edge(x, y)
                edges.append(
                    {"u": g.encode(x), "v": g.encode(y), "factor": handle.id_to_json(fid)}
                )
    return {
        "group": g.name,
        "connection_set": handle.connection_text,
        "window": len(window),
        "edges": edges,
    }


def render_json(handle, n: int) -> str:
    return json.dumps(factor_table(handle, n), indent=2, sort_keys=True)


def render_table(handle, n: int) -> str:
    g = handle.group
    window = window_elements(g, n)
    lines = [f"factor table: {handle.describe()}  N={len(window)}"]
    for i, x in enumerate(window):
        for y in window[i + 1 :]:
            if handle.connection_membership(g.difference(y, x)):
                fid = handle.factor_of_edge(x, y)
                lines.append(f"  {{{g.encode(x)},{g.encode(y)}}} -> {handle.render_id(fid)}")
    return "\n".join(lines)


def _label_color(label: str) -> str:
    # stable hash -> hue; saturation/value fixed for readable edges
    digest = hashlib.sha1(label.encode("utf-8")).hexdigest()
    hue = int(digest[:4], 16) / 0xFFFF
    r, g, b = colorsys.hsv_to_rgb(hue, 0.65, 0.80)
    return f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}"


def render_dot(handle, n: int) -> str:
    g = handle.group
    window = window_elements(g, n)
    lines = ["graph factorization {"]
    lines.append(f'  label="{handle.describe()}  N={len(window)}";')
    lines.append("  node [shape=circle fontsize=10];")
    for x in window:
        lines.append(f'  "{g.encode(x)}";')
    for i, x in enumerate(window):
        for y in window[i + 1 :]:
            if handle.connection_membership(g.difference(y, x)):
                label = handle.render_id(handle.factor_of_edge(x, y))
                color = _label_color(label)
                lines.append(
                    f'  "{g.encode(x)}" -- "{g.encode(y)}" '
                    f'[color="{color}" tooltip="{label}"];'
                )
    lines.append("}")
    return "\n".join(lines)
