"""SVG drawing and JSON (de)serialization of patches."""

from __future__ import annotations

import colorsys
import json
import re
from dataclasses import dataclass, field

import numpy as np

from .cut_and_project import Patch, Tile
from .prototiles import RhombusClass, TriangleClass, rhombic_prototiles, triangular_prototiles
from .root_lattice import LatticeRank

SIG_DIGITS = 12


def quantize(x: float) -> float:
    """Round to 12 significant digits (idempotent)."""
    return float(f"{float(x):.{SIG_DIGITS}g}")


def parse_class_id(text: str) -> RhombusClass | TriangleClass:
    m = re.fullmatch(r"R(\d+)\.(\d+)", text)
    if m:
        return RhombusClass(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"T(\d+)\.(\d+)-(\d+)-(\d+)", text)
    if m:
        h, *parts = map(int, m.groups())
        return TriangleClass(h, tuple(parts))
    raise ValueError(f"not a prototile class id: {text!r}")


def _hue_color(i: int, count: int) -> str:
    r, g, b = colorsys.hls_to_rgb((i / max(count, 1)) % 1.0, 0.62, 0.55)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


def default_palette(h: int) -> dict[str, str]:
    """Evenly spaced hues over every rhombic and triangular class for this h."""
    n = h - 1
    ids = [c.id for c in triangular_prototiles(n)] if n >= 2 else []
    if n >= 3:
        ids = [c.id for c in rhombic_prototiles(n)] + ids
    return {cid: _hue_color(i, len(ids)) for i, cid in enumerate(ids)}


@dataclass
class RenderStyle:
    palette: dict = field(default_factory=dict)
    stroke_width: float = 1.0
    scale: float = 40.0
    margin: float = 10.0
    stroke: str = "#222222"

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("scale must be positive")

    def color(self, cls) -> str:
        try:
            return self.palette[cls.id]
        except KeyError:
            raise KeyError(f"no palette entry for class {cls.id}") from None


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(patch: Patch, style: RenderStyle | None = None) -> str:
    """One polygon per tile, filled by class; byte-for-byte deterministic."""
    style = style or RenderStyle()
    if not style.palette:
        style = RenderStyle(default_palette(patch.h), style.stroke_width, style.scale,
                            style.margin, style.stroke)
    head = '<?xml version="1.0" encoding="UTF-8"?>\n'
    if not patch.tiles:
        reason = (patch.diagnostic or "empty patch").replace("--", "-")
        return (head + '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                'width="1" height="1" viewBox="0 0 1 1">\n'
                f"<!-- {reason} -->\n</svg>\n")
    verts = [np.vectorize(quantize)(t.vertices) for t in patch.tiles]
    allv = np.vstack(verts)
    lo, hi = allv.min(axis=0), allv.max(axis=0)
    s, m = style.scale, style.margin
    width = (hi[0] - lo[0]) * s + 2 * m
    height = (hi[1] - lo[1]) * s + 2 * m
    lines = [
        head.rstrip("\n"),
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<g stroke="{style.stroke}" stroke-width="{_fmt(style.stroke_width)}" '
        'stroke-linejoin="round">',
    ]
    for t, v in zip(patch.tiles, verts):
        x = (v[:, 0] - lo[0]) * s + m
        y = (hi[1] - v[:, 1]) * s + m  # SVG y grows downwards
        pts = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in zip(x, y))
        lines.append(f'<polygon class="{t.cls.id}" fill="{style.color(t.cls)}" points="{pts}"/>')
    lines += ["</g>", "</svg>"]
    return "\n".join(lines) + "\n"


def patch_to_dict(patch: Patch) -> dict:
    return {
        "n": patch.n,
        "h": patch.h,
        "lattice": patch.lattice_kind,
        "shift": [quantize(x) for x in np.asarray(patch.shift).ravel()],
        "radius": quantize(patch.radius),
        "tiles": [
            {
                "class": t.cls.id,
                "vertices": [[quantize(x), quantize(y)] for x, y in t.vertices],
                "source": [int(k) for k in t.source],
            }
            for t in patch.tiles
        ],
    }


def patch_to_json(patch: Patch) -> str:
    return json.dumps(patch_to_dict(patch), indent=1)


PATCH_KEYS = {"n", "h", "lattice", "shift", "radius", "tiles"}


def validate_patch_dict(d: dict) -> None:
    """Raise ValueError unless ``d`` follows the patch JSON schema."""
    if set(d) != PATCH_KEYS:
        raise ValueError(f"patch keys {sorted(d)} differ from {sorted(PATCH_KEYS)}")
    if not isinstance(d["n"], int) or not isinstance(d["h"], int) or d["h"] != d["n"] + 1:
        raise ValueError("n and h must be integers with h = n + 1")
    if d["lattice"] not in ("root", "weight"):
        raise ValueError("lattice must be 'root' or 'weight'")
    if not all(isinstance(x, (int, float)) for x in d["shift"]):
        raise ValueError("shift must be a list of numbers")
    if not isinstance(d["radius"], (int, float)):
        raise ValueError("radius must be a number")
    for t in d["tiles"]:
        if set(t) != {"class", "vertices", "source"}:
            raise ValueError(f"bad tile keys {sorted(t)}")
        parse_class_id(t["class"])
        if not all(len(v) == 2 for v in t["vertices"]) or len(t["vertices"]) not in (3, 4):
            raise ValueError("tile vertices must be 3 or 4 points [x, y]")
        if not all(isinstance(k, int) for k in t["source"]):
            raise ValueError("tile source must be integers")


def patch_from_json(text: str) -> Patch:
    d = json.loads(text)
    validate_patch_dict(d)
    tiles = [
        Tile(parse_class_id(t["class"]), np.array(t["vertices"], dtype=float), tuple(t["source"]))
        for t in d["tiles"]
    ]
    return Patch(LatticeRank(d["n"]), d["lattice"], tiles, d["radius"],
                 np.array(d["shift"], dtype=float))
