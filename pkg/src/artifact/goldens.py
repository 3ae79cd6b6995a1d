"""Bundled reproduction cases for the Minkowski-sum and Hadamard-product results."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .arith import Field
from .parsing import IdealFile, parse_ideal_file
from .variety import VarietyIdeal

DATA = resources.files("artifact") / "data"


def bundled_names() -> list[str]:
    return sorted(p.name[: -len(".ideal")] for p in DATA.iterdir() if p.name.endswith(".ideal"))


def read_ideal(name_or_path: str, field: Field | None = None) -> VarietyIdeal:
    """Load an ideal file from disk, or a bundled one by name (``circle_xy``)."""
    path = Path(name_or_path)
    if path.exists():
        text = path.read_text()
    else:
        stem = name_or_path[: -len(".ideal")] if name_or_path.endswith(".ideal") else name_or_path
        bundled = DATA / f"{stem}.ideal"
        if not bundled.is_file():
            raise FileNotFoundError(f"no ideal file {name_or_path!r} (and no bundled case of that name)")
        text = bundled.read_text()
    return to_variety(parse_ideal_file(text, field))


def to_variety(f: IdealFile) -> VarietyIdeal:
    return VarietyIdeal(f.ring, f.generators, f.projective)


@dataclass(frozen=True)
class Golden:
    name: str
    command: str
    x: str
    y: str
    expect_dim: int | None
    expect_deg: int | None
    note: str


GOLDENS = (
    Golden("circles-sum", "sum", "circle_xy", "circle_xz_r2", 2, 4, "circles in two coordinate planes"),
    Golden("parabolas-sum", "sum", "parabola_xy", "parabola_yz", 2, 4, "parabolas in two coordinate planes"),
    Golden("cubic-circle-xy", "sum", "twisted_cubic", "circle_xy", 2, 6, "twisted cubic plus a unit circle"),
    Golden("cubic-circle-yz", "sum", "twisted_cubic", "circle_yz", 2, 6, "twisted cubic plus a unit circle"),
    Golden("cubic-circle-xz", "sum", "twisted_cubic", "circle_xz", 2, 6, "twisted cubic plus a unit circle"),
    Golden("circles-product", "hadamard", "circle_z1", "circle_y1", 2, 4, "circles at height one"),
    Golden("tilted-circles-product", "hadamard", "tilted_circle_a", "tilted_circle_b", 2, 2, "tilted circles"),
    Golden("hyperbolas", "sum", "hyperbola_plus", "hyperbola_minus", 2, 1, "sum fills the plane (zero ideal)"),
    Golden("rnc-point", "hadamard-proj", "rational_normal_curve", "point_0110", 1, 1, "closure is the line x0 = x3 = 0"),
    Golden("skew-lines", "hadamard-proj", "line_H01", "line_H23", -1, 0, "Hadamard product is empty"),
    Golden("rank1-square", "hadamard-proj", "rank1_2x3", "rank1_2x3", 3, 3, "rank-one matrices are Hadamard-closed"),
    Golden("complementary-circles", "sum", "circle_x1x2_4d", "circle_x3x4_4d", 2, 4, "deg X * deg Y"),
)
