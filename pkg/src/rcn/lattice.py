"""
5-limit and 7-limit pitch-class lattices.

Node (f, t, s) is the pitch class of 3**f * 5**t * 7**s. Steps along f are
fifths (drawn horizontally), along t major thirds (diagonally), along s
septimal steps (one layer per power of 7).
"""
import json
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Tuple

from rcn.arith import Monzo, ratio_str
from rcn.commas import Algorithm
from rcn.notation import format_pitch_class_compact, notate

Coord = Tuple[int, int, int]
AXES = ((3, (1, 0, 0)), (5, (0, 1, 0)), (7, (0, 0, 1)))


def parse_range(text: str) -> Tuple[int, int]:
    """``"LO..HI"`` -> (LO, HI), inclusive; negative bounds allowed."""
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"range {text!r} must look like LO..HI")
    lo_i, hi_i = int(lo), int(hi)
    if lo_i > hi_i:
        raise ValueError(f"empty range {text!r}")
    return lo_i, hi_i


@dataclass(frozen=True)
class LatticeSpec:
    prime_limit: int = 5
    fifth_range: Tuple[int, int] = (-4, 4)
    third_range: Tuple[int, int] = (-2, 2)
    seventh_range: Tuple[int, int] = (0, 0)
    algo: Algorithm = Algorithm.DR

    def __post_init__(self):
        if self.prime_limit not in (5, 7):
            raise ValueError("prime_limit must be 5 or 7")
        for name in ("fifth_range", "third_range", "seventh_range"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"{name} is empty")
        if self.prime_limit == 5 and tuple(self.seventh_range) != (0, 0):
            raise ValueError("a 5-limit lattice has no 7 axis; seventh_range must be 0..0")
        object.__setattr__(self, "algo", Algorithm.parse(self.algo))

    def coords(self) -> List[Coord]:
        spans = [range(lo, hi + 1) for lo, hi in
                 (self.fifth_range, self.third_range, self.seventh_range)]
        return [(f, t, s) for s, t, f in product(*reversed(spans))]


def node_ratio(coord: Coord):
    """Octave-reduced ratio in [1, 2) for a lattice coordinate."""
    f, t, s = coord
    r = Monzo({3: f, 5: t, 7: s}).to_rational()
    while r < 1:
        r *= 2
    while r >= 2:
        r /= 2
    return r


def node_label(coord: Coord, algo=Algorithm.DR) -> str:
    f, t, s = coord
    pitch = notate(Monzo({3: f, 5: t, 7: s}), algo)
    return format_pitch_class_compact(pitch)


def build(spec: LatticeSpec) -> Tuple[List[Dict], List[Dict]]:
    coords = spec.coords()
    present = set(coords)
    nodes = [{"id": _node_id(c), "fifth": c[0], "third": c[1], "seventh": c[2],
              "label": node_label(c, spec.algo), "ratio": ratio_str(node_ratio(c))}
             for c in coords]
    edges = []
    for c in coords:
        for prime, step in AXES:
            nxt = tuple(a + d for a, d in zip(c, step))
            if nxt in present:
                edges.append({"source": _node_id(c), "target": _node_id(nxt), "prime": prime})
    return nodes, edges


def _node_id(c: Coord) -> str:
    return "n_" + "_".join(str(v).replace("-", "m") for v in c)


def to_csv(spec: LatticeSpec) -> str:
    nodes, _ = build(spec)
    cols = ["fifth", "third", "seventh", "label", "ratio"]
    lines = [",".join(cols)]
    lines += [",".join(str(n[c]) for c in cols) for n in nodes]
    return "\n".join(lines) + "\n"


def to_json(spec: LatticeSpec) -> str:
    nodes, edges = build(spec)
    return json.dumps({"nodes": nodes, "edges": edges}, indent=1) + "\n"


def to_dot(spec: LatticeSpec) -> str:
    """Graphviz document, one planar triangular grid per power of 7."""
    nodes, edges = build(spec)
    out = ["graph lattice {", '  node [shape=plaintext, fontname="Helvetica"];']
    lo, hi = spec.seventh_range
    for s in range(lo, hi + 1):
        out.append(f"  subgraph cluster_{_node_id((0, 0, s))[2:]} {{")
        out.append(f'    label="7^{s}";')
        for n in nodes:
            if n["seventh"] != s:
                continue
            x = n["fifth"] + 0.5 * n["third"] + 0.25 * s
            y = 0.866 * n["third"] + 0.4 * s
            out.append(f'    {n["id"]} [label="{_dot_escape(n["label"])}", pos="{x:.3f},{y:.3f}!"];')
        out.append("  }")
    style = {3: "solid", 5: "solid", 7: "dashed"}
    for e in edges:
        out.append(f'  {e["source"]} -- {e["target"]} [style={style[e["prime"]]}];')
    out.append("}")
    return "\n".join(out) + "\n"


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export(spec: LatticeSpec, fmt: str = "csv") -> str:
    writers = {"csv": to_csv, "json": to_json, "dot": to_dot}
    if fmt not in writers:
        raise ValueError(f"lattice format must be one of {sorted(writers)}")
    return writers[fmt](spec)
