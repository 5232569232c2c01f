"""Crystal graphs: vertices with weights, indexed f/e edges, DOT and JSON export."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

Weight = tuple[int, ...]


@dataclass(frozen=True)
class CrystalVertex:
    id: int
    payload: object
    weight_a: Weight | None
    weight_b: Weight


@dataclass
class CrystalGraph:
    """Finite crystal: f-edges stored as (vertex id, operator index) -> id.

    e-edges are the inverses of the f-edges.  Immutable by convention after
    construction; all lookups are read-only.
    """

    vertices: tuple[CrystalVertex, ...]
    edges: dict[tuple[int, int], int]
    _reverse: dict[tuple[int, int], int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        rev: dict[tuple[int, int], int] = {}
        for (src, i), dst in self.edges.items():
            key = (dst, i)
            if key in rev:
                raise ValueError(f"f_{i} is not injective at vertex {dst}")
            rev[key] = src
        self._reverse = rev

    def f(self, vertex_id: int, i: int) -> int | None:
        return self.edges.get((vertex_id, i))

    def e(self, vertex_id: int, i: int) -> int | None:
        return self._reverse.get((vertex_id, i))

    def operator_indices(self) -> tuple[int, ...]:
        return tuple(sorted({i for _, i in self.edges}))

    def highest_weight_ids(self, indices: Iterable[int] | None = None) -> list[int]:
        idx = tuple(indices) if indices is not None else self.operator_indices()
        return [
            v.id
            for v in self.vertices
            if all(self.e(v.id, i) is None for i in idx)
        ]

    def components(self) -> list[list[int]]:
        """Vertex ids per connected component, each sorted, in sorted order."""
        parent = {v.id: v.id for v in self.vertices}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (src, _), dst in self.edges.items():
            ra, rb = find(src), find(dst)
            if ra != rb:
                parent[ra] = rb
        groups: dict[int, list[int]] = {}
        for v in self.vertices:
            groups.setdefault(find(v.id), []).append(v.id)
        return sorted(sorted(g) for g in groups.values())

    def to_json(self) -> dict:
        return {
            "vertices": [
                {
                    "id": v.id,
                    "payload": v.payload,
                    "weight_a": list(v.weight_a) if v.weight_a is not None else None,
                    "weight_b": list(v.weight_b),
                }
                for v in self.vertices
            ],
            "edges": [
                {"from": src, "i": i, "dir": "f", "to": dst}
                for (src, i), dst in sorted(self.edges.items())
            ],
        }


def build_graph(
    payloads: Sequence[object],
    weights_a: Sequence[Weight | None],
    weights_b: Sequence[Weight],
    f_edges: Callable[[int], Iterable[tuple[int, int]]],
) -> CrystalGraph:
    """Assemble a graph; ids are ordinals of the already-sorted payload list."""
    vertices = tuple(
        CrystalVertex(i, payloads[i], weights_a[i], weights_b[i])
        for i in range(len(payloads))
    )
    edges: dict[tuple[int, int], int] = {}
    for idx in range(len(payloads)):
        for i, dst in f_edges(idx):
            edges[(idx, i)] = dst
    return CrystalGraph(vertices, edges)


def _vertex_label(v: CrystalVertex) -> str:
    if isinstance(v.payload, dict) and "rows" in v.payload:
        text = json.dumps(v.payload["rows"], separators=(",", ":"))
    else:
        text = json.dumps(v.payload, separators=(",", ":"))
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export_crystal(g: CrystalGraph, format: str = "dot") -> str:
    """Serialize a crystal graph; byte-stable across runs."""
    if format == "json":
        return json.dumps(g.to_json(), separators=(",", ":"), sort_keys=True)
    if format != "dot":
        raise ValueError(f"unknown format {format!r}")
    lines = ["digraph crystal {"]
    for v in g.vertices:
        attrs = [f'label="{_vertex_label(v)}"']
        if v.weight_a is not None:
            attrs.append(f'weight_a="{",".join(map(str, v.weight_a))}"')
        attrs.append(f'weight_b="{",".join(map(str, v.weight_b))}"')
        lines.append(f'  v{v.id} [{" ".join(attrs)}];')
    for (src, i), dst in sorted(g.edges.items()):
        lines.append(f'  v{src} -> v{dst} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
