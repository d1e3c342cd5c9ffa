"""Finite simplicial graphs: vertex lists, edge sets, full subgraphs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import NotFullSubgraph, UnknownVertex


@dataclass(frozen=True)
class Graph:
    """Simplicial graph: named vertices in declaration order, unordered
    edges, no loops or multi-edges."""

    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]
    _adj: dict = field(default_factory=dict, compare=False, repr=False)

    @staticmethod
    def build(vertices, edges) -> "Graph":
        verts = tuple(vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertices")
        known = set(verts)
        eset = set()
        for pair in edges:
            u, v = pair
            if u not in known or v not in known:
                raise UnknownVertex(f"edge ({u},{v}) mentions an unknown vertex")
            if u == v:
                raise ValueError(f"loop at {u}")
            key = frozenset((u, v))
            if key in eset:
                raise ValueError(f"duplicate edge ({u},{v})")
            eset.add(key)
        g = Graph(verts, frozenset(eset))
        adj = {v: set() for v in verts}
        for e in eset:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        g._adj.update(adj)
        return g

    def adjacent(self, u: str, v: str) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: str) -> set[str]:
        return set(self._adj[v])

    def index(self, v: str) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise UnknownVertex(v) from None

    def link(self, v: str) -> set[str]:
        return self.neighbors(v)

    def star(self, v: str) -> set[str]:
        return self.neighbors(v) | {v}

    def full_subgraph(self, keep) -> "Graph":
        keep_set = set(keep)
        for v in keep_set:
            if v not in self._adj:
                raise UnknownVertex(v)
        verts = tuple(v for v in self.vertices if v in keep_set)
        edges = [tuple(e) for e in self.edges if e <= keep_set]
        return Graph.build(verts, edges)

    def check_full(self, sub: "Graph") -> None:
        """Raise unless ``sub`` is the full subgraph on its vertices."""
        keep = set(sub.vertices)
        induced = {e for e in self.edges if e <= keep}
        if induced != sub.edges:
            raise NotFullSubgraph("subgraph omits an induced edge")

    def is_clique(self, verts) -> bool:
        vs = list(verts)
        return all(self.adjacent(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])

    def to_record(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": sorted(sorted(e) for e in self.edges),
        }

    @staticmethod
    def from_record(record: dict) -> "Graph":
        return Graph.build(record["vertices"], record["edges"])

    @staticmethod
    def from_json(text: str) -> "Graph":
        return Graph.from_record(json.loads(text))


def path_graph(names="abc") -> Graph:
    verts = list(names)
    return Graph.build(verts, [(verts[i], verts[i + 1]) for i in range(len(verts) - 1)])


def cycle_graph(names="abcde") -> Graph:
    verts = list(names)
    edges = [(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))]
    return Graph.build(verts, edges)
