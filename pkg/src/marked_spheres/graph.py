"""Labelled graphs with their connected-component partition, plus DOT/JSON export."""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx


@dataclass
class ComponentGraph:
    vertices: list[str]
    edges: set[frozenset] = field(default_factory=set)
    name: str = "G"
    # named vertex groups, drawn as DOT clusters
    clusters: dict[str, list[str]] = field(default_factory=dict)

    def add_edge(self, u: str, v: str) -> None:
        if u == v:
            return
        if u not in self.vertices or v not in self.vertices:
            raise KeyError(f"unknown vertex in edge {u!r} -- {v!r}")
        self.edges.add(frozenset((u, v)))

    def _nx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(tuple(e) for e in self.edges)
        return g

    def components(self) -> list[list[str]]:
        """Connected components, each in vertex order, listed by first vertex."""
        order = {v: i for i, v in enumerate(self.vertices)}
        comps = [sorted(c, key=order.__getitem__) for c in nx.connected_components(self._nx())]
        return sorted(comps, key=lambda c: order[c[0]])

    @property
    def component_count(self) -> int:
        return nx.number_connected_components(self._nx())

    def sorted_edges(self) -> list[tuple[str, str]]:
        order = {v: i for i, v in enumerate(self.vertices)}
        pairs = [tuple(sorted(e, key=order.__getitem__)) for e in self.edges]
        return sorted(pairs, key=lambda p: (order[p[0]], order[p[1]]))

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edges

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.sorted_edges()],
            "components": self.components(),
        }

    def to_dot(self) -> str:
        lines = [f'graph "{self.name}" {{']
        clustered = set()
        for i, (title, members) in enumerate(sorted(self.clusters.items())):
            lines.append(f"  subgraph cluster_{i} {{")
            lines.append(f'    label="{title}";')
            for v in members:
                lines.append(f'    "{v}";')
            lines.append("  }")
            clustered.update(members)
        for v in self.vertices:
            if v not in clustered:
                lines.append(f'  "{v}";')
        for u, v in self.sorted_edges():
            lines.append(f'  "{u}" -- "{v}";')
        lines.append("}")
        return "\n".join(lines) + "\n"
