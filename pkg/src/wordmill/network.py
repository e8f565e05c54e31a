"""Edit-distance networks over word types.

Distance-1 edges are found with a deletion-neighborhood index: every word is
bucketed under each string obtainable by deleting one glyph.  An
insertion/deletion pair always shares a bucket key that is itself a node, and
a substitution pair always shares a bucket, so candidates only need a cheap
positional verification.  This stays well under all-pairs work for
vocabularies in the tens of thousands, and the result does not depend on how
the candidates were produced.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass


@dataclass(frozen=True)
class EditGraph:
    """Undirected graph: nodes are word types, edges join words at edit distance 1.

    Edges are stored once as (a, b) with a < b lexicographically.
    """

    nodes: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> dict[str, int]:
        out = {node: 0 for node in self.nodes}
        for a, b in self.edges:
            out[a] += 1
            out[b] += 1
        return out

    def neighbors(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {node: [] for node in self.nodes}
        for a, b in self.edges:
            out[a].append(b)
            out[b].append(a)
        for peers in out.values():
            peers.sort()
        return out


def is_distance_one(a: str, b: str) -> bool:
    """Levenshtein distance exactly 1, one glyph per character."""
    if a == b:
        return False
    la, lb = len(a), len(b)
    if la == lb:
        mismatches = 0
        for x, y in zip(a, b):
            if x != y:
                mismatches += 1
                if mismatches > 1:
                    return False
        return mismatches == 1
    if abs(la - lb) != 1:
        return False
    if la > lb:
        a, b = b, a
        la, lb = lb, la
    # a is the shorter word; b must equal a with one glyph inserted
    i = 0
    while i < la and a[i] == b[i]:
        i += 1
    return a[i:] == b[i + 1 :]


def _distance_at_most(a: str, b: str, limit: int) -> bool:
    if abs(len(a) - len(b)) > limit:
        return False
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        current = [i]
        best = i
        for j, cb in enumerate(b, 1):
            cost = min(
                previous[j] + 1,
                current[j - 1] + 1,
                previous[j - 1] + (ca != cb),
            )
            current.append(cost)
            best = min(best, cost)
        if best > limit:
            return False
        previous = current
    return previous[-1] <= limit


def _deletion_variants(word: str) -> set[str]:
    return {word[:i] + word[i + 1 :] for i in range(len(word))}


def build_edit_graph(types: Iterable[str], max_distance: int = 1) -> EditGraph:
    """Graph over the given word types; no self-loops, symmetric by construction.

    max_distance=1 (the default) uses the deletion index.  Larger limits fall
    back to verified all-pairs comparison and are only meant for small inputs.
    """
    if max_distance < 1:
        raise ValueError("max_distance must be at least 1")
    nodes = tuple(sorted(set(types)))
    node_set = set(nodes)

    edges: set[tuple[str, str]] = set()

    def connect(a: str, b: str) -> None:
        edges.add((a, b) if a < b else (b, a))

    if max_distance == 1:
        buckets: dict[str, list[str]] = {}
        for word in nodes:
            for variant in _deletion_variants(word):
                buckets.setdefault(variant, []).append(word)
        for key, members in buckets.items():
            if key in node_set:
                for member in members:
                    connect(key, member)
            for i, a in enumerate(members):
                for b in members[i + 1 :]:
                    if is_distance_one(a, b):
                        connect(a, b)
    else:
        for i, a in enumerate(nodes):
            for b in nodes[i + 1 :]:
                if _distance_at_most(a, b, max_distance):
                    connect(a, b)

    return EditGraph(nodes, frozenset(edges))


@dataclass(frozen=True)
class NetworkStats:
    node_count: int
    edge_count: int
    connected_fraction: float
    component_count: int
    largest_component_fraction: float
    degree_histogram: dict[int, int]


def network_stats(graph: EditGraph) -> NetworkStats:
    """Connectivity summary: degree coverage, components, degree histogram."""
    degrees = graph.degrees()
    connected = sum(1 for d in degrees.values() if d > 0)
    neighbors = graph.neighbors()

    seen: set[str] = set()
    component_sizes: list[int] = []
    for start in graph.nodes:
        if start in seen:
            continue
        size = 0
        frontier = [start]
        seen.add(start)
        while frontier:
            node = frontier.pop()
            size += 1
            for peer in neighbors[node]:
                if peer not in seen:
                    seen.add(peer)
                    frontier.append(peer)
        component_sizes.append(size)

    n = graph.node_count
    return NetworkStats(
        node_count=n,
        edge_count=graph.edge_count,
        connected_fraction=connected / n if n else 0.0,
        component_count=len(component_sizes),
        largest_component_fraction=max(component_sizes, default=0) / n if n else 0.0,
        degree_histogram=dict(sorted(Counter(degrees.values()).items())),
    )


def format_edge_list(graph: EditGraph) -> str:
    """Tab-separated edges, endpoints and rows in lexicographic order."""
    rows = sorted(graph.edges)
    return "".join(f"{a}\t{b}\n" for a, b in rows)


def save_edge_list(graph: EditGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_edge_list(graph))
