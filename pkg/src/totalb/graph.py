"""Simple undirected graphs with vertices and edges as first-class elements.

An element is either a vertex or an edge. Two elements are adjacent when they
are adjacent vertices, a vertex and an incident edge, or two edges sharing an
endpoint. Most of the toolkit works on elements rather than on vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, NamedTuple


class GraphError(ValueError):
    """Invalid graph input or element reference."""


class Kind(IntEnum):
    VERTEX = 0
    EDGE = 1


class Element(NamedTuple):
    kind: Kind
    id: int

    def __repr__(self) -> str:
        return f"{'v' if self.kind == Kind.VERTEX else 'e'}{self.id}"


def V(i: int) -> Element:
    return Element(Kind.VERTEX, i)


def E(i: int) -> Element:
    return Element(Kind.EDGE, i)


class Graph:
    """Immutable simple graph. Edge ids follow insertion order."""

    __slots__ = ("_n", "_edges", "_edge_index", "_adj", "_inc")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise GraphError("vertex count must be non-negative")
        self._n = vertex_count
        self._edges: tuple[tuple[int, int], ...] = ()
        self._edge_index: dict[tuple[int, int], int] = {}
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        inc: list[list[int]] = [[] for _ in range(vertex_count)]
        out = []
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in self._edge_index:
                raise GraphError(f"duplicate edge ({u}, {v})")
            self._edge_index[key] = len(out)
            inc[u].append(len(out))
            inc[v].append(len(out))
            adj[u].append(v)
            adj[v].append(u)
            out.append((u, v))
        self._edges = tuple(out)
        self._adj = tuple(tuple(a) for a in adj)
        self._inc = tuple(tuple(a) for a in inc)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def vertices(self) -> range:
        return range(self._n)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self._edges[e]

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return self._inc[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._edge_index[(min(u, v), max(u, v))]
        except KeyError:
            raise GraphError(f"no edge ({u}, {v})") from None

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def elements(self) -> list[Element]:
        """All elements in (kind, id) order."""
        return [V(v) for v in range(self._n)] + [E(e) for e in range(len(self._edges))]

    def element_count(self) -> int:
        return self._n + len(self._edges)

    def check(self, x: Element) -> None:
        limit = self._n if x.kind == Kind.VERTEX else len(self._edges)
        if not 0 <= x.id < limit:
            raise GraphError(f"invalid element {x!r}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={len(self._edges)})"


def total_neighbourhood(g: Graph, x: Element) -> set[Element]:
    g.check(x)
    if x.kind == Kind.VERTEX:
        return {V(u) for u in g.neighbours(x.id)} | {E(e) for e in g.incident_edges(x.id)}
    u, v = g.endpoints(x.id)
    out = {V(u), V(v)}
    for w in (u, v):
        out.update(E(e) for e in g.incident_edges(w) if e != x.id)
    return out


def total_degree(g: Graph, x: Element) -> int:
    g.check(x)
    if x.kind == Kind.VERTEX:
        return 2 * g.degree(x.id)
    u, v = g.endpoints(x.id)
    return g.degree(u) + g.degree(v)


def element_index(g: Graph, x: Element) -> int:
    """Position of x in the vertices-then-edges order."""
    return x.id if x.kind == Kind.VERTEX else g.vertex_count + x.id


def total_graph(g: Graph) -> Graph:
    """Graph on V ∪ E: vertices first, then edges by id."""
    n = g.vertex_count
    pairs = list(g.edges)
    for e, (u, v) in enumerate(g.edges):
        pairs.append((u, n + e))
        pairs.append((v, n + e))
    for w in g.vertices():
        inc = g.incident_edges(w)
        for i, a in enumerate(inc):
            for b in inc[i + 1:]:
                pairs.append((n + a, n + b))
    return Graph(n + g.edge_count, pairs)


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.neighbours(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.vertex_count


def is_tree(g: Graph) -> bool:
    return g.vertex_count > 0 and g.edge_count == g.vertex_count - 1 and is_connected(g)


# caterpillars


class NotCaterpillar(GraphError):
    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


NOT_TREE = "NotTree"
SPINE_NOT_PATH = "SpineNotPath"


@dataclass(frozen=True)
class CaterpillarDecomposition:
    spine: tuple[int, ...]
    leaves: dict[int, tuple[int, ...]] = field(default_factory=dict)
    # spine ends carrying a single leaf; removing leaves differently would
    # give another central path of the same tree
    ambiguous_ends: tuple[int, ...] = ()

    def edges(self) -> set[tuple[int, int]]:
        out = set()
        for a, b in zip(self.spine, self.spine[1:]):
            out.add((min(a, b), max(a, b)))
        for s, ls in self.leaves.items():
            for leaf in ls:
                out.add((min(s, leaf), max(s, leaf)))
        return out


def decompose_caterpillar(g: Graph) -> CaterpillarDecomposition:
    if not is_tree(g):
        raise NotCaterpillar(NOT_TREE, "graph is disconnected or has a cycle")
    if g.vertex_count <= 2:
        return CaterpillarDecomposition(spine=(), leaves={})
    inner = [v for v in g.vertices() if g.degree(v) >= 2]
    inner_set = set(inner)
    inner_deg = {v: sum(1 for w in g.neighbours(v) if w in inner_set) for v in inner}
    if any(d > 2 for d in inner_deg.values()):
        bad = min(v for v, d in inner_deg.items() if d > 2)
        raise NotCaterpillar(SPINE_NOT_PATH, f"vertex {bad} has three non-leaf neighbours")
    # the non-leaf vertices of a tree induce a subtree, so it is a path here
    if len(inner) == 1:
        spine = [inner[0]]
    else:
        ends = sorted(v for v, d in inner_deg.items() if d == 1)
        spine = [ends[0]]
        prev = None
        while True:
            cur = spine[-1]
            nxt = [w for w in g.neighbours(cur) if w in inner_set and w != prev]
            if not nxt:
                break
            prev = cur
            spine.append(nxt[0])
    leaves = {s: tuple(sorted(w for w in g.neighbours(s) if w not in inner_set)) for s in spine}
    ambiguous = ()
    if len(spine) > 1:
        ambiguous = tuple(s for s in (spine[0], spine[-1]) if len(leaves[s]) == 1)
    return CaterpillarDecomposition(spine=tuple(spine), leaves=leaves, ambiguous_ends=ambiguous)


def is_caterpillar(g: Graph) -> bool:
    try:
        decompose_caterpillar(g)
    except NotCaterpillar:
        return False
    return True


# edge-list format


def parse_edge_list(text: str) -> Graph:
    """Parse "p <n> <m>" followed by m lines "e <u> <v>"; '#' and 'c' lines are comments."""
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("c ") or line == "c":
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if n is not None:
                    raise GraphError("second problem line")
                if len(parts) != 3:
                    raise GraphError("expected 'p <n> <m>'")
                n, m = int(parts[1]), int(parts[2])
                if n < 0 or m < 0:
                    raise GraphError("negative size")
            elif parts[0] == "e":
                if n is None:
                    raise GraphError("edge before problem line")
                if len(parts) != 3:
                    raise GraphError("expected 'e <u> <v>'")
                u, v = int(parts[1]), int(parts[2])
                if not (0 <= u < n and 0 <= v < n):
                    raise GraphError(f"vertex out of range 0..{n - 1}")
                if u == v:
                    raise GraphError(f"self-loop at vertex {u}")
                key = (min(u, v), max(u, v))
                if key in seen:
                    raise GraphError(f"duplicate edge, first seen on line {seen[key]}")
                seen[key] = lineno
                edges.append((u, v))
            else:
                raise GraphError(f"unknown line type {parts[0]!r}")
        except ValueError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
    if n is None:
        raise GraphError("missing problem line 'p <n> <m>'")
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges but {len(edges)} were given")
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"p {g.vertex_count} {g.edge_count}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
