"""Hardness gadget: from a cubic bipartite graph G to a graph H.

G has a total 4-colouring exactly when H has a total b-chromatic colouring
with n+9 colours, where n = |V(G)|. H adds an apex v joined to every vertex
of G and four hubs v_1..v_4 joined to v, each hub carrying n+3 pendant
vertices u_i^1..u_i^{n+3}.

Vertex ids in H: G's vertices keep their ids 0..n-1, then v = n, then
v_i = n+i, then the pendants of v_1, v_2, v_3, v_4 in order. Edge ids: G's
edges keep their ids, then (u_j, v), then (v, v_i), then the pendant edges.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .colouring import TotalColouring, total_m_degree, verify
from .graph import E, Graph, V, total_degree


class GadgetError(ValueError):
    """Input graph or colouring does not meet the gadget's requirements."""


class CertificateViolation(RuntimeError):
    """A colouring of H restricts to more than four colours on G."""


@dataclass(frozen=True)
class Gadget:
    H: Graph
    G: Graph
    n: int

    @property
    def apex(self) -> int:
        return self.n

    def hub(self, i: int) -> int:
        return self.n + i

    def pendant(self, i: int, j: int) -> int:
        return self.n + 5 + (i - 1) * (self.n + 3) + (j - 1)

    def apex_edge(self, j: int) -> int:
        """Edge (u_j, v), with j counted from 1."""
        return self.G.edge_count + j - 1

    def hub_edge(self, i: int) -> int:
        return self.G.edge_count + self.n + i - 1

    def pendant_edge(self, i: int, j: int) -> int:
        return self.G.edge_count + self.n + 4 + (i - 1) * (self.n + 3) + (j - 1)

    def labels(self) -> dict[int, str]:
        out = {j: f"u_{j + 1}" for j in range(self.n)}
        out[self.apex] = "v"
        for i in range(1, 5):
            out[self.hub(i)] = f"v_{i}"
            for j in range(1, self.n + 4):
                out[self.pendant(i, j)] = f"u_{i}^{j}"
        return out

    def sidecar(self) -> dict:
        return {
            "n": self.n,
            "vertices": {label: vid for vid, label in sorted(self.labels().items())},
            "origin": {
                "vertices": {str(j): j for j in range(self.n)},
                "edges": {str(e): e for e in range(self.G.edge_count)},
            },
        }

    def sidecar_json(self) -> str:
        return json.dumps(self.sidecar(), indent=2) + "\n"


def _check_cubic(g: Graph) -> None:
    if g.vertex_count == 0:
        raise GadgetError("graph is empty")
    for v in g.vertices():
        if g.degree(v) != 3:
            raise GadgetError(f"vertex {v} has degree {g.degree(v)}, not 3")


def odd_cycle(g: Graph) -> list[int] | None:
    """An odd cycle as a vertex list, or None when g is bipartite."""
    side: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for root in g.vertices():
        if root in side:
            continue
        side[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbours(x):
                if y not in side:
                    side[y] = 1 - side[x]
                    parent[y] = x
                    queue.append(y)
                elif side[y] == side[x]:
                    return _close_cycle(parent, x, y)
    return None


def _close_cycle(parent, x, y) -> list[int]:
    def chain(z):
        out = []
        while z is not None:
            out.append(z)
            z = parent[z]
        return out

    up_x, up_y = chain(x), chain(y)
    on_y = set(up_y)
    meet = next(z for z in up_x if z in on_y)
    left = up_x[: up_x.index(meet) + 1]
    right = up_y[: up_y.index(meet)]
    return left[::-1] + right


def build_gadget(g: Graph) -> Gadget:
    _check_cubic(g)
    cycle = odd_cycle(g)
    if cycle is not None:
        raise GadgetError(f"graph is not bipartite: odd cycle {' '.join(map(str, cycle))}")
    n = g.vertex_count
    apex = n
    edges = list(g.edges)
    edges += [(j, apex) for j in range(n)]
    edges += [(apex, n + i) for i in range(1, 5)]
    for i in range(1, 5):
        start = n + 5 + (i - 1) * (n + 3)
        edges += [(n + i, start + j) for j in range(n + 3)]
    gadget = Gadget(Graph(5 * n + 17, edges), g, n)
    problems = degree_profile_problems(gadget)
    # the pendant equation is known to be misstated; everything else must hold
    if any(not p.startswith("pendant vertex") for p in problems):
        raise AssertionError("; ".join(problems))
    return gadget


DEGREE_EQUATIONS = (
    "d_t(u_j) = 8",
    "d_t(u_j, v) = n+8",
    "d_t(v) = 2n+8",
    "d_t(v, v_i) = 2n+8",
    "d_t(v_i) = 2n+8",
    "d_t(v_i, u_i^j) = n+5",
    "d_t(u_i^j) = 1",
)


def degree_equations(gadget: Gadget) -> list[tuple[str, bool]]:
    """Each stated total-degree equation with whether H satisfies it."""
    H, n = gadget.H, gadget.n
    rng = range(1, n + 4)
    checks = [
        all(total_degree(H, V(j)) == 8 for j in range(n)),
        all(total_degree(H, E(gadget.apex_edge(j))) == n + 8 for j in range(1, n + 1)),
        total_degree(H, V(gadget.apex)) == 2 * n + 8,
        all(total_degree(H, E(gadget.hub_edge(i))) == 2 * n + 8 for i in range(1, 5)),
        all(total_degree(H, V(gadget.hub(i))) == 2 * n + 8 for i in range(1, 5)),
        all(total_degree(H, E(gadget.pendant_edge(i, j))) == n + 5 for i in range(1, 5) for j in rng),
        all(total_degree(H, V(gadget.pendant(i, j))) == 1 for i in range(1, 5) for j in rng),
    ]
    return list(zip(DEGREE_EQUATIONS, checks))


def degree_profile_problems(gadget: Gadget) -> list[str]:
    out = [f"equation {name} fails" for name, ok in degree_equations(gadget)[:6] if not ok]
    H, n = gadget.H, gadget.n
    pendant = total_degree(H, V(gadget.pendant(1, 1)))
    if pendant != 1:
        out.append(f"pendant vertex total degree is {pendant}, stated as 1")
    m = total_m_degree(H)
    if m != n + 9:
        out.append(f"total m-degree is {m}, expected {n + 9}")
    return out


def lift_colouring(gadget: Gadget, cg: TotalColouring) -> TotalColouring:
    """Extend a total 4-colouring of G to a total b-chromatic (n+9)-colouring of H."""
    G, n = gadget.G, gadget.n
    if cg.k > 4:
        raise GadgetError(f"colouring of G uses palette size {cg.k}, above 4")
    report = verify(G, cg)
    if not report.complete or not report.proper:
        raise GadgetError("colouring of G is not a proper complete total colouring: " + "; ".join(report.problems()))
    a = {x: c for x, c in cg.assignment.items()}
    for j in range(1, n + 1):
        a[E(gadget.apex_edge(j))] = j + 4
    a[V(gadget.apex)] = n + 5
    for i in range(1, 5):
        a[E(gadget.hub_edge(i))] = n + 5 + i
        a[V(gadget.hub(i))] = i
        abc = [c for c in (1, 2, 3, 4) if c != i]
        z = min(abc)
        for j in range(1, n + 1):
            a[V(gadget.pendant(i, j))] = z
            a[E(gadget.pendant_edge(i, j))] = j + 4
        for offset, c in enumerate(abc, start=1):
            a[V(gadget.pendant(i, n + offset))] = n + 5 + c
            a[E(gadget.pendant_edge(i, n + offset))] = c
    lifted = TotalColouring(n + 9, a)
    check = verify(gadget.H, lifted)
    if not check.valid:
        raise AssertionError("lifted colouring fails verification: " + "; ".join(check.problems()))
    return lifted


def project_colouring(gadget: Gadget, ch: TotalColouring) -> TotalColouring:
    """Restrict a total b-chromatic (n+9)-colouring of H to G, renaming its colours to 1..4."""
    G, n = gadget.G, gadget.n
    if ch.k != n + 9:
        raise GadgetError(f"colouring of H has palette size {ch.k}, expected {n + 9}")
    report = verify(gadget.H, ch)
    if not report.valid:
        raise GadgetError(f"colouring of H is not total b-chromatic ({report.verdict.value})")
    restricted = {x: ch[x] for x in G.elements()}
    used = sorted(set(restricted.values()))
    if len(used) > 4:
        raise CertificateViolation(f"G's elements use {len(used)} colours: {used}")
    rename = {c: i for i, c in enumerate(used, start=1)}
    out = TotalColouring(4, {x: rename[c] for x, c in restricted.items()})
    check = verify(G, out)
    if not (check.proper and check.complete):
        raise AssertionError("projected colouring is not a proper total colouring")
    return out


def same_up_to_renaming(g: Graph, a: TotalColouring, b: TotalColouring) -> bool:
    """True when some bijection of colours maps a onto b on every element."""
    forward: dict[int, int] = {}
    backward: dict[int, int] = {}
    for x in g.elements():
        ca, cb = a.get(x), b.get(x)
        if ca is None or cb is None:
            return False
        if forward.setdefault(ca, cb) != cb or backward.setdefault(cb, ca) != ca:
            return False
    return True


__all__ = [
    "CertificateViolation",
    "DEGREE_EQUATIONS",
    "Gadget",
    "GadgetError",
    "build_gadget",
    "degree_equations",
    "degree_profile_problems",
    "lift_colouring",
    "odd_cycle",
    "project_colouring",
    "same_up_to_renaming",
]
