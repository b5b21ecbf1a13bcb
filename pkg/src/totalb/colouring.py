"""Total colourings, the b-chromatic verifier and the total m-degree.

A total k-colouring assigns colours 1..k to vertices and edges so that no two
adjacent or incident elements share a colour. It is b-chromatic when every
colour class holds a witness: an element whose total neighbourhood shows every
other colour.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .graph import E, Element, Graph, GraphError, Kind, V, total_degree, total_neighbourhood


class ColouringError(ValueError):
    """Colouring does not fit its graph or palette."""


@dataclass(frozen=True)
class TotalColouring:
    k: int
    assignment: Mapping[Element, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.k < 1:
            raise ColouringError("palette size must be positive")
        for x, c in self.assignment.items():
            if not 1 <= c <= self.k:
                raise ColouringError(f"colour {c} of {x!r} outside 1..{self.k}")

    def __getitem__(self, x: Element) -> int:
        return self.assignment[x]

    def get(self, x: Element) -> int | None:
        return self.assignment.get(x)

    def is_complete(self, g: Graph) -> bool:
        return all(x in self.assignment for x in g.elements())

    def used_colours(self) -> set[int]:
        return set(self.assignment.values())

    def to_dict(self) -> dict:
        vs = sorted(x.id for x in self.assignment if x.kind == Kind.VERTEX)
        es = sorted(x.id for x in self.assignment if x.kind == Kind.EDGE)
        return {
            "k": self.k,
            "vertices": {str(i): self.assignment[V(i)] for i in vs},
            "edges": {str(i): self.assignment[E(i)] for i in es},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "TotalColouring":
        try:
            k = int(data["k"])
            assignment = {V(int(i)): int(c) for i, c in data.get("vertices", {}).items()}
            assignment.update({E(int(i)): int(c) for i, c in data.get("edges", {}).items()})
        except (KeyError, TypeError, ValueError) as exc:
            raise ColouringError(f"malformed colouring: {exc}") from None
        return cls(k, assignment)

    @classmethod
    def from_json(cls, text: str) -> "TotalColouring":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ColouringError(f"line {exc.lineno}: {exc.msg}") from None
        if not isinstance(data, dict):
            raise ColouringError("colouring JSON must be an object")
        return cls.from_dict(data)


class Verdict(Enum):
    VALID_TOTAL_B_CHROMATIC = "ValidTotalBChromatic"
    VALID_TOTAL_ONLY = "ValidTotalOnly"
    IMPROPER = "Improper"
    NOT_SURJECTIVE = "NotSurjective"
    INCOMPLETE = "Incomplete"


@dataclass(frozen=True)
class VerificationReport:
    proper: bool
    surjective: bool
    complete: bool
    b_chromatic_witnesses: dict[int, Element | None]
    verdict: Verdict
    conflicts: tuple[tuple[Element, Element], ...] = ()

    @property
    def valid(self) -> bool:
        return self.verdict == Verdict.VALID_TOTAL_B_CHROMATIC

    def problems(self) -> list[str]:
        out = [f"{a!r} and {b!r} are adjacent and share colour" for a, b in self.conflicts]
        if not self.complete:
            out.append("some elements are uncoloured")
        missing = [c for c, w in self.b_chromatic_witnesses.items() if w is None]
        if self.complete and self.proper and not self.surjective:
            out.append("colours never used: " + ", ".join(map(str, missing)))
        elif missing and self.complete and self.proper:
            out.append("colours without a b-chromatic witness: " + ", ".join(map(str, missing)))
        return out

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "valid": self.valid,
            "proper": self.proper,
            "surjective": self.surjective,
            "complete": self.complete,
            "witnesses": {
                str(c): (None if w is None else {"kind": w.kind.name.lower(), "id": w.id})
                for c, w in sorted(self.b_chromatic_witnesses.items())
            },
            "problems": self.problems(),
        }


def verify(g: Graph, c: TotalColouring) -> VerificationReport:
    for x in c.assignment:
        try:
            g.check(x)
        except GraphError:
            raise ColouringError(f"colouring refers to {x!r}, which is not in the graph") from None
    a = c.assignment
    elements = g.elements()
    conflicts = []
    nbhd = {}
    for x in elements:
        nbhd[x] = total_neighbourhood(g, x)
        cx = a.get(x)
        if cx is None:
            continue
        for y in nbhd[x]:
            if y > x and a.get(y) == cx:
                conflicts.append((x, y))
    complete = len(a) == len(elements)
    proper = not conflicts
    surjective = set(a.values()) >= set(range(1, c.k + 1))
    witnesses: dict[int, Element | None] = {}
    for colour in range(1, c.k + 1):
        witnesses[colour] = None
        want = set(range(1, c.k + 1)) - {colour}
        for x in elements:
            if a.get(x) == colour and {a.get(y) for y in nbhd[x]} - {None} == want:
                witnesses[colour] = x
                break
    if not complete:
        verdict = Verdict.INCOMPLETE
    elif not proper:
        verdict = Verdict.IMPROPER
    elif not surjective:
        verdict = Verdict.NOT_SURJECTIVE
    elif any(w is None for w in witnesses.values()):
        verdict = Verdict.VALID_TOTAL_ONLY
    else:
        verdict = Verdict.VALID_TOTAL_B_CHROMATIC
    return VerificationReport(proper, surjective, complete, witnesses, verdict, tuple(conflicts))


def elements_by_total_degree(g: Graph) -> list[Element]:
    """Elements sorted by total degree, largest first, ties by (kind, id)."""
    return sorted(g.elements(), key=lambda x: (-total_degree(g, x), x))


def total_m_degree(g: Graph) -> int:
    if g.element_count() == 0:
        raise GraphError("total m-degree of the empty graph is undefined")
    m = 0
    for i, x in enumerate(elements_by_total_degree(g), start=1):
        if total_degree(g, x) >= i - 1:
            m = i
    return m


def dense_elements(g: Graph, m: int | None = None) -> list[Element]:
    """Elements with total degree at least m-1, in (kind, id) order."""
    if m is None:
        m = total_m_degree(g)
    return [x for x in g.elements() if total_degree(g, x) >= m - 1]


def is_dense(g: Graph, x: Element, m: int | None = None) -> bool:
    if m is None:
        m = total_m_degree(g)
    return total_degree(g, x) >= m - 1


def is_tight(g: Graph, x: Element, m: int | None = None) -> bool:
    if m is None:
        m = total_m_degree(g)
    return total_degree(g, x) == m - 1


# closed forms


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def colour_path(n: int) -> tuple[Graph, TotalColouring]:
    """P_n on vertices 0..n-1 (edge i joins i and i+1) with a b-chromatic m_t-colouring."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    g = path_graph(n)
    if n == 1:
        return g, TotalColouring(1, {V(0): 1})
    # sequence w1, e1, w2, e2, ... as in the hand constructions
    small = {
        2: [1, 2, 3],
        3: [1, 2, 3, 1, 2],
        4: [1, 2, 3, 4, 1, 2, 4],
    }
    if n in small:
        seq = small[n]
        k = max(seq)
    else:
        seq = [4, 5, 1, 2, 3, 4, 5, 1, 2]
        k = 5
        while len(seq) < 2 * n - 1:
            # the next element meets the previous two in the sequence
            seq.append(min({1, 2, 3} - {seq[-1], seq[-2]}))
    a = {}
    for i, colour in enumerate(seq):
        a[V(i // 2) if i % 2 == 0 else E(i // 2)] = colour
    return g, TotalColouring(k, a)


def colour_star(n: int) -> tuple[Graph, TotalColouring]:
    """K_{1,n} with centre 0 and leaf i on edge i-1."""
    if n < 1:
        raise ValueError("star needs at least one leaf")
    g = star_graph(n)
    if n == 1:
        # K_{1,1} is P_2, whose total m-degree is 3 rather than n+1
        return g, TotalColouring(3, {V(0): 1, E(0): 2, V(1): 3})
    a = {V(0): 1}
    for i in range(1, n + 1):
        a[E(i - 1)] = i + 1
        a[V(i)] = i + 2 if i < n else 2
    return g, TotalColouring(n + 1, a)


# rendering


def to_dot(g: Graph, c: TotalColouring | None = None, names: Mapping[int, str] | None = None) -> str:
    def colour_of(x):
        return None if c is None else c.get(x)

    lines = ["graph G {"]
    for v in g.vertices():
        label = names.get(v, str(v)) if names else str(v)
        col = colour_of(V(v))
        if col is not None:
            label += f" [{col}]"
        lines.append(f'  {v} [label="{label}"];')
    for e, (u, v) in enumerate(g.edges):
        col = colour_of(E(e))
        attr = f' [label="{col}"]' if col is not None else ""
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
