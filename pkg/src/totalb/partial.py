"""Mutable colouring workspace shared by the constructive solvers."""

from __future__ import annotations

from typing import Callable, Iterable

from .colouring import TotalColouring
from .graph import E, Element, Graph, V, total_neighbourhood


class ConstructionError(RuntimeError):
    """A constructive step could not be carried out on this input."""


class PartialColouring:
    def __init__(self, g: Graph, k: int, assignment: dict[Element, int] | None = None):
        self.g = g
        self.k = k
        self.a: dict[Element, int] = {}
        self._nbhd: dict[Element, frozenset[Element]] = {}
        # elements whose total neighbourhoods should not repeat a colour
        self.protected: set[Element] = set()
        # elements trim_repeats may never uncolour
        self.fixed: set[Element] = set()
        for x, c in (assignment or {}).items():
            self.set(x, c)

    def nbhd(self, x: Element) -> frozenset[Element]:
        out = self._nbhd.get(x)
        if out is None:
            out = self._nbhd[x] = frozenset(total_neighbourhood(self.g, x))
        return out

    def get(self, x: Element) -> int | None:
        return self.a.get(x)

    def can_take(self, x: Element, c: int) -> bool:
        return 1 <= c <= self.k and all(self.a.get(y) != c for y in self.nbhd(x))

    def set(self, x: Element, c: int) -> None:
        if x in self.a:
            if self.a[x] == c:
                return
            raise ConstructionError(f"{x!r} already has colour {self.a[x]}, cannot set {c}")
        if not 1 <= c <= self.k:
            raise ConstructionError(f"colour {c} for {x!r} outside 1..{self.k}")
        for y in self.nbhd(x):
            if self.a.get(y) == c:
                raise ConstructionError(f"{x!r} and {y!r} would both get colour {c}")
        self.a[x] = c

    def vertex(self, v: int, c: int) -> None:
        self.set(V(v), c)

    def edge(self, u: int, v: int, c: int) -> None:
        self.set(E(self.g.edge_id(u, v)), c)

    def colours_around(self, x: Element) -> set[int]:
        return {self.a[y] for y in self.nbhd(x) if y in self.a}

    def missing(self, x: Element, palette: Iterable[int] | None = None) -> set[int]:
        """Colours of the palette, other than x's own, that x does not see yet."""
        want = set(range(1, self.k + 1) if palette is None else palette)
        want.discard(self.a.get(x))
        return want - self.colours_around(x)

    def is_witness(self, x: Element) -> bool:
        return x in self.a and not self.missing(x)

    def fill_witness(
        self,
        x: Element,
        colours: Iterable[int] | None = None,
        allowed: Callable[[Element, int], bool] | None = None,
    ) -> None:
        """Colour uncoloured neighbours of x so that x sees every colour in `colours`.

        Colours x already sees are skipped. The rest are matched to free slots
        in the total neighbourhood, vertices before edges, so that each slot
        stays proper. Assignments that would show a protected element some
        colour twice are avoided when possible. Raises ConstructionError when
        no matching exists.
        """
        need = sorted(self.missing(x, colours))
        if not need:
            return
        slots = sorted((y for y in self.nbhd(x) if y not in self.a), key=lambda y: (y.kind, y.id))
        options = {
            c: [s for s in slots if self.can_take(s, c) and (allowed is None or allowed(s, c))]
            for c in need
        }
        clean = {c: [s for s in opts if not self._repeats(s, c)] for c, opts in options.items()}
        owner = self._match(need, clean)
        if owner is None:
            owner = self._match(need, options)
        if owner is None:
            raise ConstructionError(f"{x!r} cannot pick up colours {need}")
        for s, c in sorted(owner.items()):
            self.set(s, c)

    def _repeats(self, s: Element, c: int) -> bool:
        # a repeat is harmless when the earlier copy can be trimmed away
        for y in self.nbhd(s):
            if y in self.protected:
                for z in self.nbhd(y):
                    if z != s and self.a.get(z) == c and (z in self.fixed or z in self.protected):
                        return True
        return False

    @staticmethod
    def _match(need: list[int], options: dict[int, list[Element]]) -> dict[Element, int] | None:
        owner: dict[Element, int] = {}

        def augment(c: int, seen: set[Element]) -> bool:
            for s in options[c]:
                if s in seen:
                    continue
                seen.add(s)
                if s not in owner or augment(owner[s], seen):
                    owner[s] = c
                    return True
            return False

        for c in need:
            if not augment(c, set()):
                return None
        return owner

    def trim_repeats(self) -> None:
        """Uncolour elements whose colour a protected element already sees elsewhere.

        Fixed and protected elements are never touched, and an element is
        only uncoloured when every protected element keeps all its colours.
        """
        for x in sorted(self.protected):
            while True:
                seen: dict[int, list[Element]] = {}
                for y in sorted(self.nbhd(x)):
                    if y in self.a:
                        seen.setdefault(self.a[y], []).append(y)
                victim = None
                for c, ys in sorted(seen.items()):
                    if len(ys) < 2:
                        continue
                    for y in ys:
                        if y not in self.fixed and y not in self.protected and self._removable(y):
                            victim = y
                            break
                    if victim is not None:
                        break
                if victim is None:
                    break
                del self.a[victim]

    def _removable(self, y: Element) -> bool:
        c = self.a[y]
        for z in self.nbhd(y):
            if z in self.protected:
                others = sum(1 for w in self.nbhd(z) if w != y and self.a.get(w) == c)
                if others == 0:
                    return False
        return True

    def complete(self, order: Iterable[Element] | None = None, repair_budget: int = 200000) -> bool:
        """Colour every remaining element; returns True when backtracking was needed.

        Greedy first, each element taking its smallest free colour. Coloured
        elements are never changed, so witnesses survive completion.
        """
        if order is None:
            order = self.g.elements()
        todo = [x for x in order if x not in self.a]
        rest = [x for x in self.g.elements() if x not in self.a and x not in set(todo)]
        todo += rest
        trial = dict(self.a)
        stuck = False
        for x in todo:
            seen = {trial[y] for y in self.nbhd(x) if y in trial}
            free = [c for c in range(1, self.k + 1) if c not in seen]
            if not free:
                stuck = True
                break
            trial[x] = free[0]
        if not stuck:
            self.a = trial
            return False
        self._repair(todo, repair_budget)
        return True

    def _repair(self, todo: list[Element], budget: int) -> None:
        # most constrained first
        todo = sorted(todo, key=lambda x: (-len(self.nbhd(x)), x))
        nodes = 0

        def dfs(i: int) -> bool:
            nonlocal nodes
            if i == len(todo):
                return True
            nodes += 1
            if nodes > budget:
                raise ConstructionError("completion search exceeded its budget")
            x = todo[i]
            seen = self.colours_around(x)
            for c in range(1, self.k + 1):
                if c in seen:
                    continue
                self.a[x] = c
                if dfs(i + 1):
                    return True
                del self.a[x]
            return False

        if not dfs(0):
            raise ConstructionError("no proper completion exists")

    def colouring(self) -> TotalColouring:
        return TotalColouring(self.k, dict(self.a))


def spine_completion_order(g: Graph, spine: Iterable[int]) -> list[Element]:
    """Vertices (spine left to right, then the rest), spine edges, then other edges."""
    spine = list(spine)
    on_spine = set(spine)
    order = [V(v) for v in spine]
    order += [V(v) for v in g.vertices() if v not in on_spine]
    spine_edges = [g.edge_id(a, b) for a, b in zip(spine, spine[1:])]
    order += [E(e) for e in spine_edges]
    order += [E(e) for e in range(g.edge_count) if e not in set(spine_edges)]
    return order
