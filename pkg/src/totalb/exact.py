"""Exhaustive search for the total b-chromatic number of small graphs.

The search colours the total graph element by element. Besides properness it
keeps, for every colour, at least one element that could still become a
witness for it; a branch dies as soon as some colour has none left.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .colouring import TotalColouring, total_m_degree, verify
from .graph import Element, Graph, GraphError, total_degree, total_neighbourhood

DEFAULT_CAP = 40


class BudgetExceeded(Exception):
    def __init__(self, lower: int, upper: int, nodes: int):
        self.lower = lower
        self.upper = upper
        self.nodes = nodes
        super().__init__(f"node budget exhausted after {nodes} nodes; {lower} <= phi_t <= {upper}")


@dataclass(frozen=True)
class ExactResult:
    phi_t: int
    witness: TotalColouring
    nodes_explored: int
    elapsed: float
    # palette sizes proven infeasible, largest first
    refuted: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            "phi_t": self.phi_t,
            "nodes_explored": self.nodes_explored,
            "elapsed_seconds": round(self.elapsed, 6),
            "refuted": list(self.refuted),
            "colouring": self.witness.to_dict(),
        }


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise _OutOfBudget


class _OutOfBudget(Exception):
    pass


class _Search:
    """Colouring state over element indices in search order."""

    def __init__(self, g: Graph):
        elements = sorted(g.elements(), key=lambda x: (-total_degree(g, x), x))
        pos = {x: i for i, x in enumerate(elements)}
        self.elements = elements
        self.nbrs = [sorted(pos[y] for y in total_neighbourhood(g, x)) for x in elements]
        self.deg = [len(a) for a in self.nbrs]
        self.n = len(elements)

    def _start(self, k: int):
        self.k = k
        self.col = [0] * self.n
        self.cnt = [[0] * (k + 1) for _ in range(self.n)]
        self.distinct = [0] * self.n
        self.unc = self.deg[:]

    def _assign(self, i: int, c: int):
        self.col[i] = c
        cnt, distinct, unc = self.cnt, self.distinct, self.unc
        for j in self.nbrs[i]:
            row = cnt[j]
            if row[c] == 0:
                distinct[j] += 1
            row[c] += 1
            unc[j] -= 1

    def _unassign(self, i: int, c: int):
        self.col[i] = 0
        cnt, distinct, unc = self.cnt, self.distinct, self.unc
        for j in self.nbrs[i]:
            row = cnt[j]
            row[c] -= 1
            if row[c] == 0:
                distinct[j] -= 1
            unc[j] += 1

    def _viable(self, x: int, c: int) -> bool:
        cx = self.col[x]
        if cx != 0 and cx != c:
            return False
        if self.cnt[x][c]:
            return False
        return self.k - 1 - self.distinct[x] <= self.unc[x]

    def _all_viable(self) -> bool:
        for c in range(1, self.k + 1):
            hint = self.hint[c]
            if hint >= 0 and self._viable(hint, c):
                continue
            for x in self.candidates:
                if self._viable(x, c):
                    self.hint[c] = x
                    break
            else:
                return False
        return True

    def run(self, k: int, budget: _Budget, b_chromatic: bool) -> list[int] | None:
        self._start(k)
        self.candidates = [x for x in range(self.n) if self.deg[x] >= k - 1]
        self.hint = [-1] * (k + 1)
        if b_chromatic and len(self.candidates) < k:
            return None
        if self._dfs(0, 0, budget, b_chromatic):
            return self.col[:]
        return None

    def _dfs(self, i: int, used: int, budget: _Budget, b_chromatic: bool) -> bool:
        if i == self.n:
            return used == self.k or not b_chromatic
        budget.tick()
        row = self.cnt[i]
        for c in range(1, min(self.k, used + 1) + 1):
            if row[c]:
                continue
            self._assign(i, c)
            if not b_chromatic or self._all_viable():
                if self._dfs(i + 1, max(used, c), budget, b_chromatic):
                    return True
            self._unassign(i, c)
        return False

    def colouring(self, k: int, col: list[int]) -> TotalColouring:
        return TotalColouring(k, {self.elements[i]: col[i] for i in range(self.n)})


def _check_size(g: Graph, cap: int):
    if g.element_count() == 0:
        raise GraphError("empty graph")
    if g.element_count() > cap:
        raise GraphError(f"graph has {g.element_count()} elements, above the cap of {cap}")


def _lower_bound(g: Graph) -> int:
    # a total colouring with the fewest colours is b-chromatic, and it needs
    # at least max degree + 1 colours
    return 1 + max((g.degree(v) for v in g.vertices()), default=0)


def solve_exact(g: Graph, budget: int | None = None, cap: int = DEFAULT_CAP) -> ExactResult:
    """Largest k with a total b-chromatic k-colouring, searching down from m_t."""
    _check_size(g, cap)
    start = time.perf_counter()
    search = _Search(g)
    counter = _Budget(budget)
    refuted = []
    k = total_m_degree(g)
    while k >= 1:
        try:
            col = search.run(k, counter, b_chromatic=True)
        except _OutOfBudget:
            raise BudgetExceeded(min(_lower_bound(g), k), k, counter.nodes) from None
        if col is not None:
            witness = search.colouring(k, col)
            assert verify(g, witness).valid
            return ExactResult(k, witness, counter.nodes, time.perf_counter() - start, tuple(refuted))
        refuted.append(k)
        k -= 1
    raise AssertionError("every graph has a total b-chromatic colouring")


def exists_total_b_chromatic_k_colouring(
    g: Graph, k: int, budget: int | None = None, cap: int = DEFAULT_CAP
) -> TotalColouring | None:
    _check_size(g, cap)
    search = _Search(g)
    try:
        col = search.run(k, _Budget(budget), b_chromatic=True)
    except _OutOfBudget:
        raise BudgetExceeded(1, total_m_degree(g), budget or 0) from None
    return None if col is None else search.colouring(k, col)


def exists_total_k_colouring(
    g: Graph, k: int, budget: int | None = None, cap: int = DEFAULT_CAP
) -> TotalColouring | None:
    """Some proper total colouring with colours 1..k, or None."""
    _check_size(g, cap)
    search = _Search(g)
    counter = _Budget(budget)
    try:
        col = search.run(k, counter, b_chromatic=False)
    except _OutOfBudget:
        raise BudgetExceeded(1, k, counter.nodes) from None
    if col is None:
        return None
    # colours the search never reached are simply absent
    return search.colouring(k, col)


def element_order(g: Graph) -> list[Element]:
    """Order in which the search assigns colours."""
    return _Search(g).elements
