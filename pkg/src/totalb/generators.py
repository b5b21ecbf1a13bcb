"""Instance generators: pivoted examples, dense-path families and random caterpillars.

Spine vertices are numbered first, left to right, then leaves and tails in
the order they are attached. All output is deterministic for given
parameters and seed.
"""

from __future__ import annotations

import random
from typing import Iterator, Sequence

from .colouring import path_graph, star_graph
from .graph import Graph, GraphError


def caterpillar(leaf_counts: Sequence[int], tails: dict[int, int] | None = None) -> Graph:
    """Spine 0..k-1 where spine vertex i gets leaf_counts[i] pendant vertices.

    `tails` maps a spine index to the length of a path hung off it; tails
    are only allowed at the spine ends so the result stays a caterpillar
    with the given spine inside it.
    """
    k = len(leaf_counts)
    if k == 0:
        raise GraphError("caterpillar needs a spine vertex")
    if any(c < 0 for c in leaf_counts):
        raise GraphError("leaf counts must be non-negative")
    edges = [(i, i + 1) for i in range(k - 1)]
    n = k
    for i, count in enumerate(leaf_counts):
        for _ in range(count):
            edges.append((i, n))
            n += 1
    for i, length in sorted((tails or {}).items()):
        prev = i
        for _ in range(length):
            edges.append((prev, n))
            prev = n
            n += 1
    return Graph(n, edges)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return path_graph(n)


def star(n: int) -> Graph:
    if n < 1:
        raise GraphError("star needs at least one leaf")
    return star_graph(n)


def uniform_caterpillar(k: int, leaves_per_spine: int) -> Graph:
    if k < 1 or leaves_per_spine < 0:
        raise GraphError("uniform caterpillar needs k >= 1 and a non-negative leaf count")
    return caterpillar([leaves_per_spine] * k)


def dense_path_degrees(k: int, ptype: int) -> list[int]:
    """Smallest spine degrees giving one dense path of the given type with k vertices."""
    if ptype == 1:
        if k < 3:
            raise GraphError("type 1 needs k >= 3")
        return [k - 1] * k
    if ptype == 2:
        if k < 4:
            raise GraphError("type 2 needs k >= 4")
        return [k - 1] * (k - 1) + [k - 2]
    if ptype == 3:
        if k < 5:
            raise GraphError("type 3 needs k >= 5")
        return [k - 3, k - 1] + [k - 2] * (k - 4) + [k - 1, k - 3]
    raise GraphError(f"unknown dense path type {ptype}")


def dense_path_instance(k: int, ptype: int, mirror: bool = False) -> Graph:
    """Caterpillar whose whole spine is a dense path of the given type, degrees minimal."""
    degrees = dense_path_degrees(k, ptype)
    if mirror:
        degrees = degrees[::-1]
    counts = [d - (i > 0) - (i < k - 1) for i, d in enumerate(degrees)]
    return caterpillar(counts)


def pivoted_type1(m: int, v_degree: int | None = None, u_tail: int = 0, v_tail: int = 0) -> Graph:
    """Hub u of degree m-2 next to u' of degree 2, which is next to a dense v.

    Vertices: u = 0, u' = 1, v = 2. With m = 6 the edge (u', v) is itself
    dense, which gives m+1 dense elements, so m must be at least 7.
    """
    if m < 7:
        raise GraphError("a type 1 pivoted caterpillar needs m >= 7 (with m = 6 the edge u'v is also dense)")
    lo, hi = (m - 1 + 1) // 2, m - 4
    if v_degree is None:
        v_degree = lo
    if not lo <= v_degree <= hi:
        raise GraphError(f"degree of v must lie in {lo}..{hi} for m = {m}")
    if u_tail < 0 or v_tail < 0:
        raise GraphError("tail lengths must be non-negative")
    u_leaves = m - 3 - (1 if u_tail else 0)
    v_leaves = v_degree - 1 - (1 if v_tail else 0)
    # spine order u, u', v; a u tail hangs off the left, a v tail off the right
    tails = {}
    if u_tail:
        tails[0] = u_tail
    if v_tail:
        tails[2] = v_tail
    return caterpillar([u_leaves, 0, v_leaves], tails)


def pivoted_type2(q_length: int, left_tail: int = 1, right_tail: int = 1) -> Graph:
    """Two dense paths of three dense elements joined by a spine path of length q_length.

    Spine order: w1, w2, [u], v, w3, w4, with w2 and w3 carrying one leaf
    each and w1, w4 extended by tails so they have degree 2.
    """
    if q_length not in (0, 1):
        raise GraphError("q_length must be 0 or 1")
    if left_tail < 1 or right_tail < 1:
        raise GraphError("tails must have length at least 1")
    leaves = [0, 1, 0, 1, 0] if q_length == 0 else [0, 1, 0, 0, 1, 0]
    k = len(leaves)
    return caterpillar(leaves, {0: left_tail, k - 1: right_tail})


def pivoted_hub_example() -> Graph:
    """Type 1 pivoted caterpillar with d(u) = 7, d(v) = 4 and m_t = 9."""
    return pivoted_type1(9, v_degree=4)


def pivoted_pair_touching() -> Graph:
    return pivoted_type2(0)


def pivoted_pair_bridged() -> Graph:
    return pivoted_type2(1)


def random_caterpillar(seed: int, max_n: int) -> Graph:
    """Spine length uniform in [2, max_n // 2], vertex budget uniform in [spine, max_n],
    remaining vertices attached as leaves to uniformly chosen spine vertices."""
    if max_n < 2:
        raise GraphError("max_n must be at least 2")
    rng = random.Random(seed)
    spine = rng.randint(2, max(2, max_n // 2))
    budget = rng.randint(spine, max_n)
    counts = [0] * spine
    for _ in range(budget - spine):
        counts[rng.randrange(spine)] += 1
    return caterpillar(counts)


def cube_graph() -> Graph:
    """The 3-cube Q3 on vertices 0..7, adjacent when ids differ in one bit."""
    edges = [(a, a ^ (1 << b)) for a in range(8) for b in range(3) if a < a ^ (1 << b)]
    return Graph(8, edges)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def all_caterpillars(n: int) -> Iterator[Graph]:
    """Every caterpillar on n vertices, one per isomorphism class.

    A caterpillar with at least three vertices is fixed by the leaf counts
    along its spine, read up to reversal, with both spine ends carrying a
    leaf.
    """
    if n < 1:
        return
    if n <= 2:
        yield path(n)
        return
    for spine in range(1, n - 1):
        for counts in _compositions(n - spine, spine):
            if counts[0] == 0 or counts[-1] == 0:
                continue
            if spine == 1 and counts[0] < 2:
                continue
            if counts > counts[::-1]:
                continue
            yield caterpillar(counts)


# families for property suites


def pivoted_type1_family() -> Iterator[tuple[dict, Graph]]:
    for m in range(7, 13):
        for dv in range(m // 2, m - 3):
            for u_tail in range(4):
                for v_tail in range(4):
                    params = {"m": m, "v_degree": dv, "u_tail": u_tail, "v_tail": v_tail}
                    yield params, pivoted_type1(**params)


def pivoted_type2_family() -> Iterator[tuple[dict, Graph]]:
    for q in (0, 1):
        for left in range(1, 8):
            for right in range(1, 8):
                params = {"q_length": q, "left_tail": left, "right_tail": right}
                yield params, pivoted_type2(**params)


def random_family(count: int, max_n: int, first_seed: int = 0) -> Iterator[tuple[dict, Graph]]:
    for seed in range(first_seed, first_seed + count):
        yield {"seed": seed, "max_n": max_n}, random_caterpillar(seed, max_n)


FAMILIES = {
    "Path": ("n",),
    "Star": ("n",),
    "UniformCaterpillar": ("k", "leaves_per_spine"),
    "DensePath": ("k", "type"),
    "PivotedType1": ("m",),
    "PivotedType2a": (),
    "PivotedType2b": (),
    "RandomCaterpillar": ("max_n",),
    "CubeGraph": (),
}


def generate(family: str, params: Sequence[int] = (), seed: int = 0) -> Graph:
    """Build a graph from a family name and its integer parameters."""
    if family not in FAMILIES:
        raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    names = FAMILIES[family]
    if len(params) != len(names):
        want = " ".join(f"<{n}>" for n in names) or "no parameters"
        raise GraphError(f"{family} takes {want}")
    p = list(params)
    if family == "Path":
        return path(p[0])
    if family == "Star":
        return star(p[0])
    if family == "UniformCaterpillar":
        return uniform_caterpillar(p[0], p[1])
    if family == "DensePath":
        return dense_path_instance(p[0], p[1])
    if family == "PivotedType1":
        return pivoted_type1(p[0])
    if family == "PivotedType2a":
        return pivoted_pair_touching()
    if family == "PivotedType2b":
        return pivoted_pair_bridged()
    if family == "RandomCaterpillar":
        return random_caterpillar(seed, p[0])
    return cube_graph()
