"""Acceptance checks, one function per criterion.

Each check returns a Result: a pass flag and the detail lines printed under
it. test_acceptance.py turns them into tests; conftest prints the summary.
Run this file directly to print the report without pytest.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from totalb.caterpillar import (
    Method,
    classify_pivoted,
    colour_dense_path_type1,
    colour_dense_path_type2,
    colour_dense_path_type3,
    colour_pivoted,
    colour_small_m_degree,
    detect_pivoted_type1,
    detect_pivoted_type2,
    find_dense_paths,
    path_dense_elements,
    solve,
)
from totalb.colouring import TotalColouring, dense_elements, total_m_degree, verify
from totalb.exact import exists_total_k_colouring, solve_exact
from totalb.gadget import build_gadget, degree_equations, lift_colouring, project_colouring, same_up_to_renaming
from totalb.generators import (
    all_caterpillars,
    caterpillar,
    cube_graph,
    dense_path_instance,
    path,
    pivoted_pair_touching,
    pivoted_type1_family,
    pivoted_type2_family,
    random_caterpillar,
    star,
)
from totalb.graph import E, V, Kind, decompose_caterpillar, total_degree, total_neighbourhood

RESULTS: dict[int, "Result"] = {}


@dataclass
class Result:
    criterion: int
    title: str
    passed: bool = True
    lines: list[str] = field(default_factory=list)

    def check(self, ok: bool, line: str) -> None:
        self.lines.append(("ok   " if ok else "FAIL ") + line)
        self.passed = self.passed and ok

    def note(self, line: str) -> None:
        self.lines.append("     " + line)

    def report(self) -> str:
        head = f"criterion {self.criterion}: {'PASS' if self.passed else 'FAIL'}  {self.title}"
        return "\n".join([head] + ["    " + ln for ln in self.lines])


def _record(result: Result) -> Result:
    RESULTS[result.criterion] = result
    return result


def closed_forms() -> Result:
    r = Result(1, "closed forms for paths 1..7 and stars 1..5 (exact match, < 120 s)")
    start = time.perf_counter()
    path_values = {1: 1, 2: 3, 3: 3, 4: 4}
    for n in range(1, 8):
        want = path_values.get(n, 5)
        got = solve_exact(path(n)).phi_t
        r.check(got == want, f"P_{n}: solve_exact {got}, closed form {want}")
    for n in range(1, 6):
        want = n + 1
        got = solve_exact(star(n)).phi_t
        extra = "" if got == want else " (K_{1,1} is P_2, whose value is 3)"
        r.check(got == want, f"K_1,{n}: solve_exact {got}, closed form n+1 = {want}{extra}")
    elapsed = time.perf_counter() - start
    r.check(elapsed < 120, f"runtime {elapsed:.2f} s")
    return _record(r)


# Reference colouring of the six-vertex type 1 dense path, per spine vertex:
# (vertex colour, edge colour) for each leaf in id order.
GOLDEN_LEAVES = [
    [(4, 5), (7, 6), (8, 9), (11, 10)],
    [(6, 7), (9, 8), (10, 11)],
    [(2, 1), (8, 9), (11, 10)],
    [(1, 2), (4, 3), (10, 11)],
    [(2, 1), (3, 4), (6, 5)],
    [(1, 2), (4, 3), (5, 6), (8, 7)],
]


def golden_colouring() -> TotalColouring:
    k = 6
    a = {V(i): 2 * i + 1 for i in range(k)}
    a.update({E(i): 2 * i + 2 for i in range(k - 1)})
    leaf = k
    for pairs in GOLDEN_LEAVES:
        for vc, ec in pairs:
            a[V(leaf)] = vc
            # the edge to leaf L was added L - 1 edges in
            a[E(leaf - 1)] = ec
            leaf += 1
    return TotalColouring(2 * k - 1, a)


def golden_type1() -> Result:
    r = Result(2, "type 1 dense path with k = 6 matches the reference colouring byte for byte")
    g = dense_path_instance(6, 1)
    (p,) = find_dense_paths(g)
    got = colour_dense_path_type1(g, p).to_json()
    want = golden_colouring().to_json()
    r.check(got == want, f"serialized colouring {'identical' if got == want else 'differs'} ({len(want)} bytes)")
    if got != want:
        gc = TotalColouring.from_json(got)
        wc = golden_colouring()
        diff = [x for x in g.elements() if gc.get(x) != wc.get(x)]
        r.note("first differences: " + ", ".join(f"{x!r} {gc.get(x)} vs {wc.get(x)}" for x in diff[:5]))
    return _record(r)


def dense_path_suites() -> Result:
    r = Result(3, "dense path constructions: palette, pickups and zero repeats (< 60 s)")
    start = time.perf_counter()
    runners = {1: (colour_dense_path_type1, range(3, 13)),
               2: (colour_dense_path_type2, range(4, 13)),
               3: (colour_dense_path_type3, range(5, 13))}
    for ptype, (run, ks) in runners.items():
        palette_bad, pickup_bad, repeat_bad, total = [], [], [], 0
        for k in ks:
            # type 2 counts one end; both orientations are tested
            for mirror in ((False, True) if ptype == 2 else (False,)):
                g = dense_path_instance(k, ptype, mirror)
                (p,) = find_dense_paths(g)
                c = run(g, p)
                size = 2 * k - ptype
                dense = path_dense_elements(g, p)
                total += 1
                if sorted(c[x] for x in dense) != list(range(1, size + 1)):
                    palette_bad.append(k)
                for x in dense:
                    seen = [c[y] for y in total_neighbourhood(g, x) if c.get(y) is not None]
                    if set(seen) != set(range(1, size + 1)) - {c[x]}:
                        pickup_bad.append((k, x))
                    if len(seen) != len(set(seen)):
                        repeat_bad.append((k, x))
        label = f"type {ptype}, k in {ks.start}..{ks.stop - 1}"
        r.check(not palette_bad, f"{label}: dense elements use exactly 2k-{ptype} colours ({total} instances)")
        r.check(not pickup_bad, f"{label}: every dense element picks up 2k-{ptype + 1} distinct colours")
        r.check(not repeat_bad, f"{label}: zero repeats in dense neighbourhoods"
                + (f" ({len(repeat_bad)} elements repeat, first {repeat_bad[0][1]!r} at k={repeat_bad[0][0]})"
                   if repeat_bad else ""))
    elapsed = time.perf_counter() - start
    r.check(elapsed < 60, f"runtime {elapsed:.2f} s")
    return _record(r)


def _certificate(r: Result, g, label: str) -> None:
    m = total_m_degree(g)
    n_el = g.vertex_count + g.edge_count
    r.check(m == 6, f"{label}: {g.vertex_count} vertices, {n_el} elements, m_t = {m} (stated 6)")
    start = time.perf_counter()
    res = solve_exact(g)
    elapsed = time.perf_counter() - start
    r.check(res.phi_t == 5, f"{label}: solve_exact phi_t = {res.phi_t} in {elapsed:.2f} s")
    r.check(6 in res.refuted, f"{label}: search at k = 6 exhausted (refuted {list(res.refuted)})")
    cls = classify_pivoted(g) if m >= 6 else None
    if cls is None or not cls.pivoted:
        r.check(False, f"{label}: not a pivoted caterpillar, colour_pivoted does not apply")
        return
    c = colour_pivoted(g, cls)
    r.check(c.k == 5 and verify(g, c).valid, f"{label}: colour_pivoted gives a verified {c.k}-colouring")


def pivoted_certificate_literal() -> Result:
    r = Result(4, "pivoted non-existence certificate on the stated 7-vertex instance")
    _certificate(r, caterpillar([0, 1, 0, 1, 0]), "7-vertex reading")
    sevens = [g for g in all_caterpillars(7) if total_m_degree(g) >= 6]
    type2 = [g for g in sevens if detect_pivoted_type2(g, decompose_caterpillar(g), total_m_degree(g))]
    r.note(f"no 7-vertex caterpillar is type 2 pivoted ({len(type2)} of {len(sevens)} with m_t >= 6)")
    return r


def pivoted_certificate_smallest() -> Result:
    r = Result(4, "pivoted non-existence certificate on the smallest type 2 instance")
    _certificate(r, pivoted_pair_touching(), "9-vertex instance")
    return r


def pivoted_certificate() -> Result:
    literal = pivoted_certificate_literal()
    smallest = pivoted_certificate_smallest()
    r = Result(4, "pivoted non-existence certificate (phi_t = 5, k = 6 refuted, < 10 min)")
    r.lines = literal.lines + smallest.lines
    r.passed = literal.passed and smallest.passed
    return _record(r)


def small_m_sweep() -> Result:
    r = Result(5, "every caterpillar with <= 9 vertices and m_t <= 5 reaches m_t")
    count, bad_colour, bad_exact = 0, [], []
    for n in range(1, 10):
        for g in all_caterpillars(n):
            m = total_m_degree(g)
            if m > 5:
                continue
            count += 1
            c = colour_small_m_degree(g)
            if c.k != m or not verify(g, c).valid:
                bad_colour.append(g.edges)
            if solve_exact(g).phi_t != m:
                bad_exact.append(g.edges)
    r.check(not bad_colour, f"colour_small_m_degree verifies with k = m_t on {count - len(bad_colour)}/{count}")
    r.check(not bad_exact, f"solve_exact confirms phi_t = m_t on {count - len(bad_exact)}/{count}")
    return _record(r)


def differential_fuzz(seeds: int = 200, max_n: int = 10) -> Result:
    r = Result(6, f"{seeds} random caterpillars with <= {max_n} vertices: solve agrees with solve_exact")
    disagree, invalid, methods = [], [], {}
    for seed in range(seeds):
        g = random_caterpillar(seed, max_n)
        out = solve(g, allow_exact_fallback=True)
        methods[out.method] = methods.get(out.method, 0) + 1
        if out.phi_t != solve_exact(g).phi_t:
            disagree.append(seed)
        if out.colouring is None or not verify(g, out.colouring).valid or out.colouring.k != out.phi_t:
            invalid.append(seed)
    r.check(not disagree, f"phi_t agrees on {seeds - len(disagree)}/{seeds}")
    r.check(not invalid, f"returned witness verifies on {seeds - len(invalid)}/{seeds}")
    r.note("methods: " + ", ".join(f"{k} {v}" for k, v in sorted(methods.items())))
    return _record(r)


def reduction_integrity() -> Result:
    r = Result(7, "hardness gadget on the cube graph")
    g = cube_graph()
    gd = build_gadget(g)
    H = gd.H
    r.check(H.vertex_count == 57, f"|V(H)| = {H.vertex_count}")
    m = total_m_degree(H)
    r.check(m == 17, f"m_t(H) = {m}")
    for name, ok in degree_equations(gd):
        extra = ""
        if not ok and name.startswith("d_t(u_i^j)"):
            extra = f" (actual {total_degree(H, V(gd.pendant(1, 1)))}: the vertex and its edge)"
        r.check(ok, f"equation {name}{extra}")
    cg = exists_total_k_colouring(g, 4)
    r.check(cg is not None, "cube graph has a total 4-colouring")
    if cg is not None:
        lifted = lift_colouring(gd, cg)
        r.check(lifted.k == 17 and verify(H, lifted).valid, "lifted colouring is total b-chromatic with 17 colours")
        back = project_colouring(gd, lifted)
        r.check(same_up_to_renaming(g, back, cg), "project after lift is the identity up to renaming")
    return _record(r)


def _prop5(g, cls, m) -> str | None:
    u, v = cls.u, cls.v
    group = {V(u), V(v)} | {E(e) for e in g.incident_edges(u)}
    dense = set(dense_elements(g, m))
    if len(group & dense) != m:
        return f"E(u) with u, v holds {len(group & dense)} dense elements, not {m}"
    if not g.degree(v) < m - 2:
        return f"d(v) = {g.degree(v)} is not below m - 2"
    return None


def _prop6(g, cls, m) -> str | None:
    if m != 6:
        return f"m = {m}"
    for p in cls.paths:
        if p.length - 1 != 2:
            return f"dense path {p.vertices} has length {p.length - 1}"
        inner, ends = p.vertices[1], (p.vertices[0], p.vertices[-1])
        if g.degree(inner) != 3 or 2 * g.degree(inner) < m - 1:
            return f"dense vertex {inner} has degree {g.degree(inner)}"
        if any(g.degree(x) != 2 for x in ends):
            return f"boundary vertices of {p.vertices} do not have degree 2"
    return None


def _prop7(g, m) -> str | None:
    for x in dense_elements(g, m):
        if x.kind == Kind.EDGE:
            a, b = g.edges[x.id]
            if 2 * g.degree(a) < m - 1 and 2 * g.degree(b) < m - 1:
                return f"dense edge {x!r} has no dense endpoint"
    return None


def _exclusive(g, m) -> str | None:
    # pivoted means exactly m dense elements; outside that the conditions may overlap
    if m < 6 or len(dense_elements(g, m)) != m:
        return None
    t1 = detect_pivoted_type1(g, m)
    t2 = detect_pivoted_type2(g, decompose_caterpillar(g), m)
    return "both pivoted conditions hold" if t1 and t2 else None


def _both_conditions(g) -> bool:
    m = total_m_degree(g)
    return m >= 6 and bool(detect_pivoted_type1(g, m)) and bool(detect_pivoted_type2(g, decompose_caterpillar(g), m))


def structural_suite(random_count: int = 60) -> Result:
    r = Result(8, "structural properties on generated pivoted and non-pivoted caterpillars")
    type1 = list(pivoted_type1_family())
    type2 = list(pivoted_type2_family())
    plain = []
    seed = 0
    while len(plain) < random_count:
        g = random_caterpillar(10_000 + seed, 40)
        seed += 1
        m = total_m_degree(g)
        if m >= 6 and not classify_pivoted(g).pivoted:
            plain.append(g)

    def run(name, graphs, extra):
        failures = []
        for g in graphs:
            m = total_m_degree(g)
            for problem in (extra(g, m), _prop7(g, m), _exclusive(g, m)):
                if problem:
                    failures.append(problem)
        r.check(not failures, f"{name}: {len(graphs)} instances" + (f", first failure: {failures[0]}" if failures else ""))

    def type1_props(g, m):
        cls = classify_pivoted(g)
        return "not classified as type 1" if cls.kind != "Type1" else _prop5(g, cls, m)

    def type2_props(g, m):
        cls = classify_pivoted(g)
        return "not classified as type 2" if cls.kind != "Type2" else _prop6(g, cls, m)

    run("type 1 pivoted (set around u, d(v) < m-2, dense edge endpoints, exclusivity)", [g for _, g in type1], type1_props)
    run("type 2 pivoted (m = 6, paths of length 2, degrees 3 and 2, dense edge endpoints, exclusivity)",
        [g for _, g in type2], type2_props)
    run("non-pivoted random with m_t >= 6 (dense edge endpoints, exclusivity)", plain, lambda g, m: None)
    everything = [g for n in range(1, 13) for g in all_caterpillars(n)]
    run("all caterpillars up to 12 vertices (dense edge endpoints, exclusivity)", everything, lambda g, m: None)
    overlap = sum(1 for g in everything if _both_conditions(g))
    r.note(f"{overlap} of them meet both conditions but have more than m_t dense elements, so are not pivoted")
    return _record(r)


CHECKS = [closed_forms, golden_type1, dense_path_suites, pivoted_certificate, small_m_sweep,
          differential_fuzz, reduction_integrity, structural_suite]


def main() -> int:
    failed = 0
    for check in CHECKS:
        result = check()
        print(result.report(), flush=True)
        failed += not result.passed
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
