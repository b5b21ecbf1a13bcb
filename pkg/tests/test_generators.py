import pytest

from totalb.caterpillar import Method, classify_pivoted, solve
from totalb.colouring import total_m_degree
from totalb.generators import (
    FAMILIES,
    all_caterpillars,
    caterpillar,
    cube_graph,
    dense_path_degrees,
    dense_path_instance,
    generate,
    pivoted_hub_example,
    pivoted_pair_bridged,
    pivoted_pair_touching,
    pivoted_type1,
    pivoted_type1_family,
    pivoted_type2_family,
    random_caterpillar,
    random_family,
)
from totalb.graph import GraphError, decompose_caterpillar


def test_random_caterpillar_is_deterministic():
    g = random_caterpillar(0, 10)
    assert g.edges == ((0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (2, 6), (4, 7))
    assert random_caterpillar(0, 10).edges == g.edges
    assert random_caterpillar(1, 10).edges != g.edges or random_caterpillar(2, 10).edges != g.edges


@pytest.mark.parametrize("seed", range(30))
def test_random_caterpillars_are_caterpillars_within_budget(seed):
    g = random_caterpillar(seed, 20)
    assert 2 <= g.vertex_count <= 20
    decompose_caterpillar(g)


def test_caterpillar_numbering_and_tails():
    g = caterpillar([1, 0, 2], {0: 2})
    assert g.vertex_count == 3 + 3 + 2
    assert g.edges[:2] == ((0, 1), (1, 2))
    assert (0, 3) in g.edges and (2, 4) in g.edges and (2, 5) in g.edges
    assert (0, 6) in g.edges and (6, 7) in g.edges
    with pytest.raises(GraphError):
        caterpillar([])
    with pytest.raises(GraphError):
        caterpillar([1, -1])


@pytest.mark.parametrize("ptype,k", [(1, 3), (1, 7), (2, 4), (2, 8), (3, 5), (3, 9)])
def test_dense_path_instances_have_the_requested_degrees(ptype, k):
    for mirror in (False, True):
        g = dense_path_instance(k, ptype, mirror)
        spine = list(range(k))
        degrees = [g.degree(v) for v in spine]
        want = dense_path_degrees(k, ptype)
        assert degrees == (want[::-1] if mirror else want)


@pytest.mark.parametrize("ptype,k", [(1, 2), (2, 3), (3, 4), (4, 6)])
def test_dense_path_degrees_reject_bad_parameters(ptype, k):
    with pytest.raises(GraphError):
        dense_path_degrees(k, ptype)


def test_type1_needs_m_at_least_seven():
    with pytest.raises(GraphError, match="m >= 7"):
        pivoted_type1(6)
    with pytest.raises(GraphError, match="degree of v"):
        pivoted_type1(9, v_degree=6)


def test_named_instances():
    hub = pivoted_hub_example()
    assert hub.vertex_count == 12 and total_m_degree(hub) == 9
    touching = pivoted_pair_touching()
    assert touching.vertex_count == 9 and total_m_degree(touching) == 6
    bridged = pivoted_pair_bridged()
    assert bridged.vertex_count == 10 and total_m_degree(bridged) == 6


def test_type1_family_is_classified_as_type1():
    count = 0
    for params, g in pivoted_type1_family():
        m = total_m_degree(g)
        assert m == params["m"], params
        cls = classify_pivoted(g)
        assert cls.kind == "Type1", params
        count += 1
    assert count == 192


def test_type2_family_is_classified_as_type2():
    count = 0
    for params, g in pivoted_type2_family():
        m = total_m_degree(g)
        assert m == 6
        cls = classify_pivoted(g)
        assert cls.kind == "Type2" and cls.q_length == params["q_length"], params
        count += 1
    assert count == 98


def test_random_family_seeds():
    seeds = [p["seed"] for p, _ in random_family(5, 12, first_seed=3)]
    assert seeds == [3, 4, 5, 6, 7]


def test_cube_graph_is_cubic_and_bipartite():
    g = cube_graph()
    assert g.vertex_count == 8 and g.edge_count == 12
    assert all(g.degree(v) == 3 for v in g.vertices())
    assert all(bin(a).count("1") % 2 != bin(b).count("1") % 2 for a, b in g.edges)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 10), (8, 20), (9, 36), (10, 72)])
def test_caterpillar_enumeration_counts(n, count):
    graphs = list(all_caterpillars(n))
    assert len(graphs) == count
    for g in graphs:
        assert g.vertex_count == n
        decompose_caterpillar(g)


def test_enumerated_caterpillars_are_pairwise_distinct():
    def key(g):
        return tuple(sorted(g.degree(v) for v in g.vertices())), tuple(sorted(
            tuple(sorted(g.degree(w) for w in g.neighbours(v))) for v in g.vertices()))

    # distinct degree profiles are enough to separate these small classes
    graphs = list(all_caterpillars(8))
    assert len({key(g) for g in graphs}) == len(graphs)


def test_generate_dispatch_and_errors():
    assert generate("Path", [4]).vertex_count == 4
    assert generate("Star", [3]).vertex_count == 4
    assert generate("UniformCaterpillar", [3, 2]).vertex_count == 9
    assert generate("DensePath", [5, 3]).vertex_count == dense_path_instance(5, 3).vertex_count
    assert generate("PivotedType1", [8]).vertex_count == pivoted_type1(8).vertex_count
    assert generate("PivotedType2a", []).edges == pivoted_pair_touching().edges
    assert generate("PivotedType2b", []).edges == pivoted_pair_bridged().edges
    assert generate("RandomCaterpillar", [10], seed=0).edges == random_caterpillar(0, 10).edges
    assert generate("CubeGraph").edges == cube_graph().edges
    assert set(FAMILIES) >= {"Path", "Star", "CubeGraph"}
    with pytest.raises(GraphError, match="unknown family"):
        generate("Nope", [])
    with pytest.raises(GraphError, match="takes <n>"):
        generate("Path", [])
    with pytest.raises(GraphError):
        generate("Path", [0])


def test_pivoted_examples_solve_to_m_minus_one():
    for g in (pivoted_hub_example(), pivoted_pair_touching(), pivoted_pair_bridged()):
        out = solve(g)
        assert out.method == Method.PIVOTED_MINUS_ONE and out.phi_t == total_m_degree(g) - 1
