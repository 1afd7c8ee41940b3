import itertools

import networkx as nx
import pytest

from conftest import complete, cycle, make_graph, path, random_graph
from sparing.errors import CapExceededError, GraphFormatError
from sparing.utils.graph import (
    EdgeId,
    bits,
    independent_sets,
    intersection,
    is_bipartite,
    is_connected,
    is_cycle,
    is_eulerian,
    is_independent,
    mask_of,
    spanned_graph,
)


class TestGraphModel:
    def test_edges_are_canonical_and_sorted(self):
        g = make_graph(4, [(3, 2), (1, 0), (2, 0), (1, 3)])
        assert [str(e) for e in g.edges] == ["(0,1)", "(0,2)", "(1,3)", "(2,3)"]
        assert g.degrees() == [2, 2, 2, 2]
        assert g.neighbors(0) == [1, 2]
        assert g.has_edge(3, 1) and not g.has_edge(0, 3)

    @pytest.mark.parametrize(
        "n, edges, kind",
        [
            (3, [(0, 1), (1, 1)], "loop"),
            (3, [(0, 1), (1, 0), (1, 2)], "duplicate"),
            (3, [(0, 1), (1, 3)], "range"),
            (4, [(0, 1), (1, 2)], "isolated"),
            (1, [], "header"),
            (2, [], "header"),
        ],
    )
    def test_from_edges_rejects(self, n, edges, kind):
        with pytest.raises(GraphFormatError) as exc:
            make_graph(n, edges)
        assert exc.value.kind == kind

    def test_edge_id_order(self):
        assert EdgeId.of(5, 2) == EdgeId(2, 5)
        assert tuple(EdgeId.of(5, 2)) == (2, 5)
        with pytest.raises(ValueError):
            EdgeId(3, 3)

    def test_to_networkx(self):
        g = complete(5)
        h = g.to_networkx()
        assert h.number_of_nodes() == 5
        assert h.number_of_edges() == 10


class TestBitmasks:
    def test_bits_roundtrip(self):
        assert bits(0b101001) == [0, 3, 5]
        assert mask_of([5, 3, 0]) == 0b101001
        assert bits(0) == []

    def test_is_independent(self, c5):
        assert is_independent(c5, mask_of([0, 2]))
        assert not is_independent(c5, mask_of([0, 4]))
        assert is_independent(c5, 0)


class TestStructure:
    def test_bipartite(self):
        ok, colouring = is_bipartite(cycle(6))
        assert ok
        assert [colouring[v] for v in range(6)] == [0, 1, 0, 1, 0, 1]
        assert is_bipartite(cycle(5)) == (False, None)

    def test_bipartite_agrees_with_networkx(self, rng):
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 9), p=0.3)
            assert is_bipartite(g)[0] == nx.is_bipartite(g.to_networkx())

    def test_connected(self):
        assert is_connected(path(6))
        assert not is_connected(make_graph(4, [(0, 1), (2, 3)]))

    def test_is_eulerian(self, bowtie, rng):
        assert is_eulerian(bowtie)
        assert not is_eulerian(path(4))
        assert not is_eulerian(make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
        for _ in range(40):
            g = random_graph(rng, rng.randint(3, 8), p=0.4)
            h = g.to_networkx()
            expected = nx.is_connected(h) and all(d % 2 == 0 for _, d in h.degree())
            assert is_eulerian(g) == expected

    def test_is_cycle(self):
        assert is_cycle(cycle(3))
        assert not is_cycle(path(4))
        two_triangles = make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_cycle(two_triangles)


class TestIndependentSets:
    def test_ascending_and_complete(self, rng):
        for _ in range(20):
            g = random_graph(rng, rng.randint(2, 8), p=0.35)
            found = list(independent_sets(g, cap=26))
            assert found == sorted(found)
            expected = [m for m in range(1 << g.n) if is_independent(g, m)]
            assert found == expected

    def test_cycle_count(self):
        # independent sets of C_n are counted by the Lucas numbers
        assert len(list(independent_sets(cycle(5), cap=26))) == 11
        assert len(list(independent_sets(cycle(6), cap=26))) == 18

    def test_cap(self):
        with pytest.raises(CapExceededError):
            next(independent_sets(path(10), cap=9))


class TestSubgraphs:
    def test_spanned_graph_renumbers(self):
        g, originals = spanned_graph([EdgeId(5, 7), EdgeId(2, 5)])
        assert originals == [2, 5, 7]
        assert g.n == 3
        assert [tuple(e) for e in g.edges] == [(0, 1), (1, 2)]

    def test_intersection_on_common_edge(self):
        a = {EdgeId(0, 1), EdgeId(1, 2), EdgeId(0, 2)}
        b = {EdgeId(0, 2), EdgeId(2, 3), EdgeId(0, 3)}
        common = intersection(a, b)
        assert common is not None
        assert (common.n, common.edge_count) == (2, 1)

    def test_intersection_of_vertex_union_is_not_a_graph(self):
        a = {EdgeId(0, 1), EdgeId(1, 2), EdgeId(0, 2)}
        b = {EdgeId(0, 3), EdgeId(3, 4), EdgeId(0, 4)}
        assert intersection(a, b) is None

    def test_intersection_with_untouched_common_vertex(self):
        a = {EdgeId(0, 1), EdgeId(1, 2), EdgeId(2, 3), EdgeId(0, 3)}
        b = {EdgeId(0, 1), EdgeId(1, 4), EdgeId(2, 4), EdgeId(2, 5), EdgeId(0, 5)}
        assert intersection(a, b) is None

    def test_complete_graph_pairs(self):
        g = complete(4)
        assert set(g.edges) == {EdgeId(a, b) for a, b in itertools.combinations(range(4), 2)}


class TestSmallGraphs:
    def test_independent_sets_of_small_graphs(self):
        assert [bits(m) for m in independent_sets(complete(3))] == [[], [0], [1], [2]]
        assert [bits(m) for m in independent_sets(path(2))] == [[], [0], [1]]

    def test_k4_is_not_bipartite(self):
        assert is_bipartite(complete(4)) == (False, None)
