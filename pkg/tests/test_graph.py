import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from grayud.graph import (
    HOLLOW, SOLID, Graph, IncidenceConfiguration, LcfCode, LcfError, bipartition,
    complete_bipartite, girth, grid2_configuration, grid3_configuration, lcf_graph,
    levi_graph, subdivide, verify_hamiltonian_cycle,
)
from grayud.symmetry import find_isomorphism

import oracles

K4 = LcfCode((2,), 4)


class TestGraphType:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(3, frozenset({(1, 1)}))

    def test_rejects_undeclared_endpoint(self):
        with pytest.raises(ValueError, match="undeclared"):
            Graph(2, frozenset({(0, 2)}))

    def test_duplicate_orientations_collapse(self):
        g = Graph(2, [(0, 1), (1, 0)])
        assert g.edges == {(0, 1)}

    def test_roles_must_split_edges(self):
        with pytest.raises(ValueError, match="joins two solid"):
            Graph(2, frozenset({(0, 1)}), (SOLID, SOLID))

    def test_json_canonical(self):
        g = Graph(3, frozenset({(2, 1), (0, 1)}), (SOLID, HOLLOW, SOLID))
        text = g.to_json()
        assert text == '{"edges": [[0, 1], [1, 2]], "n": 3, "roles": {"0": "solid", "1": "hollow", "2": "solid"}}\n'
        assert Graph.from_json(text) == g

    def test_json_roundtrip_gray(self, gray):
        assert Graph.from_json(gray.to_json()) == gray
        doc = json.loads(gray.to_json())
        assert doc["edges"] == sorted(doc["edges"])
        assert all(a < b for a, b in doc["edges"])


class TestLcf:
    def test_gray_code(self):
        g = lcf_graph(LcfCode((7, -7, 13, -13, 25, -25), 9))
        assert (g.n, len(g.edges)) == (54, 81)
        assert all(g.degree(v) == 3 for v in g.vertices)

    def test_k4(self):
        g = lcf_graph(K4)
        assert g.edges == {(a, b) for a in range(4) for b in range(a + 1, 4)}

    def test_k33_exhaustive_adjacency(self):
        g = lcf_graph(LcfCode((3,), 6))
        # K3,3 with parts = even / odd positions on the Hamilton cycle
        k33 = {(a, b) if a < b else (b, a) for a in (0, 2, 4) for b in (1, 3, 5)}
        assert g.edges == k33
        assert bipartition(g) == (frozenset({0, 2, 4}), frozenset({1, 3, 5}))
        assert girth(g) == 4

    def test_unpaired_chord_names_position(self):
        with pytest.raises(LcfError) as err:
            lcf_graph(LcfCode((3, 2), 3))
        assert err.value.position == 0
        assert "position 0" in str(err.value)

    def test_chord_duplicating_cycle_edge(self):
        with pytest.raises(LcfError, match="cycle edge"):
            lcf_graph(LcfCode((1,), 6))
        with pytest.raises(LcfError, match="cycle edge"):
            lcf_graph(LcfCode((5,), 6))

    def test_periodic_pairing_across_blocks(self):
        # offset at 1 pairs with position 4 in the next block
        g = lcf_graph(LcfCode((5, -5), 4))
        assert len(g.edges) == 12

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(-12, 12), min_size=1, max_size=4), st.integers(1, 6))
    def test_valid_codes_give_cubic_graphs(self, offsets, repeats):
        code = LcfCode(tuple(offsets), repeats)
        try:
            g = lcf_graph(code)
        except LcfError:
            return
        assert len(g.edges) * 2 == 3 * code.n
        assert all(g.degree(v) == 3 for v in g.vertices)


class TestGray:
    def test_counts(self, gray):
        assert (gray.n, len(gray.edges)) == (54, 81)
        assert gray.roles.count(SOLID) == gray.roles.count(HOLLOW) == 27
        assert gray.roles[0] == HOLLOW

    def test_bipartition(self, gray):
        a, b = bipartition(gray)
        assert (len(a), len(b)) == (27, 27)
        assert 0 in a

    def test_girth(self, gray, backend):
        assert girth(gray) == 8

    def test_girth_against_path_enumeration(self, gray):
        assert oracles.girth_by_paths(gray.neighbors, 10) == 8

    def test_hamiltonian_cycle(self, gray):
        assert verify_hamiltonian_cycle(gray, range(54))
        assert not verify_hamiltonian_cycle(gray, range(53))
        assert not verify_hamiltonian_cycle(gray, list(range(53)) + [0])
        assert not verify_hamiltonian_cycle(gray, [0, 2] + list(range(3, 54)) + [1])


class TestConfigurations:
    def test_grid3(self):
        c = grid3_configuration(3)
        assert (len(c.points), len(c.lines), len(c.flags)) == (27, 27, 81)
        assert set(c.point_degrees().values()) == {3}
        assert set(c.line_degrees().values()) == {3}

    def test_grid3_k2_is_cube(self):
        c = grid3_configuration(2)
        assert (len(c.points), len(c.lines), len(c.flags)) == (8, 12, 24)
        assert set(c.point_degrees().values()) == {3}
        assert set(c.line_degrees().values()) == {2}

    def test_center_point(self):
        c = grid3_configuration(3)
        assert c.lines_through((1, 1, 1)) == [(0, 1, 1), (1, 1, 1), (2, 1, 1)]

    def test_grid2(self):
        c = grid2_configuration(3)
        assert (len(c.points), len(c.lines), len(c.flags)) == (9, 6, 18)
        assert set(c.point_degrees().values()) == {2}
        assert set(c.line_degrees().values()) == {3}
        c2 = grid2_configuration(2)
        assert (len(c2.points), len(c2.lines), len(c2.flags)) == (4, 4, 8)

    def test_small_k_rejected(self):
        with pytest.raises(ValueError):
            grid3_configuration(1)
        with pytest.raises(ValueError):
            grid2_configuration(1)

    def test_flag_validation(self):
        with pytest.raises(ValueError, match="undeclared"):
            IncidenceConfiguration((0,), ("L",), frozenset({(0, "M")}))
        with pytest.raises(ValueError, match="repeated"):
            IncidenceConfiguration((0,), ("L",), [(0, "L"), (0, "L")])


class TestLevi:
    def test_grid2_is_subdivided_k33(self):
        g = levi_graph(grid2_configuration(3))
        assert (g.n, len(g.edges)) == (15, 18)
        cert = find_isomorphism(g, subdivide(complete_bipartite(3, 3)))
        assert cert is not None and cert.verified

    def test_grid2_girth(self):
        g = levi_graph(grid2_configuration(3))
        assert girth(g) == 8
        assert oracles.girth_by_paths(g.neighbors, 15) == 8

    def test_grid3_is_gray(self, gray):
        g = levi_graph(grid3_configuration(3))
        assert (g.n, len(g.edges)) == (54, 81)
        assert all(g.degree(v) == 3 for v in g.vertices)
        cert = find_isomorphism(g, gray)
        assert cert is not None and cert.verified

    def test_empty(self):
        g = levi_graph(IncidenceConfiguration((), (), frozenset()))
        assert g.n == 0 and not g.edges

    def test_degrees_match_flags(self):
        for c in (grid2_configuration(3), grid3_configuration(2), grid3_configuration(3)):
            g = levi_graph(c)
            assert sum(g.degree(v) for v in g.vertices) == 2 * len(c.flags)
            pdeg = c.point_degrees()
            for i, p in enumerate(sorted(c.points)):
                assert g.degree(i) == pdeg[p]
                assert g.roles[i] == SOLID


class TestGirthBipartition:
    def test_k4(self):
        assert girth(lcf_graph(K4)) == 3
        assert bipartition(lcf_graph(K4)) is None

    def test_path_is_acyclic(self):
        assert girth(Graph(3, frozenset({(0, 1), (1, 2)}))) == math.inf

    def test_single_edge(self):
        assert bipartition(Graph(2, frozenset({(0, 1)}))) == (frozenset({0}), frozenset({1}))

    def test_components_independent(self):
        g = Graph(5, frozenset({(0, 1), (3, 4)}))
        assert bipartition(g) == (frozenset({0, 2, 3}), frozenset({1, 4}))
