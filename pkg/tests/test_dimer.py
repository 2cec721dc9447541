"""Tests for bipartite torus graphs, reflected local systems and the stalkwise kernel."""

from fractions import Fraction

import pytest
import sympy

from dimer import (DimerEdge, NotEmbeddedError, QuiverRep, WrongDegreeProfileError, ZeroWeightError,
                   dimension_vector, extract_graph, kasteleyn, kernel_of_d, reflect_local_system,
                   reflected_violations, to_dot, verify_reflected)


class TestGraph:

    def test_edges(self, dimer):
        F, P = dimer
        G = extract_graph(F, P)
        assert len(G.edges) == 8
        assert G.vertices == ["x1", "x2", "x3", "x4"]
        assert G.edges[0] == DimerEdge("x1", "x3", (0, 0), 1)
        assert [G.valence(label) for label in G.vertices] == [4, 4, 4, 4]
        assert G.isolated() == []

    def test_kasteleyn_reproduces_differential(self, dimer):
        F, P = dimer
        assert kasteleyn(extract_graph(F, P)) == F.matrix(-1)

    def test_wrong_degrees(self, origami):
        F, P = origami
        with pytest.raises(WrongDegreeProfileError):
            extract_graph(F, P)

    def test_midpoint(self, zm):
        F, P = zm
        G = extract_graph(F, P)
        assert G.midpoint(0) == (Fraction(3, 4), Fraction(1, 4))
        assert G.segment(0).vertices[1] == (Fraction(3, 2), Fraction(1, 2))

    def test_dot(self, dimer):
        F, P = dimer
        text = to_dot(extract_graph(F, P))
        assert text.count("style=filled") == 2
        assert text.count("style=solid") == 2
        assert text.count(" -- ") == 8
        assert 'coefficient="17/1", lattice="-1,0"' in text


class TestQuiverRep:

    def test_shape_check(self):
        with pytest.raises(ValueError):
            QuiverRep({"v": 2}, {0: 1}, {("v", 0): sympy.eye(2)})

    def test_dimension_vector(self):
        R = QuiverRep({"a": 1, "b": 3}, {0: 1}, {("a", 0): sympy.eye(1)})
        assert dimension_vector(R) == (1, 3)
        assert dimension_vector(R, ["b", "a"]) == (3, 1)


class TestReflection:

    def test_grid(self, dimer):
        F, P = dimer
        G = extract_graph(F, P)
        R = reflect_local_system(G)
        assert dimension_vector(R, G.vertices) == (1, 1, 3, 3)
        assert verify_reflected(R, G)

    def test_star(self, star):
        F, P = star
        G = extract_graph(F, P)
        R = reflect_local_system(G)
        assert R.vertex_dims["2"] == 3
        assert verify_reflected(R, G)

    def test_single_edge(self, zm):
        F, P = zm
        G = extract_graph(F, P)
        R = reflect_local_system(G)
        assert R.vertex_dims["w"] == 0
        assert verify_reflected(R, G)

    def test_zero_weight(self, dimer):
        F, P = dimer
        G = extract_graph(F, P)
        with pytest.raises(ZeroWeightError):
            reflect_local_system(G, {e: (0 if e == 3 else 1) for e in range(len(G.edges))})

    def test_singular_black_map(self, dimer):
        F, P = dimer
        G = extract_graph(F, P)
        R = reflect_local_system(G).with_map("x1", G.incident("x1")[0], sympy.zeros(1, 1))
        problems = reflected_violations(R, G)
        assert problems and problems[0].startswith("condition (1)")
        assert not verify_reflected(R, G)

    def test_wrong_white_dimension(self, dimer):
        F, P = dimer
        G = extract_graph(F, P)
        incident = G.incident("x3")
        R = reflect_local_system(G).with_vertex("x3", 2, {e: sympy.zeros(1, 2) for e in incident})
        problems = reflected_violations(R, G)
        assert any(p.startswith("condition (2)") and "dimension 2" in p for p in problems)

    def test_white_space_meeting_an_edge(self, dimer):
        F, P = dimer
        G = extract_graph(F, P)
        incident = G.incident("x3")
        # kernel of (1, 1, 1, 0): contains the last coordinate vector
        basis = sympy.Matrix([[1, 1, 0], [-1, 0, 0], [0, -1, 0], [0, 0, 1]])
        maps = {e: basis[r, :] for r, e in enumerate(incident)}
        R = reflect_local_system(G).with_vertex("x3", 3, maps)
        problems = reflected_violations(R, G)
        assert any("meets the summand" in p for p in problems)


class TestKernel:

    def test_grid(self, dimer):
        F, P = dimer
        G = extract_graph(F, P)
        R = kernel_of_d(F, P)
        assert dimension_vector(R, G.vertices) == (1, 1, 3, 3)
        assert all(dim == 1 for dim in R.edge_dims.values())
        assert verify_reflected(R, G)

    def test_star(self, star):
        F, P = star
        R = kernel_of_d(F, P)
        assert dimension_vector(R, ["1", "2"]) == (1, 3)

    def test_single_edge(self, zm):
        F, P = zm
        R = kernel_of_d(F, P)
        assert R.vertex_dims == {"b": 1, "w": 0}

    def test_matches_reflection(self, dimer):
        F, P = dimer
        G = extract_graph(F, P)
        assert dimension_vector(kernel_of_d(F, P), G.vertices) == \
            dimension_vector(reflect_local_system(G), G.vertices)

    def test_crossing(self, crossing):
        F, P = crossing
        with pytest.raises(NotEmbeddedError):
            kernel_of_d(F, P)
