"""Tests for torus geometry: simplices, placements, X(F), support sets and the overlap checks."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from algebra import FreeComplex, LaurentPoly, point_koszul
from torus import (Placement, SimplicialSet, SupportSet, TorusSimplex, affine_rank, build_S, build_X,
                   half_cube_placement, images_of, is_embedded, is_immersed, maximize, parse_point,
                   perturb_generic, point_in_hull, recursive_supports, reduce_point,
                   relative_interiors_meet, simplex_volume, support_equals_T, translate)
from torus.linprog import INFEASIBLE, OPTIMAL, UNBOUNDED

H = Fraction(1, 2)
THIRD = Fraction(1, 3)


@st.composite
def rational_points(draw, n=2):
    seed = draw(st.integers(min_value=0, max_value=2**31 - 1))
    rng = np.random.RandomState(seed)
    return tuple(Fraction(int(a), int(b)) for a, b in zip(rng.randint(-20, 21, size=n), rng.randint(1, 7, size=n)))


@st.composite
def segment_pairs(draw):
    """Two planar segments with small integer endpoints, often touching or collinear."""
    seed = draw(st.integers(min_value=0, max_value=2**31 - 1))
    rng = np.random.RandomState(seed)
    points = [tuple(Fraction(int(x)) for x in rng.randint(-2, 3, size=2)) for _ in range(4)]
    return points[:2], points[2:]


def _orientation(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def segments_cross(first, second):
    """Whether the open segments meet, by orientation signs and interval overlap."""
    (p, q), (r, s) = first, second
    o1, o2 = _orientation(p, q, r), _orientation(p, q, s)
    o3, o4 = _orientation(r, s, p), _orientation(r, s, q)
    if o1 == o2 == o3 == o4 == 0:
        axis = 0 if p[0] != q[0] else 1
        lo = max(min(p[axis], q[axis]), min(r[axis], s[axis]))
        hi = min(max(p[axis], q[axis]), max(r[axis], s[axis]))
        return lo < hi
    return o1 * o2 < 0 and o3 * o4 < 0


class TestExactLinearProgram:

    def test_optimum(self):
        result = maximize([1, 1], [[1, 2], [3, 1]], [4, 6], ["<=", "<="])
        assert result.status == OPTIMAL
        assert result.value == Fraction(14, 5)
        assert result.x == [Fraction(8, 5), Fraction(6, 5)]

    def test_infeasible(self):
        result = maximize([1], [[1], [1]], [2, 1], [">=", "<="])
        assert result.status == INFEASIBLE

    def test_unbounded(self):
        result = maximize([1, 0], [[1, -1]], [1], ["<="])
        assert result.status == UNBOUNDED

    def test_equalities_only(self):
        result = maximize([1, 0], [[1, 1]], [3], ["="])
        assert result.status == OPTIMAL
        assert result.value == 3
        assert result.x == [Fraction(3), Fraction(0)]

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            maximize([1.0], [[1]], [1], ["<="])


class TestSimplexGeometry:

    def test_canonical_lift(self):
        s = TorusSimplex([(Fraction(3, 2), Fraction(1, 4)), (2, 1)])
        assert s == TorusSimplex([(H, Fraction(1, 4)), (1, 1)])
        assert s.vertices[0] == (H, Fraction(1, 4))

    def test_vertex_order_matters(self):
        a, b = (0, 0), (H, H)
        assert TorusSimplex([a, b]) != TorusSimplex([b, a])
        assert TorusSimplex([a, b]).unordered_key() == TorusSimplex([b, a]).unordered_key()

    def test_face_is_recanonicalized(self):
        s = TorusSimplex([(0, 0), (Fraction(3, 2), 0), (Fraction(3, 2), 1)])
        assert s.face(0) == TorusSimplex([(H, 0), (H, 1)])
        with pytest.raises(IndexError):
            s.face(3)

    def test_degenerate(self):
        assert TorusSimplex([(0, 0), (H, H), (1, 1)]).is_degenerate()
        assert TorusSimplex([(0, 0), (0, 0)]).has_repeated_vertices()
        assert not TorusSimplex([(0, 0), (1, 0), (0, 1)]).is_degenerate()

    def test_volume(self):
        assert simplex_volume([(0, 0), (1, 0), (0, 1)]) == H
        assert simplex_volume([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]) == Fraction(1, 6)
        assert isinstance(simplex_volume([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]), Fraction)
        assert simplex_volume([(0, 0, 0), (2, 0, 0), (0, 3, 0), (0, 0, 1)]) == 1
        assert simplex_volume([(0, 0), (1, 1), (2, 2)]) == 0
        assert affine_rank([(0, 0), (1, 1), (2, 2)]) == 1

    def test_point_in_hull(self):
        triangle = [(0, 0), (1, 0), (0, 1)]
        assert point_in_hull((THIRD, THIRD), triangle)
        assert point_in_hull((H, H), triangle)
        assert not point_in_hull((1, 1), triangle)
        # dependent vertex set goes through the linear program
        assert point_in_hull((H, 0), [(0, 0), (THIRD, 0), (1, 0)])
        assert not point_in_hull((2, 0), [(0, 0), (THIRD, 0), (1, 0)])

    def test_relative_interiors(self):
        assert relative_interiors_meet([(0, 0), (1, 1)], [(0, 1), (1, 0)])
        assert not relative_interiors_meet([(0, 0), (1, 0)], [(1, 0), (2, 0)])
        assert relative_interiors_meet([(0, 0), (2, 0)], [(1, 0), (3, 0)])

    @given(segment_pairs())
    @settings(max_examples=60, deadline=None)
    def test_property_segments_match_orientation_test(self, pair):
        first, second = pair
        assume(first[0] != first[1] and second[0] != second[1])
        assert relative_interiors_meet(first, second) == segments_cross(first, second)

    @given(rational_points())
    @settings(max_examples=30, deadline=None)
    def test_property_reduction(self, point):
        reduced = reduce_point(point)
        assert all(0 <= x < 1 for x in reduced)
        assert all((x - y).denominator == 1 for x, y in zip(point, reduced))
        assert TorusSimplex([point]) == TorusSimplex([reduced])


class TestPlacement:

    def test_parse_point(self):
        assert parse_point("1/3, -2") == (THIRD, Fraction(-2))
        with pytest.raises(ValueError):
            parse_point("a,b")

    def test_dimension_checks(self):
        with pytest.raises(ValueError):
            Placement({"a": (0, 0), "b": (0,)})
        P = Placement({"a": (0, 0)})
        with pytest.raises(ValueError):
            P.check_covers(["a", "b"], 2)

    def test_half_cube(self):
        P = half_cube_placement(["110", "001"])
        assert P["110"] == (H, H, 0)
        assert P["001"] == (0, 0, H)

    def test_perturbation(self, line):
        F, P = line
        assert not P.distinct_mod_lattice()
        first = perturb_generic(P, 7, seed=3)
        assert first == perturb_generic(P, 7, seed=3)
        assert first.distinct_mod_lattice()
        for label in F.labels:
            for x, y in zip(first[label], P[label]):
                assert 0 <= x - y < 1
                assert 7 % (x - y).denominator == 0

    def test_perturbation_denominator(self, line):
        with pytest.raises(ValueError):
            perturb_generic(line[1], 1, seed=0)


class TestSimplicialSet:

    def test_origami(self, origami):
        F, P = origami
        X = build_X(F, P)
        assert X.chain_count(2) == 18
        assert X.count(0) == 4
        assert X.dimension == 2
        assert X.is_face_closed()
        assert len(X.maximal()) == 18

    def test_line(self, line):
        F, P = line
        X = build_X(F, P)
        assert X.chain_count(2) == 32
        assert X.count(2) == 16
        assert len(X.degenerate(2)) == 4
        assert all(len(X.provenance(s)) == 2 for s in X.simplices_of(2))

    def test_perturbed_line_keeps_chains(self, line):
        F, P = line
        X = build_X(F, perturb_generic(P, 1000, seed=0))
        assert X.chain_count(2) == 32

    def test_rejects_wrong_dimension(self):
        X = SimplicialSet(2)
        with pytest.raises(ValueError):
            X.add(TorusSimplex([(0, 0, 0)]))

    def test_equality_ignores_provenance(self, origami):
        F, P = origami
        X = build_X(F, P)
        copy = SimplicialSet(3)
        for s in X.all_simplices():
            copy.add(s)
        assert copy == X


class TestSupportSets:

    def test_origami_stars(self, origami):
        F, P = origami
        S = build_S(F, P)
        assert len(S["10"].of_dimension(1)) == 3
        assert len(S["01"].of_dimension(1)) == 3
        assert S["00"].dimension == 0
        assert support_equals_T(F, P)

    def test_support_images_against_chains(self, origami):
        F, P = origami
        supports = recursive_supports(F, P)
        assert support_equals_T(F, P, build_S(F, P))
        partial = {label: S for label, S in supports.items() if label != "11"}
        assert not support_equals_T(F, P, partial)
        extra = dict(supports)
        extra["00"] = SupportSet("00", P["00"], [(P["00"], translate(P["00"], (0, 0, 1)))])
        assert not support_equals_T(F, P, extra)
        assert images_of(supports) == frozenset(build_X(F, P).all_simplices())

    def test_origami_link_is_subdivided_k33(self, origami):
        F, P = origami
        S = build_S(F, P)["11"]
        segments = [s for s in S.link() if len(s) == 2]
        assert len(segments) == 18
        left = {tuple(a + m for a, m in zip(P["10"], step)) for step in [(0, 0, 0), (0, 0, 1), (1, 1, 0)]}
        right = {tuple(a + m for a, m in zip(P["01"], step)) for step in [(0, 0, 0), (1, 0, 0), (0, 1, 0)]}
        by_middle = {}
        for branch, middle in segments:
            by_middle.setdefault(middle, set()).add(branch)
        assert len(by_middle) == 9
        pairs = set()
        for ends in by_middle.values():
            assert len(ends) == 2
            assert len(ends & left) == 1 and len(ends & right) == 1
            pairs.add(frozenset(ends))
        assert len(pairs) == 9

    @pytest.mark.parametrize("point, expected", [((2, 3), 8), ((2, 3, 5), 48)])
    def test_hypercube(self, point, expected):
        F = point_koszul(point)
        P = half_cube_placement(list(F.labels))
        top = F.labels[0]
        S = build_S(F, P)[top]
        n = len(point)
        assert len(S.of_dimension(n)) == expected
        assert S.top_volume() == 1
        assert all(simplex_volume(s) == Fraction(1, expected) for s in S.of_dimension(n))

    def test_lifts(self, point):
        F, P = point
        S = build_S(F, P)
        assert S["11"].lifts((0, 0)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
        assert S["10"].lifts((THIRD, 0)) == [(THIRD, 0)]
        assert S["00"].lifts((THIRD, THIRD)) == []

    def test_covers(self, point):
        F, P = point
        S = build_S(F, P)["11"]
        assert S.covers([(H, H), (H, 0)])
        assert not S.covers([(0, 0), (1, 1)])
        assert S.contains_point((THIRD, Fraction(2, 3)))


class TestOverlapChecks:

    def test_hypercube_is_embedded(self, point):
        F, P = point
        assert is_immersed(build_X(F, P))
        assert is_embedded(build_X(F, P))

    def test_grid_is_embedded(self, dimer):
        F, P = dimer
        check = is_embedded(build_X(F, P))
        assert check.ok
        assert check.describe() == "ok"

    def test_crossing_witness(self, crossing):
        F, P = crossing
        check = is_embedded(build_X(F, P))
        assert not check
        assert len(check.witness) == 3
        assert "meets" in check.describe()

    def test_crossing_witness_against_segments(self, crossing):
        F, P = crossing
        first, second, m = is_embedded(build_X(F, P)).witness
        assert first.dimension == second.dimension == 1
        assert segments_cross(first.vertices, [translate(v, m) for v in second.vertices])

    def test_star_is_embedded(self, star):
        F, P = star
        X = build_X(F, P)
        assert X.count(1) == 4
        assert is_embedded(X)

    def test_long_edge_in_one_variable(self):
        F = FreeComplex(1, {"b": -1, "w": 0}, {("w", "b"): LaurentPoly(1, {(0,): 1, (2,): 1})})
        P = Placement({"b": (H,), "w": (0,)})
        check = is_immersed(build_X(F, P))
        assert not check
        assert check.witness == (TorusSimplex([(H,), (2,)]), (1,))

    def test_short_edges_in_one_variable(self):
        F = FreeComplex(1, {"b": -1, "w": 0}, {("w", "b"): LaurentPoly(1, {(0,): 1, (1,): 1})})
        P = Placement({"b": (H,), "w": (0,)})
        assert is_embedded(build_X(F, P))

    def test_degenerate_simplices_are_listed(self, line):
        F, P = line
        check = is_immersed(build_X(F, P))
        assert len([s for s in check.degenerate if s.dimension == 2]) == 4

    def test_threads_agree(self, point):
        F, P = point
        X = build_X(F, P)
        assert is_embedded(X, threads=2).ok == is_embedded(X, threads=1).ok
