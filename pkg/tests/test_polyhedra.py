import random
from fractions import Fraction

import pytest

from orthants import (
    Polyhedron,
    functional_min,
    generate_cross_polytope,
    generate_cube,
    generate_max_rank_orthant,
    generate_simplex,
    interior_point,
    is_bounded,
    is_nondegenerate,
    recession_rays,
    remove_redundant,
    vertices,
)
from orthants.context import EXACT, FLOAT
from orthants.errors import (
    DimensionTooLarge,
    EmptyOrLowerDimensional,
    ShapeMismatch,
)
from orthants.matrix import dot
from conftest import rand_frac

SQUARE = Polyhedron.from_rows(
    [[1, 0], [0, 1], [-1, 0], [0, -1]], [0, 0, -1, -1], EXACT
)
QUADRANT = Polyhedron.from_rows([[1, 0], [0, 1]], [0, 0], EXACT)


class TestNondegeneracy:
    def test_half_plane(self):
        P = Polyhedron.from_rows([[1, 0]], [0], EXACT)
        assert not is_nondegenerate(P)

    def test_square(self):
        assert is_nondegenerate(SQUARE)

    def test_strip_contains_a_line(self):
        strip = Polyhedron.from_rows([[1, 0], [-1, 0]], [0, -1], EXACT)
        assert not is_nondegenerate(strip)

    def test_zero_row_rejected(self):
        with pytest.raises(ShapeMismatch):
            Polyhedron.from_rows([[0, 0]], [0], EXACT)


class TestRemoveRedundant:
    def test_square_plus_slack_row(self):
        P = Polyhedron.from_rows(
            [[1, 0], [0, 1], [-1, 0], [0, -1], [1, 0]],
            [0, 0, -1, -1, -5],
            EXACT,
        )
        red = remove_redundant(P)
        assert red.nfacets == 4 and red.minimal

    def test_minimal_triangle_is_fixed(self):
        tri = Polyhedron.from_rows([[0, 1], [-1, -1], [3, -1]], [0, -4, 0], EXACT)
        red = remove_redundant(tri)
        assert red.A.data == tri.A.data and red.b == tri.b

    def test_duplicate_inequality_collapses(self):
        P = Polyhedron.from_rows(
            [[1, 0], [2, 0], [0, 1], [-1, 0], [0, -1]],
            [0, 0, 0, -1, -1],
            EXACT,
        )
        red = remove_redundant(P)
        assert red.nfacets == 4

    def test_duplicate_keeps_tightest_offset(self):
        P = Polyhedron.from_rows(
            [[1, 0], [2, 0], [0, 1], [-1, 0], [0, -1]],
            [0, 1, 0, -1, -1],  # second row says x >= 1/2: tighter
            EXACT,
        )
        red = remove_redundant(P)
        mins = functional_min(red, [1, 0])
        assert mins == Fraction(1, 2)

    def test_idempotent(self):
        P = Polyhedron.from_rows(
            [[1, 0], [0, 1], [-1, 0], [0, -1], [1, 1]],
            [0, 0, -1, -1, -3],
            EXACT,
        )
        once = remove_redundant(P)
        twice = remove_redundant(once)
        assert once.A.data == twice.A.data and once.b == twice.b

    def test_point_set_preserved(self):
        rng = random.Random(11)
        P = Polyhedron.from_rows(
            [[1, 0], [0, 1], [-1, 0], [0, -1], [1, 1], [-1, 2]],
            [0, 0, -2, -2, -1, -9],
            EXACT,
        )
        red = remove_redundant(P)
        for _ in range(100):
            x = [rand_frac(rng, -3, 3, 4), rand_frac(rng, -3, 3, 4)]
            assert P.contains(x) == red.contains(x)

    def test_empty_system_raises(self):
        empty = Polyhedron.from_rows([[1], [-1]], [1, 0], EXACT)
        with pytest.raises(EmptyOrLowerDimensional):
            remove_redundant(empty)

    def test_lower_dimensional_raises(self):
        flat = Polyhedron.from_rows([[1, 0], [-1, 0]], [0, 0], EXACT)
        with pytest.raises(EmptyOrLowerDimensional):
            remove_redundant(flat)


class TestInterior:
    def test_square_interior(self):
        x = interior_point(SQUARE)
        assert x is not None and SQUARE.contains(x)

    def test_empty_none(self):
        empty = Polyhedron.from_rows([[1], [-1]], [1, 0], EXACT)
        assert interior_point(empty) is None


class TestRecession:
    def test_square_bounded(self):
        assert recession_rays(SQUARE).is_trivial and is_bounded(SQUARE)

    def test_quadrant_rays(self):
        rays = recession_rays(QUADRANT).rays
        assert sorted(rays) == [(0, 1), (1, 0)]

    def test_corner_rays(self):
        corner = Polyhedron.from_rows([[1, -1], [1, 1]], [-1, -1], EXACT)
        rays = recession_rays(corner).rays
        assert sorted(rays) == [(1, -1), (1, 1)]
        for d in rays:
            assert all(dot(corner.A.row(i), d) >= 0 for i in range(2))

    def test_dimension_guard(self):
        n = 7
        rows = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
        P = Polyhedron.from_rows(rows, [0] * n, EXACT)
        with pytest.raises(DimensionTooLarge):
            recession_rays(P)

    def test_segment_rays_1d(self):
        seg = Polyhedron.from_rows([[1], [-1]], [0, -1], EXACT)
        assert recession_rays(seg).is_trivial
        half = Polyhedron.from_rows([[1]], [0], EXACT)
        assert recession_rays(half).rays == ((1,),)


class TestFunctionalMin:
    def test_square_examples(self):
        assert functional_min(SQUARE, [1, 0]) == 0
        assert functional_min(SQUARE, [1, 1]) == 0

    def test_unbounded(self):
        assert functional_min(QUADRANT, [-1, 0]) is None


class TestGenerators:
    def test_cube(self):
        P = generate_cube(2)
        assert P.nfacets == 4 and is_nondegenerate(P)
        assert sorted(vertices(P)) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_cross_polytope_count(self):
        assert generate_cross_polytope(3).nfacets == 8

    def test_max_rank_family_dim2_rows(self):
        P = generate_max_rank_orthant(2)
        assert [list(r) for r in P.A.data] == [
            [1, -1],
            [-1, 1],
            [1, 1],
            [1, 0],
            [0, 1],
        ]
        assert list(P.b) == [-1, -1, -1, Fraction(-2, 3), Fraction(-2, 3)]

    def test_max_rank_family_is_minimal(self):
        for n in (2, 3):
            P = generate_max_rank_orthant(n)
            red = remove_redundant(P)
            assert red.nfacets == P.nfacets

    def test_simplex_exact_when_pivots_square(self):
        P = generate_simplex([3, 4])
        assert P.ctx.is_exact and P.nfacets == 2

    def test_simplex_metric_reproduced(self):
        P = generate_simplex([1, 2, 2])
        vs = vertices(P)
        assert len(vs) == 3
        d2s = sorted(
            sum((a - b) ** 2 for a, b in zip(vs[i], vs[j]))
            for i in range(3)
            for j in range(i + 1, 3)
        )
        expected = sorted([1 + 4, 1 + 4, 4 + 4])
        assert all(abs(a - e) < 1e-9 for a, e in zip(d2s, expected))

    def test_simplex_rejects_bad_alphas(self):
        with pytest.raises(ShapeMismatch):
            generate_simplex([1, -1])
