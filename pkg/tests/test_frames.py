import random
from fractions import Fraction

from orthants import (
    Mat,
    Polyhedron,
    build,
    decide_positive,
    generate_cross_polytope,
    generate_cube,
    generate_max_rank_orthant,
    is_consistent,
    poly_rank,
    rank,
)
from orthants.context import EXACT, FLOAT
from orthants.frames import coordinate_pairs, system_from_normals
from oracles import solve_any
from conftest import random_needles_2d, rational_rotation


def poly_from_normals(normals, ctx=EXACT):
    return Polyhedron.from_rows(normals, [-1] * len(normals), ctx)


class TestBuild:
    def test_pair_order(self):
        assert coordinate_pairs(3) == ((0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2))

    def test_quadrant(self):
        B = build(poly_from_normals([(1, 0), (0, 1)]))
        assert [list(r) for r in B.Q.data] == [[1, 0], [0, 1], [0, 0]]
        assert list(B.c) == [1, 1, 0]

    def test_acute_triangle_entries(self):
        B = build(poly_from_normals([(0, 1), (-1, -1), (3, -1)]))
        assert [list(r) for r in B.Q.data] == [[0, 1, 9], [1, 1, 1], [0, 1, -3]]

    def test_max_rank_family_dim2_matrix(self):
        B = build(generate_max_rank_orthant(2))
        cols = [B.Q.column(j) for j in range(5)]
        assert cols == [(1, 1, -1), (1, 1, -1), (1, 1, 1), (1, 0, 0), (0, 1, 0)]

    def test_row_count(self):
        for n in (2, 3, 4):
            B = build(generate_cube(n))
            assert B.Q.rows == n * (n + 1) // 2


class TestRank:
    def test_cube_rank_is_dimension(self):
        for n in (2, 3, 4):
            assert poly_rank(generate_cube(n)) == n

    def test_quadrant(self):
        assert poly_rank(poly_from_normals([(1, 0), (0, 1)])) == 2

    def test_max_rank_family(self):
        for n in (2, 3):
            assert poly_rank(generate_max_rank_orthant(n)) == n * (n + 1) // 2

    def test_rank_at_least_dimension(self):
        rng = random.Random(3)
        for _ in range(25):
            normals = random_needles_2d(rng, rng.randint(2, 6))
            P = poly_from_normals(normals)
            if rank(P.A) == 2:
                assert poly_rank(P) >= 2


class TestConsistency:
    def test_quadrant(self):
        assert is_consistent(poly_from_normals([(1, 0), (0, 1)]))

    def test_right_triangle_consistent_but_not_positive(self):
        P = poly_from_normals([(1, 0), (0, 1), (-1, -1)])
        assert is_consistent(P)
        assert not decide_positive(build(P)).is_positive

    def test_matches_direct_solving(self):
        rng = random.Random(9)
        for _ in range(40):
            normals = random_needles_2d(rng, rng.randint(2, 5))
            P = poly_from_normals(normals)
            B = build(P)
            direct = solve_any([list(r) for r in B.Q.data], list(B.c))
            assert is_consistent(P) == (direct is not None)

    def test_named_triple(self):
        P = poly_from_normals([(1, 0), (-1, 3), (-1, -3)])
        B = build(P)
        direct = solve_any([list(r) for r in B.Q.data], list(B.c))
        assert is_consistent(P) == (direct is not None)


class TestInvariance:
    def test_row_scaling_scales_columns_quadratically(self):
        rng = random.Random(21)
        for _ in range(20):
            normals = random_needles_2d(rng, rng.randint(2, 5))
            P = poly_from_normals(normals)
            B = build(P)
            lam = Fraction(rng.randint(1, 5), rng.randint(1, 5))
            i = rng.randrange(len(normals))
            scaled = list(normals)
            scaled[i] = tuple(lam * x for x in scaled[i])
            B2 = build(poly_from_normals(scaled))
            assert B2.Q.column(i) == tuple(lam * lam * x for x in B.Q.column(i))
            assert poly_rank(poly_from_normals(scaled)) == poly_rank(P)
            assert is_consistent(poly_from_normals(scaled)) == is_consistent(P)
            assert (
                decide_positive(B2).is_positive == decide_positive(B).is_positive
            )

    def test_exact_rotation_preserves_verdict(self):
        rng = random.Random(22)
        for _ in range(15):
            normals = random_needles_2d(rng, rng.randint(2, 5))
            U = rational_rotation(rng, 2)
            rotated = [tuple(U.matvec(list(v))) for v in normals]
            a = decide_positive(build(poly_from_normals(normals)))
            b = decide_positive(build(poly_from_normals(rotated)))
            assert a.is_positive == b.is_positive

    def test_float_rotation_keeps_solutions(self):
        rng = random.Random(23)
        import math

        normals = [(1.0, 0.0), (0.0, 1.0), (-1.0, -2.0), (2.0, -1.0)]
        base = decide_positive(system_from_normals(normals, FLOAT))
        for _ in range(10):
            a = rng.uniform(0, math.pi)
            R = [[math.cos(a), -math.sin(a)], [math.sin(a), math.cos(a)]]
            rotated = [
                (R[0][0] * x + R[0][1] * y, R[1][0] * x + R[1][1] * y)
                for x, y in normals
            ]
            out = decide_positive(system_from_normals(rotated, FLOAT))
            assert out.is_positive == base.is_positive
            if out.is_positive:
                # the base witness still solves the rotated system within tol
                sys_rot = system_from_normals(rotated, FLOAT)
                for i in range(sys_rot.Q.rows):
                    resid = (
                        sum(
                            sys_rot.Q.data[i][j] * base.witness_t[j]
                            for j in range(len(normals))
                        )
                        - sys_rot.c[i]
                    )
                    assert abs(resid) < 1e-7

    def test_witness_implies_consistent(self):
        rng = random.Random(24)
        for _ in range(30):
            normals = random_needles_2d(rng, rng.randint(2, 6))
            P = poly_from_normals(normals)
            if decide_positive(build(P)).is_positive:
                assert is_consistent(P)


class TestCrossPolytope:
    def test_diagonal_rows_force_unit_sum(self):
        for n in (2, 3):
            P = generate_cross_polytope(n)
            B = build(P)
            out = decide_positive(B)
            assert out.is_positive
            assert sum(out.witness_t) == 1
