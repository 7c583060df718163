import random
from fractions import Fraction

import pytest

from orthants import (
    Infeasible,
    LpProblem,
    Mat,
    Optimal,
    PositivityOutcome,
    Unbounded,
    Verdict,
    decide_positive,
    solve,
    verify_outcome,
)
from orthants.context import Context, EXACT, FLOAT
from orthants.frames import BangSystem, coordinate_pairs, system_from_normals
from orthants.lp import simplex_standard
from orthants.matrix import dot
from oracles import strictly_positive_solvable


def bang_from_matrix(rows, c, ctx=EXACT):
    """Wrap a raw coefficient matrix as a positivity problem."""
    return BangSystem(
        tuple((i, i) for i in range(len(rows))),
        Mat.from_rows(rows, ctx),
        tuple(ctx.coerce(x) for x in c),
    )


class TestSolve:
    def test_optimal(self):
        prob = LpProblem(
            (Fraction(1),), Mat.from_rows([[1]], EXACT), (Fraction(1),), (Fraction(0),)
        )
        res = solve(prob)
        assert isinstance(res, Optimal)
        assert res.x == (1,) and res.value == 1

    def test_infeasible_with_ray(self):
        prob = LpProblem(
            (Fraction(0),), Mat.from_rows([[1]], EXACT), (Fraction(-1),), (Fraction(0),)
        )
        res = solve(prob)
        assert isinstance(res, Infeasible)
        y = res.dual_ray
        # Farkas: y.A <= 0 on bounded columns, y.b - y.A.lb > 0
        assert y[0] * 1 <= 0 and y[0] * (-1) > 0

    def test_unbounded_with_ray(self):
        res = simplex_standard([], [], [Fraction(1)], EXACT)
        assert isinstance(res, Unbounded)
        assert res.primal_ray == (1,)

    def test_degenerate_redundant_rows(self):
        # duplicated constraint; phase 1 must drop or pivot out its artificial
        prob = LpProblem(
            (Fraction(1), Fraction(0)),
            Mat.from_rows([[1, 1], [1, 1]], EXACT),
            (Fraction(2), Fraction(2)),
            (Fraction(0), Fraction(0)),
        )
        res = solve(prob)
        assert isinstance(res, Optimal)
        assert res.value == 2

    def test_free_variables(self):
        # min x1 + x2 s.t. x1 + x2 = 5 with both free: optimum is -max(-f)
        prob = LpProblem(
            (Fraction(-1), Fraction(-1)),
            Mat.from_rows([[1, 1]], EXACT),
            (Fraction(5),),
            (None, None),
        )
        res = solve(prob)
        assert isinstance(res, Optimal)
        assert res.value == -5

    def test_lower_bound_shift(self):
        # max -x s.t. x = x, x >= 3  encoded as max -x, 0 rows
        prob = LpProblem(
            (Fraction(-1),),
            Mat.from_rows([[0]], EXACT),
            (Fraction(0),),
            (Fraction(3),),
        )
        res = solve(prob)
        assert isinstance(res, Optimal)
        assert res.x == (3,) and res.value == -3


QUAD = system_from_normals([(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))], EXACT)
ACUTE = system_from_normals(
    [(Fraction(0), Fraction(1)), (Fraction(-1), Fraction(-1)), (Fraction(3), Fraction(-1))],
    EXACT,
)
RIGHT = system_from_normals(
    [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)), (Fraction(-1), Fraction(-1))],
    EXACT,
)


class TestDecidePositive:
    def test_quadrant_witness(self):
        out = decide_positive(QUAD)
        assert out.verdict == Verdict.POSITIVE
        assert out.witness_t == (1, 1)
        assert verify_outcome(QUAD, out)

    def test_acute_triangle_witness(self):
        out = decide_positive(ACUTE)
        assert out.verdict == Verdict.POSITIVE
        assert out.witness_t == (Fraction(2, 3), Fraction(1, 4), Fraction(1, 12))
        assert verify_outcome(ACUTE, out)

    def test_right_triangle_certificate(self):
        out = decide_positive(RIGHT)
        assert out.verdict == Verdict.NOT_POSITIVE
        assert out.certificate_y == (0, 0, 1)
        assert verify_outcome(RIGHT, out)

    def test_inconsistent_certificate(self):
        system = bang_from_matrix([[1], [1]], [0, 1])
        out = decide_positive(system)
        assert out.verdict == Verdict.INCONSISTENT
        assert verify_outcome(system, out)
        y = out.certificate_y
        assert dot(y, system.Q.column(0)) == 0 and dot(y, system.c) < 0

    def test_verify_rejects_bad_witness(self):
        fake = PositivityOutcome(Verdict.POSITIVE, "exact", witness_t=(1, 0))
        assert not verify_outcome(QUAD, fake)

    def test_verify_accepts_stated_certificate(self):
        stated = PositivityOutcome(
            Verdict.NOT_POSITIVE, "exact", certificate_y=(0, 0, 1)
        )
        assert verify_outcome(RIGHT, stated)

    def test_witness_is_exact_not_just_small(self):
        out = decide_positive(ACUTE)
        residual = [
            dot(out.witness_t, ACUTE.Q.row(i)) - ACUTE.c[i] for i in range(ACUTE.Q.rows)
        ]
        assert all(r == 0 for r in residual)

    def test_float_backend_positive(self):
        sysf = system_from_normals([(1.0, 0.0), (0.0, 1.0)], FLOAT)
        out = decide_positive(sysf)
        assert out.verdict == Verdict.POSITIVE and not out.certified

    def test_float_marginal_flag(self):
        sysf = system_from_normals([(1.0, 0.0), (0.0, 1.0), (-1.0, -1.0)], FLOAT)
        out = decide_positive(sysf)
        assert out.verdict == Verdict.NOT_POSITIVE
        assert out.numeric_marginal  # eps* is exactly on the boundary


def random_bang(rng, max_rows=4, max_cols=6):
    rows = rng.randint(1, max_rows)
    cols = rng.randint(1, max_cols)
    Q = [
        [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)]
        for _ in range(rows)
    ]
    c = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rows)]
    return bang_from_matrix(Q, c)


class TestAgainstOracle:
    def test_soundness_of_refutations(self):
        # every refused system really has no positive solution
        rng = random.Random(2024)
        refused = 0
        for _ in range(200):
            system = random_bang(rng)
            out = decide_positive(system)
            assert verify_outcome(system, out)
            if out.verdict != Verdict.POSITIVE:
                refused += 1
                assert not strictly_positive_solvable(
                    [list(r) for r in system.Q.data], list(system.c)
                )
        assert refused > 20  # the sample genuinely exercises refutations

    def test_completeness_against_fourier_motzkin(self):
        rng = random.Random(77)
        from conftest import random_needles_2d

        for _ in range(60):
            m = rng.randint(1, 5)
            if rng.random() < 0.5:
                needles = random_needles_2d(rng, m)
            else:
                needles = []
                while len(needles) < m:
                    v = tuple(Fraction(rng.randint(-3, 3)) for _ in range(3))
                    if any(x != 0 for x in v):
                        needles.append(v)
            system = system_from_normals(needles, EXACT)
            out = decide_positive(system)
            expected = strictly_positive_solvable(
                [list(r) for r in system.Q.data], list(system.c)
            )
            assert out.is_positive == expected

    def test_invariance_under_column_scaling(self):
        rng = random.Random(5)
        for _ in range(40):
            system = random_bang(rng)
            out = decide_positive(system)
            scales = [
                Fraction(rng.randint(1, 5), rng.randint(1, 5))
                for _ in range(system.Q.cols)
            ]
            scaled = bang_from_matrix(
                [[x * scales[j] for j, x in enumerate(row)] for row in system.Q.data],
                list(system.c),
            )
            assert decide_positive(scaled).verdict == out.verdict

    def test_invariance_under_invertible_row_maps(self):
        rng = random.Random(6)
        from orthants.matrix import det as mat_det

        count = 0
        while count < 25:
            system = random_bang(rng, max_rows=3, max_cols=4)
            r = system.Q.rows
            E = Mat.from_rows(
                [[Fraction(rng.randint(-3, 3)) for _ in range(r)] for _ in range(r)],
                EXACT,
            )
            if mat_det(E) == 0:
                continue
            count += 1
            mapped = bang_from_matrix(
                E.matmul(system.Q).data, E.matvec(list(system.c))
            )
            assert decide_positive(mapped).verdict == decide_positive(system).verdict
