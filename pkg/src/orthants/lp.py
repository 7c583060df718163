"""Exact linear programming with certificates.

The engine is a dense two-phase simplex over the scalar backend, pivoting
by Bland's rule (smallest eligible index enters, ratio ties broken by the
smallest basic index), which guarantees termination in exact arithmetic.
Every outcome carries an exactly checkable object: an optimal point with
its dual vector, a Farkas ray proving infeasibility, or an improving ray
proving unboundedness.

On top of the engine sits the strict-positivity decision for the facet
weighting system Q t = c: verdict Positive comes with a witness t > 0,
verdicts NotPositive/Inconsistent come with a refutation vector y such
that yQ >= 0, y.c <= 0 and (yQ, y.c) != 0.  No strictly positive t can
then satisfy Q t = c, since 0 >= y.c = (yQ).t would be a sum of
nonnegative terms, positive unless yQ = 0, in which case y.c = 0 as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .context import Context, Scalar
from .errors import OrthantsError, ShapeMismatch
from .matrix import Mat, dot, solve_linear

_MAX_PIVOTS = 200_000


# ---------------------------------------------------------------------------
# problem and outcome containers


@dataclass(frozen=True)
class LpProblem:
    """Maximize objective . x  subject to  eq_lhs x = eq_rhs  and bounds.

    ``lower_bounds[j]`` is a scalar lower bound for variable j, or None for
    a free variable.  There are no upper bounds; encode them with extra
    variables.
    """

    objective: tuple
    eq_lhs: Mat
    eq_rhs: tuple
    lower_bounds: tuple

    def __post_init__(self):
        n = self.eq_lhs.cols
        if len(self.objective) != n or len(self.lower_bounds) != n:
            raise ShapeMismatch("objective/bounds length vs column count")
        if len(self.eq_rhs) != self.eq_lhs.rows:
            raise ShapeMismatch("rhs length vs row count")


@dataclass(frozen=True)
class Optimal:
    x: tuple
    value: Scalar
    dual: tuple


@dataclass(frozen=True)
class Infeasible:
    dual_ray: tuple


@dataclass(frozen=True)
class Unbounded:
    primal_ray: tuple


class Verdict:
    POSITIVE = "Positive"
    NOT_POSITIVE = "NotPositive"
    INCONSISTENT = "Inconsistent"


@dataclass(frozen=True)
class PositivityOutcome:
    """Result of the strict-positivity decision for Q t = c."""

    verdict: str
    backend: str
    witness_t: Optional[tuple] = None
    certificate_y: Optional[tuple] = None
    numeric_marginal: bool = False
    eps_star: Optional[Scalar] = None

    @property
    def is_positive(self) -> bool:
        return self.verdict == Verdict.POSITIVE

    @property
    def certified(self) -> bool:
        return self.backend == "exact"


# ---------------------------------------------------------------------------
# the simplex engine (standard form: maximize c.x, A x = b, x >= 0)


class _Tableau:
    def __init__(self, A_rows, b, ctx: Context):
        self.ctx = ctx
        self.m = len(A_rows)
        self.n = len(A_rows[0]) if self.m else (len(b) and 0)
        self.flip = []
        rows = []
        for i in range(self.m):
            if ctx.sign(b[i]) < 0:
                rows.append([-x for x in A_rows[i]] + [-b[i]])
                self.flip.append(-1)
            else:
                rows.append(list(A_rows[i]) + [b[i]])
                self.flip.append(1)
        # pristine flipped copy for dual solves at termination
        self.A0 = [r[:-1] for r in rows]
        self.b0 = [r[-1] for r in rows]
        # working tableau: [A' | I | b']
        self.T = [
            row[:-1] + [ctx.one() if k == i else ctx.zero() for k in range(self.m)] + [row[-1]]
            for i, row in enumerate(rows)
        ]
        self.basis = [self.n + i for i in range(self.m)]
        self.row_ids = list(range(self.m))  # original row index per tableau row

    @property
    def width(self):
        return self.n + self.m

    def zline(self, costs):
        """Reduced-cost row plus negated objective value for the current basis."""
        ctx = self.ctx
        z = list(costs) + [ctx.zero()]
        for i, bi in enumerate(self.basis):
            cb = costs[bi]
            if ctx.sign(cb) != 0:
                trow = self.T[i]
                for j in range(self.width + 1):
                    z[j] -= cb * trow[j]
        return z

    def pivot(self, r, e, z):
        ctx = self.ctx
        trow = self.T[r]
        p = trow[e]
        inv = ctx.one() / p
        self.T[r] = trow = [x * inv for x in trow]
        for i in range(len(self.T)):
            if i == r:
                continue
            f = self.T[i][e]
            if ctx.sign(f) != 0:
                row = self.T[i]
                self.T[i] = [x - f * y for x, y in zip(row, trow)]
        f = z[e]
        if ctx.sign(f) != 0:
            for j in range(self.width + 1):
                z[j] -= f * trow[j]
        self.basis[r] = e

    def bland(self, costs, allowed_width):
        """Run Bland pivoting; return the final z-line, or an entering column
        index (as ('unbounded', e, z)) when no ratio limits the step."""
        ctx = self.ctx
        z = self.zline(costs)
        for _ in range(_MAX_PIVOTS):
            enter = None
            for j in range(allowed_width):
                if ctx.sign(z[j]) > 0:
                    enter = j
                    break
            if enter is None:
                return ("optimal", z)
            leave = None
            best = None
            for i in range(len(self.T)):
                a = self.T[i][enter]
                if ctx.sign(a) > 0:
                    ratio = self.T[i][-1] / a
                    if best is None or ctx.lt(ratio, best) or (
                        ctx.eq(ratio, best) and self.basis[i] < self.basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave is None:
                return ("unbounded", enter, z)
            self.pivot(leave, enter, z)
        raise OrthantsError("simplex pivot limit exceeded")

    def basis_dual(self, costs):
        """Solve A_B^T y = c_B for the current basis over the surviving rows."""
        ctx = self.ctx
        k = len(self.T)
        if k == 0:
            return []
        cols = []
        for bi in self.basis:
            if bi < self.n:
                cols.append([self.A0[rid][bi] for rid in self.row_ids])
            else:
                cols.append(
                    [ctx.one() if rid == bi - self.n else ctx.zero() for rid in self.row_ids]
                )
        # rows of the transposed basis matrix are the basis columns
        y = solve_linear(Mat.from_rows(cols, ctx), [costs[bi] for bi in self.basis])
        if y is None:
            raise OrthantsError("singular basis; this should be impossible")
        return y

    def expand_dual(self, y_surviving, total_rows):
        """Undo row flips and re-insert zeros for dropped redundant rows."""
        ctx = self.ctx
        out = [ctx.zero()] * total_rows
        for pos, rid in enumerate(self.row_ids):
            out[rid] = y_surviving[pos] * self.flip[rid]
        return out


def simplex_standard(A_rows: Sequence[Sequence[Scalar]], b: Sequence[Scalar],
                     c: Sequence[Scalar], ctx: Context):
    """Maximize c.x over {x >= 0 : A x = b}; returns Optimal/Infeasible/Unbounded."""
    m = len(A_rows)
    n = len(c)
    tab = _Tableau(A_rows, b, ctx)

    if m:
        phase1 = [ctx.zero()] * n + [-ctx.one()] * m
        res = tab.bland(phase1, tab.width)
        if res[0] != "optimal":
            raise OrthantsError("phase-1 objective cannot be unbounded")
        z = res[1]
        obj = -z[-1]
        if ctx.sign(obj) < 0:
            y = tab.basis_dual(phase1)
            ray = tab.expand_dual([-v for v in y], m)
            return Infeasible(tuple(ray))
        # drive leftover artificials out of the basis, dropping redundant rows
        drop = []
        for i in range(len(tab.T)):
            if tab.basis[i] >= n:
                enter = next(
                    (j for j in range(n) if ctx.sign(tab.T[i][j]) != 0), None
                )
                if enter is None:
                    drop.append(i)
                else:
                    tab.pivot(i, enter, z)
        for i in sorted(drop, reverse=True):
            del tab.T[i]
            del tab.basis[i]
            del tab.row_ids[i]

    phase2 = list(c) + [ctx.zero()] * m
    res = tab.bland(phase2, n)
    if res[0] == "unbounded":
        enter = res[1]
        ray = [ctx.zero()] * n
        ray[enter] = ctx.one()
        for i, bi in enumerate(tab.basis):
            if bi < n:
                ray[bi] = -tab.T[i][enter]
        return Unbounded(tuple(ray))
    z = res[1]
    x = [ctx.zero()] * n
    for i, bi in enumerate(tab.basis):
        if bi < n:
            x[bi] = tab.T[i][-1]
    value = -z[-1]
    y = tab.expand_dual(tab.basis_dual(phase2), m) if m else []
    if ctx.is_exact:
        _check_exact(A_rows, b, x)
    return Optimal(tuple(x), value, tuple(y))


def _check_exact(A_rows, b, x):
    for row, bi in zip(A_rows, b):
        if dot(row, x) != bi:
            raise OrthantsError("simplex returned an inexact point")
    if any(v < 0 for v in x):
        raise OrthantsError("simplex returned an infeasible point")


# ---------------------------------------------------------------------------
# general problems with free variables and lower bounds


def solve(prob: LpProblem):
    """Solve a general LpProblem by shifting bounds and splitting free variables."""
    ctx = prob.eq_lhs.ctx
    n = prob.eq_lhs.cols
    shift = [lb if lb is not None else ctx.zero() for lb in prob.lower_bounds]

    cols = []  # (var_index, sign) per standard-form column
    for j in range(n):
        cols.append((j, 1))
        if prob.lower_bounds[j] is None:
            cols.append((j, -1))

    A_rows = []
    for i in range(prob.eq_lhs.rows):
        row = prob.eq_lhs.row(i)
        A_rows.append([row[j] * s for j, s in cols])
    b = [
        prob.eq_rhs[i] - dot(prob.eq_lhs.row(i), shift)
        for i in range(prob.eq_lhs.rows)
    ]
    c = [prob.objective[j] * s for j, s in cols]
    offset = dot(prob.objective, shift)

    res = simplex_standard(A_rows, b, c, ctx)
    if isinstance(res, Infeasible):
        return res
    if isinstance(res, Unbounded):
        ray = [ctx.zero()] * n
        for (j, s), v in zip(cols, res.primal_ray):
            ray[j] += s * v
        return Unbounded(tuple(ray))
    x = list(shift)
    for (j, s), v in zip(cols, res.x):
        x[j] += s * v
    return Optimal(tuple(x), res.value + offset, res.dual)


# ---------------------------------------------------------------------------
# strict positivity of Q t = c


def decide_positive(system) -> PositivityOutcome:
    """Decide whether Q t = c admits a strictly positive solution.

    Auxiliary program: maximize eps subject to Q t = c, t_i >= eps, eps <= 1.
    Substituting t = eps . 1 + s and eps = 1 - w turns it into the standard
    form  max -w : Q s - (Q 1) w = c - Q 1, (s, w) >= 0.  The optimum eps*
    is positive exactly when a positive solution exists; the dual vector at
    the optimum is the refutation certificate otherwise.
    """
    Q: Mat = system.Q
    c = list(system.c)
    ctx = Q.ctx
    m = Q.cols
    q1 = [sum(row) for row in Q.data]
    A_rows = [list(Q.row(i)) + [-q1[i]] for i in range(Q.rows)]
    b = [c[i] - q1[i] for i in range(Q.rows)]
    obj = [ctx.zero()] * m + [-ctx.one()]

    res = simplex_standard(A_rows, b, obj, ctx)
    if isinstance(res, Unbounded):
        raise OrthantsError("auxiliary program is bounded by construction")
    if isinstance(res, Infeasible):
        y = _normalize_certificate([-v for v in res.dual_ray], ctx)
        return PositivityOutcome(
            Verdict.INCONSISTENT, ctx.backend, certificate_y=tuple(y)
        )
    eps = ctx.one() + res.value
    s = ctx.sign(eps)
    if s > 0:
        t = [res.x[i] + eps for i in range(m)]
        return PositivityOutcome(
            Verdict.POSITIVE, ctx.backend, witness_t=tuple(t), eps_star=eps
        )
    y = _normalize_certificate(list(res.dual), ctx)
    marginal = (not ctx.is_exact) and s == 0
    return PositivityOutcome(
        Verdict.NOT_POSITIVE,
        ctx.backend,
        certificate_y=tuple(y),
        numeric_marginal=marginal,
        eps_star=eps,
    )


def verify_outcome(system, outcome: PositivityOutcome) -> bool:
    """Re-check an outcome by direct arithmetic, trusting nothing from the solver."""
    Q: Mat = system.Q
    c = list(system.c)
    ctx = Q.ctx
    if outcome.verdict == Verdict.POSITIVE:
        t = outcome.witness_t
        if t is None or len(t) != Q.cols:
            return False
        if any(ctx.sign(v) <= 0 for v in t):
            return False
        residual = [dot(Q.row(i), t) - c[i] for i in range(Q.rows)]
        return all(ctx.is_zero(r) for r in residual)
    y = outcome.certificate_y
    if y is None or len(y) != Q.rows:
        return False
    yq = [dot(y, Q.column(j)) for j in range(Q.cols)]
    yc = dot(y, c)
    if any(ctx.sign(v) < 0 for v in yq) or ctx.sign(yc) > 0:
        return False
    return any(ctx.sign(v) > 0 for v in yq) or ctx.sign(yc) < 0


def _normalize_certificate(vec, ctx: Context):
    """Scale an exact certificate to an integer vector with content 1."""
    if not ctx.is_exact or not vec:
        return list(vec)
    den = 1
    for v in vec:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return [Fraction(v) for v in ints]
