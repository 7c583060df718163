"""H-representation polyhedra and their basic geometry.

A polyhedron is the solution set of ``A x >= b`` with no zero row in A.
Nondegeneracy (full column rank of A, equivalently: the set contains no
line) is the standing assumption of every decision procedure here, since a
degenerate set can never sit inside a nonnegative orthant.

Emptiness and full-dimensionality are detected with one interior-point
linear program instead of any vertex enumeration; redundancy removal runs
one LP per inequality.  Recession rays are found by enumerating the
(n-1)-subsets of rows, which is entirely adequate at desk scale and easy
to certify.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from itertools import combinations
from typing import Optional, Sequence

from .context import Context, Scalar
from .errors import (
    DegeneratePolyhedron,
    DimensionTooLarge,
    EmptyOrLowerDimensional,
    EmptyPolyhedron,
    ShapeMismatch,
)
from .matrix import Mat, dot, kernel_basis, rank, solve_linear
from . import lp

_RAY_DIM_GUARD = 6


@dataclass(frozen=True)
class Polyhedron:
    """A x >= b in R^n; rows of A are inward facet normals."""

    A: Mat
    b: tuple
    minimal: bool = False

    @classmethod
    def from_rows(cls, normals, offsets, ctx: Context, minimal: bool = False):
        A = Mat.from_rows(normals, ctx)
        b = tuple(ctx.coerce(x) for x in offsets)
        if A.rows < 1 or A.cols < 1:
            raise ShapeMismatch("need at least one row and one dimension")
        if len(b) != A.rows:
            raise ShapeMismatch("offset count vs row count")
        for row in A.data:
            if all(ctx.sign(x) == 0 for x in row):
                raise ShapeMismatch("zero row in facet matrix")
        return cls(A, b, minimal)

    @property
    def ctx(self) -> Context:
        return self.A.ctx

    @property
    def dim(self) -> int:
        return self.A.cols

    @property
    def nfacets(self) -> int:
        return self.A.rows

    def contains(self, point: Sequence[Scalar]) -> bool:
        ctx = self.ctx
        return all(
            ctx.sign(dot(self.A.row(i), point) - self.b[i]) >= 0
            for i in range(self.nfacets)
        )

    def subsystem(self, row_idx: Sequence[int]) -> "Polyhedron":
        rows = [self.A.row(i) for i in row_idx]
        offs = [self.b[i] for i in row_idx]
        return Polyhedron.from_rows(rows, offs, self.ctx)


@dataclass(frozen=True)
class Cone:
    """Finitely generated cone, stored by its extreme rays."""

    dim: int
    rays: tuple
    ctx: Context

    @property
    def is_trivial(self) -> bool:
        return not self.rays


def is_nondegenerate(P: Polyhedron) -> bool:
    return rank(P.A) == P.dim


def require_nondegenerate(P: Polyhedron) -> None:
    if not is_nondegenerate(P):
        raise DegeneratePolyhedron(
            f"facet matrix has rank < {P.dim}; the set contains a line"
        )


# ---------------------------------------------------------------------------
# interior detection and redundancy removal


def interior_point(P: Polyhedron):
    """A point with A x > b strictly, or None if none exists.

    Solves max eps : A x >= b + eps 1, eps <= 1.  A positive optimum
    certifies full-dimensional nonemptiness; otherwise the system is empty
    or lies in a hyperplane.
    """
    ctx = P.ctx
    n, m = P.dim, P.nfacets
    # variables: x (free), w >= 0 with eps = 1 - w, slacks s >= 0
    rows = []
    for i in range(m):
        rows.append(
            list(P.A.row(i))
            + [ctx.one()]
            + [-ctx.one() if k == i else ctx.zero() for k in range(m)]
        )
    prob = lp.LpProblem(
        objective=tuple([ctx.zero()] * n + [-ctx.one()] + [ctx.zero()] * m),
        eq_lhs=Mat.from_rows(rows, ctx),
        eq_rhs=tuple(P.b[i] + ctx.one() for i in range(m)),
        lower_bounds=tuple([None] * n + [ctx.zero()] * (m + 1)),
    )
    res = lp.solve(prob)
    if not isinstance(res, lp.Optimal):
        raise RuntimeError("interior LP is feasible and bounded by construction")
    eps = ctx.one() + res.value
    if ctx.sign(eps) <= 0:
        return None
    return tuple(res.x[:n])


def _functional_min_rows(normals, offsets, f, ctx):
    """Minimum of f.x over {A x >= b}; None when unbounded below."""
    m = len(normals)
    n = len(f)
    if m == 0:
        if all(ctx.sign(v) == 0 for v in f):
            return ctx.zero()
        return None
    rows = [
        list(normals[i]) + [-ctx.one() if k == i else ctx.zero() for k in range(m)]
        for i in range(m)
    ]
    prob = lp.LpProblem(
        objective=tuple([-v for v in f] + [ctx.zero()] * m),
        eq_lhs=Mat.from_rows(rows, ctx),
        eq_rhs=tuple(offsets),
        lower_bounds=tuple([None] * n + [ctx.zero()] * m),
    )
    res = lp.solve(prob)
    if isinstance(res, lp.Infeasible):
        raise EmptyPolyhedron("no point satisfies the system")
    if isinstance(res, lp.Unbounded):
        return None
    return -res.value


def functional_min(P: Polyhedron, f: Sequence[Scalar]):
    """Exact minimum of f.x over P, or None when the functional is unbounded below."""
    ctx = P.ctx
    return _functional_min_rows(
        [P.A.row(i) for i in range(P.nfacets)],
        list(P.b),
        [ctx.coerce(v) for v in f],
        ctx,
    )


def _positive_proportional(u, v, ctx) -> Optional[Scalar]:
    """Return lam > 0 with v = lam * u, or None."""
    k = next((i for i in range(len(u)) if ctx.sign(u[i]) != 0), None)
    if k is None or ctx.sign(v[k]) == 0:
        return None
    lam = v[k] / u[k]
    if ctx.sign(lam) <= 0:
        return None
    for a, c in zip(u, v):
        if not ctx.is_zero(c - lam * a):
            return None
    return lam


def remove_redundant(P: Polyhedron) -> Polyhedron:
    """The minimal subsystem defining the same full-dimensional set.

    Duplicated directions are collapsed to their tightest offset first, so
    the per-row LP test never sees the classic twin-row blind spot (two
    copies of one inequality shadowing each other).  Then row i is kept
    exactly when minimizing its normal over the remaining rows dips below
    b_i (or is unbounded).
    """
    ctx = P.ctx
    if interior_point(P) is None:
        raise EmptyOrLowerDimensional(
            "system has no interior point; cannot normalize to a minimal form"
        )
    kept = []
    for i in range(P.nfacets):
        row_i, b_i = P.A.row(i), P.b[i]
        merged = False
        for pos, (row_k, b_k, _) in enumerate(kept):
            lam = _positive_proportional(row_k, row_i, ctx)
            if lam is not None:
                # same halfspace direction; keep the tighter offset
                if ctx.lt(b_k, b_i / lam):
                    kept[pos] = (row_k, b_i / lam, kept[pos][2])
                merged = True
                break
        if not merged:
            kept.append((row_i, b_i, i))

    result = []
    for j, (row_j, b_j, orig) in enumerate(kept):
        others = [kept[k] for k in range(len(kept)) if k != j]
        val = _functional_min_rows(
            [r for r, _, _ in others], [o for _, o, _ in others], list(row_j), ctx
        )
        if val is None or ctx.lt(val, b_j):
            result.append((row_j, b_j))
    if not result:
        raise EmptyOrLowerDimensional("every inequality turned out removable")
    return Polyhedron.from_rows(
        [r for r, _ in result], [o for _, o in result], ctx, minimal=True
    )


# ---------------------------------------------------------------------------
# recession cone


def _primitive(vec, ctx):
    if not ctx.is_exact:
        norm = sum(float(v) * float(v) for v in vec) ** 0.5
        return tuple(float(v) / norm for v in vec)
    den = 1
    for v in vec:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(Fraction(v // g) for v in ints)


def recession_rays(P: Polyhedron) -> Cone:
    """Extreme rays of {v : A v >= 0}; empty for bounded polyhedra."""
    require_nondegenerate(P)
    n, m = P.dim, P.nfacets
    if n > _RAY_DIM_GUARD:
        raise DimensionTooLarge(f"ray enumeration is guarded to n <= {_RAY_DIM_GUARD}")
    ctx = P.ctx
    candidates = []
    if n == 1:
        candidates = [(ctx.one(),), (-ctx.one(),)]
    else:
        for subset in combinations(range(m), n - 1):
            sub = Mat.from_rows([P.A.row(i) for i in subset], ctx)
            basis = kernel_basis(sub)
            if len(basis) != 1:
                continue
            candidates.append(tuple(basis[0]))
            candidates.append(tuple(-x for x in basis[0]))
    rays = []
    seen = set()
    for d in candidates:
        if all(ctx.sign(v) == 0 for v in d):
            continue
        if all(ctx.sign(dot(P.A.row(i), d)) >= 0 for i in range(m)):
            prim = _primitive(d, ctx)
            key = tuple(prim) if ctx.is_exact else tuple(round(v / ctx.tol) for v in prim)
            if key not in seen:
                seen.add(key)
                rays.append(prim)
    return Cone(n, tuple(rays), ctx)


def is_bounded(P: Polyhedron) -> bool:
    return recession_rays(P).is_trivial


# ---------------------------------------------------------------------------
# vertex enumeration (bounded, desk-scale)


def vertices(P: Polyhedron) -> list:
    """All vertices, by solving every full-rank n-subset of tight rows."""
    ctx = P.ctx
    n, m = P.dim, P.nfacets
    out = []
    seen = set()
    for subset in combinations(range(m), n):
        sub = Mat.from_rows([P.A.row(i) for i in subset], ctx)
        x = None
        if rank(sub) == n:
            x = solve_linear(sub, [P.b[i] for i in subset])
        if x is None:
            continue
        if P.contains(x):
            key = (
                tuple(x)
                if ctx.is_exact
                else tuple(round(float(v) / ctx.tol) for v in x)
            )
            if key not in seen:
                seen.add(key)
                out.append(tuple(x))
    return out
