"""Exact linear algebra over K: spans, subalgebra closure, commutants, ranks.

Vectors are sparse maps column -> coefficient; matrices enter flattened
row-major.  The elimination code is generic in the coefficient field: it only
needs ``+ - * /``, truthiness for zero tests, and ``1 / c`` for inverses, so
the same routines run over Q(q) (exact mode) and over Q at a specialization
point (fast mode).  Pivots are chosen at the first nonzero column in
lexicographic position and reductions are applied in insertion order, which
makes every produced basis deterministic.

Rank certification follows a two-tier strategy: the default evaluates all
matrices at two seeded nonzero rational points (avoiding 0 and +-1 and any
poles) and demands agreement; exact fraction-free elimination over cleared
Laurent polynomials is the arbiter whenever the points disagree, and can be
requested outright.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .qfield import (
    PoleError,
    RationalFunction,
    _dense,
    _dense_exact_div,
    _from_dense,
    _mul_terms,
    _scale_terms,
)
from .tensor import OperatorMatrix


class ClosureError(RuntimeError):
    """Product closure failed to stabilize within the round bound."""


class RankDisagreementError(RuntimeError):
    """Specialized ranks differ between points; exact mode must arbitrate."""

    def __init__(self, ranks, points):
        super().__init__(f"specialized ranks disagree: {ranks} at points {points}")
        self.ranks = ranks
        self.points = points


# ---------------------------------------------------------------------------
# incremental sparse echelon span
# ---------------------------------------------------------------------------

class LinearSpan:
    """Row space with incremental insertion; rows are pivot-normalized."""

    __slots__ = ("rows",)

    def __init__(self):
        self.rows: list[tuple[int, dict]] = []   # (pivot column, row vector)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Residual of vec modulo the span (vec is not modified)."""
        vec = dict(vec)
        for pivot, row in self.rows:
            c = vec.get(pivot)
            if c:
                for col, v in row.items():
                    s = vec.get(col)
                    s = -(c * v) if s is None else s - c * v
                    if s:
                        vec[col] = s
                    else:
                        vec.pop(col, None)
            elif c is not None:
                del vec[pivot]
        return vec

    def add(self, vec: dict) -> bool:
        """Insert vec if independent; returns True when the rank grew."""
        res = self.reduce(vec)
        if not res:
            return False
        pivot = min(res)
        inv = 1 / res[pivot]
        self.rows.append((pivot, {c: v * inv for c, v in res.items()}))
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def _flatten_all(matrices: Sequence[OperatorMatrix]) -> list[dict]:
    return [m.flatten() for m in matrices]


# ---------------------------------------------------------------------------
# algebra bases and closure
# ---------------------------------------------------------------------------

@dataclass
class AlgebraBasis:
    """Linearly independent matrices spanning a subspace of End(V^{x r})."""

    dim: int                                  # ambient matrix dimension
    elements: list[OperatorMatrix]
    closed: bool = False
    generators: list[OperatorMatrix] = field(default_factory=list)
    _span: LinearSpan | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.elements)

    def span(self) -> LinearSpan:
        if self._span is None:
            span = LinearSpan()
            for m in self.elements:
                if not span.add(m.flatten()):
                    raise ValueError("basis elements are not independent")
            self._span = span
        return self._span

    def contains(self, matrix: OperatorMatrix) -> bool:
        return self.span().contains(matrix.flatten())


def _infer_one(matrices: Iterable[OperatorMatrix]):
    for m in matrices:
        for v in m.entries.values():
            if isinstance(v, Fraction):
                return Fraction(1)
            return RationalFunction.one()
    return RationalFunction.one()


def span_closure(generators: Sequence[OperatorMatrix], *,
                 include_identity: bool = True,
                 max_products: int | None = None) -> AlgebraBasis:
    """Basis of the unital subalgebra generated by the given matrices.

    Repeatedly multiplies accepted basis elements by the generators on the
    right, reducing each candidate against the current span, until no product
    adds a new direction.  Aborts with `ClosureError` if the number of
    evaluated products exceeds the bound (default dim^2 * max(dim^2, #gens)),
    which cannot happen for a genuine subalgebra but guards the loop.
    """
    generators = list(generators)
    if not generators and not include_identity:
        raise ValueError("need at least one generator or the identity")
    dims = {g.dim for g in generators}
    if len(dims) > 1:
        raise ValueError(f"generator dimensions differ: {sorted(dims)}")
    dim = dims.pop() if dims else None
    if dim is None:
        raise ValueError("cannot infer ambient dimension without generators")
    one = _infer_one(generators)
    bound = max_products if max_products is not None else dim * dim * max(dim * dim, len(generators))

    span = LinearSpan()
    basis: list[OperatorMatrix] = []
    queue: list[OperatorMatrix] = []
    seed = ([OperatorMatrix.identity(dim, one)] if include_identity else []) + generators
    for m in seed:
        if span.add(m.flatten()):
            basis.append(m)
            queue.append(m)
    products = 0
    head = 0
    while head < len(queue):
        m = queue[head]
        head += 1
        for g in generators:
            products += 1
            if products > bound:
                raise ClosureError(f"closure did not stabilize within {bound} products")
            p = m * g
            if span.add(p.flatten()):
                basis.append(p)
                queue.append(p)
    return AlgebraBasis(dim, basis, closed=True, generators=generators, _span=span)


# ---------------------------------------------------------------------------
# commutant / anticommutant as exact nullspaces
# ---------------------------------------------------------------------------

def _echelon_nullspace(rows: Iterable[dict], ncols: int, one) -> list[dict]:
    """Basis of the solution space of the homogeneous system (sparse rows)."""
    span = LinearSpan()
    for row in rows:
        span.add(row)
    # back-eliminate to reduced row echelon form
    rows_ = span.rows
    for idx in range(len(rows_) - 1, -1, -1):
        pivot, row = rows_[idx]
        for jdx in range(idx):
            pj, rowj = rows_[jdx]
            c = rowj.get(pivot)
            if c:
                for col, v in row.items():
                    s = rowj.get(col)
                    s = -(c * v) if s is None else s - c * v
                    if s:
                        rowj[col] = s
                    else:
                        rowj.pop(col, None)
    pivots = {p for p, _ in rows_}
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = {free: one}
        for pivot, row in rows_:
            c = row.get(free)
            if c:
                vec[pivot] = -c
        basis.append(vec)
    return basis


def _commutation_rows(constraint: OperatorMatrix, sign: int) -> Iterable[dict]:
    """Rows of the linear system X*G - sign*G*X = 0 in the unknowns X[i,k]."""
    dim = constraint.dim
    by_row: dict[int, list[tuple[int, object]]] = {}
    by_col: dict[int, list[tuple[int, object]]] = {}
    for (a, b), v in constraint.entries.items():
        by_row.setdefault(a, []).append((b, v))
        by_col.setdefault(b, []).append((a, v))
    for i in range(dim):
        for j in range(dim):
            row: dict[int, object] = {}
            for k, v in by_col.get(j, ()):    # X[i,k] * G[k,j]
                col = i * dim + k
                s = row.get(col)
                s = v if s is None else s + v
                if s:
                    row[col] = s
                else:
                    row.pop(col, None)
            for k, v in by_row.get(i, ()):    # - sign * G[i,k] * X[k,j]
                col = k * dim + j
                w = -v if sign == 1 else v
                s = row.get(col)
                s = w if s is None else s + w
                if s:
                    row[col] = s
                else:
                    row.pop(col, None)
            if row:
                yield row


def _constraint_matrices(source) -> tuple[int, list[OperatorMatrix]]:
    if isinstance(source, AlgebraBasis):
        mats = source.generators or source.elements
        return source.dim, list(mats)
    mats = list(source)
    if not mats:
        raise ValueError("need at least one constraint matrix")
    return mats[0].dim, mats


def commutant_basis(source, *, dim: int | None = None) -> AlgebraBasis:
    """Basis of all matrices commuting with the given generators.

    ``source`` may be an `AlgebraBasis` (its generating set is used; commuting
    with generators implies commuting with the generated algebra) or an
    explicit list of matrices.  An empty constraint list yields the full
    matrix algebra, which requires passing ``dim``.
    """
    if isinstance(source, AlgebraBasis):
        mats = list(source.generators or source.elements)
        dim = source.dim
    else:
        mats = list(source)
        if mats:
            dim = mats[0].dim
    if not mats:
        if dim is None:
            raise ValueError("empty constraint set needs an explicit dim")
        one = RationalFunction.one()
        elems = [OperatorMatrix(dim, {(i, j): one}) for i in range(dim) for j in range(dim)]
        return AlgebraBasis(dim, elems, closed=True, generators=list(elems))
    one = _infer_one(mats)
    rows = (row for g in mats for row in _commutation_rows(g, sign=1))
    vecs = _echelon_nullspace(rows, dim * dim, one)
    elems = [OperatorMatrix.from_flat(dim, v) for v in vecs]
    # a commutant is closed under products; no generating set smaller than
    # the basis is known for it, so the basis doubles as the generator list
    return AlgebraBasis(dim, elems, closed=True, generators=list(elems))


def anticommutant_basis(source, *, dim: int | None = None) -> AlgebraBasis:
    """Basis of the space of matrices anticommuting with every generator.

    The result is a subspace, not a subalgebra: `closed` stays False and no
    generator list is attached.
    """
    src_dim, mats = _constraint_matrices(source)
    one = _infer_one(mats)
    rows = (row for g in mats for row in _commutation_rows(g, sign=-1))
    vecs = _echelon_nullspace(rows, src_dim * src_dim, one)
    elems = [OperatorMatrix.from_flat(src_dim, v) for v in vecs]
    return AlgebraBasis(src_dim, elems, closed=False)


# ---------------------------------------------------------------------------
# span comparisons
# ---------------------------------------------------------------------------

def span_equal(a: AlgebraBasis, b: AlgebraBasis) -> bool:
    """Mutual membership in both directions (never by dimension alone)."""
    if a.dim != b.dim:
        return False
    return (all(a.contains(m) for m in b.elements)
            and all(b.contains(m) for m in a.elements))


def direct_sum_check(whole: AlgebraBasis, part1: AlgebraBasis, part2: AlgebraBasis) -> bool:
    """True iff the parts are independent and together span the whole."""
    if not (whole.dim == part1.dim == part2.dim):
        return False
    if len(part1) + len(part2) != len(whole):
        return False
    span = LinearSpan()
    for m in part1.elements + part2.elements:
        if not span.add(m.flatten()):
            return False
    return all(span.contains(m.flatten()) for m in whole.elements)


# ---------------------------------------------------------------------------
# rank certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RankCertificate:
    rank: int
    points: tuple[Fraction, ...]
    exact: bool

    def describe(self) -> str:
        mode = "exact" if self.exact else "specialized"
        pts = ",".join(str(p) for p in self.points)
        return f"rank={self.rank} ({mode}{'; points ' + pts if pts else ''})"


def draw_points(seed: int, count: int = 2, avoid: frozenset = frozenset()) -> list[Fraction]:
    """Seeded nonzero rational points, excluding 0 and +-1 (never generic)."""
    rng = random.Random(seed)
    out: list[Fraction] = []
    while len(out) < count:
        t = Fraction(rng.randint(2, 19), rng.randint(1, 7))
        if t in (0, 1, -1) or t in out or t in avoid:
            continue
        out.append(t)
    return out


def _specialized_rank(vectors: list[dict], t: Fraction) -> int:
    span = LinearSpan()
    for vec in vectors:
        sv = {}
        for col, v in vec.items():
            val = v.specialize(t) if isinstance(v, RationalFunction) else Fraction(v)
            if val:
                sv[col] = val
        span.add(sv)
    return span.rank


def rank_with_certificate(matrices: Sequence[OperatorMatrix], mode: str = "specialized",
                          *, points: Sequence[Fraction] | None = None,
                          seed: int = 0, max_retries: int = 8) -> RankCertificate:
    """Rank of the span of the given matrices, with its certification trail."""
    if not matrices:
        raise ValueError("need a nonempty list of matrices")
    vectors = _flatten_all(matrices)
    if mode == "exact":
        return RankCertificate(exact_rank(vectors), (), exact=True)
    if mode != "specialized":
        raise ValueError(f"unknown mode {mode!r}")

    if points is not None:
        pts = [Fraction(p) for p in points]
        ranks = [_specialized_rank(vectors, t) for t in pts]
    else:
        pts = []
        ranks = []
        attempt = 0
        while len(pts) < 2:
            cand = draw_points(seed + attempt, count=1, avoid=frozenset(pts))[0]
            attempt += 1
            if attempt > max_retries + 2:
                raise PoleError("could not find pole-free specialization points")
            try:
                r = _specialized_rank(vectors, cand)
            except PoleError:
                continue
            pts.append(cand)
            ranks.append(r)
    if len(set(ranks)) != 1:
        raise RankDisagreementError(ranks, pts)
    return RankCertificate(ranks[0], tuple(pts), exact=False)


def certified_rank(matrices: Sequence[OperatorMatrix], mode: str = "specialized",
                   **kw) -> RankCertificate:
    """Like `rank_with_certificate` but auto-arbitrates disagreements exactly."""
    try:
        return rank_with_certificate(matrices, mode, **kw)
    except RankDisagreementError:
        return rank_with_certificate(matrices, "exact")


# ---------------------------------------------------------------------------
# exact fraction-free rank over cleared Laurent polynomials
# ---------------------------------------------------------------------------

def _clear_vector(vec: dict) -> dict:
    """Multiply an RF vector by a common denominator: Laurent-term entries."""
    den = {0: Fraction(1)}
    seen: list[dict] = []
    for v in vec.values():
        d = v.den.terms if isinstance(v, RationalFunction) else {0: Fraction(1)}
        if len(d) > 1 and d not in seen:
            seen.append(d)
            den = _mul_terms(den, d)
    out = {}
    for col, v in vec.items():
        if isinstance(v, RationalFunction):
            num = _mul_terms(v.num.terms, den)
            cleared, _ = _exact_terms_div(num, v.den.terms)
            out[col] = cleared
        else:
            out[col] = _scale_terms(den, Fraction(v))
    return out


def _exact_terms_div(a: dict, b: dict) -> tuple[dict, bool]:
    if not a:
        return {}, True
    av, avs = _dense(a)
    bv, bvs = _dense(b)
    quot = _dense_exact_div(av, bv)
    if quot is None:
        raise ArithmeticError("inexact division while clearing denominators")
    return _from_dense(quot, avs - bvs), True


def exact_rank(vectors: list[dict]) -> int:
    """Fraction-free (Bareiss) rank of RF vectors, via cleared Laurent rows.

    One-step fraction-free elimination: every remaining row is updated as
    r <- (r * piv - piv_row * r[pivot_col]) / prev_piv, a division that is
    exact by the Sylvester minor identity.
    """
    rows = [_clear_vector(v) for v in vectors if v]
    rank = 0
    prev_pivot: dict = {0: Fraction(1)}
    while rows:
        pivot_col = min(min(r) for r in rows)
        piv_idx = next(i for i, r in enumerate(rows) if pivot_col in r)
        piv_row = rows.pop(piv_idx)
        piv = piv_row[pivot_col]
        rank += 1
        pd, pds = _dense(prev_pivot)
        new_rows = []
        for r in rows:
            c = r.get(pivot_col)
            out = {}
            cols = (r.keys() | piv_row.keys()) if c else r.keys()
            for col in cols:
                if col == pivot_col:
                    continue
                t = _mul_terms(r.get(col, {}), piv)
                if c:
                    u = _mul_terms(piv_row.get(col, {}), c)
                    merged = {e: t.get(e, Fraction(0)) - u.get(e, Fraction(0))
                              for e in t.keys() | u.keys()}
                    merged = {e: v for e, v in merged.items() if v}
                else:
                    merged = t
                if merged:
                    mv, mvs = _dense(merged)
                    quot = _dense_exact_div(mv, pd)
                    if quot is None:
                        raise ArithmeticError("Bareiss exact division failed")
                    merged = _from_dense(quot, mvs - pds)
                    if merged:
                        out[col] = merged
            if out:
                new_rows.append(out)
        rows = new_rows
        prev_pivot = piv
    return rank
