"""Exact operator matrices on the graded tensor power of a Z2-graded space.

The space V has homogeneous basis v_1 .. v_{m+n}; the first m vectors have
degree 0 and the rest degree 1.  Basis vectors of the r-fold tensor power are
indexed by letter tuples (k_1, ..., k_r), enumerated in lexicographic order;
matrix rows/columns use that lexicographic rank (0-based).

Three families of operators are built here, all with entries in Q(q):

* the Hecke action: each generator acts on two adjacent tensor slots by a
  graded swap-plus-deformation rule (and its involutive normalized variant);
* the quantized-superalgebra action: one-site matrices for sigma, the
  diagonal weight operators, and the raising/lowering operators, extended to
  r slots by the coproduct-expanded sums;
* the graded flip: the signed tensor power of v_i -> v_{2m-i+1} (square
  space, m == n), which anticommutes with every involutive Hecke generator.

Matrices are sparse maps (row, col) -> coefficient with no stored zeros; the
arithmetic is generic in the coefficient field, so the same class carries
exact Q(q) entries and their rational specializations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .hecke import HeckeElement, symmetric_group_table
from .qfield import PoleError, RationalFunction, _as_point_value


@dataclass(frozen=True)
class GradedSpace:
    """Parameters of the graded tensor power: dim V_0 = m, dim V_1 = n, power r."""

    m: int
    n: int
    r: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1 or self.r < 1:
            raise ValueError("need m, n >= 0, m + n >= 1, r >= 1")

    @property
    def letters(self) -> int:
        return self.m + self.n

    @property
    def dim(self) -> int:
        return self.letters ** self.r

    def degree(self, k: int) -> int:
        """Degree of the basis vector v_k (letters are 1-based)."""
        if not 1 <= k <= self.letters:
            raise ValueError(f"letter {k} out of range")
        return 0 if k <= self.m else 1

    def indices(self) -> Iterable[tuple[int, ...]]:
        """All letter tuples in lexicographic (rank) order."""
        return itertools.product(range(1, self.letters + 1), repeat=self.r)

    def rank_of(self, idx: tuple[int, ...]) -> int:
        out = 0
        for k in idx:
            out = out * self.letters + (k - 1)
        return out

    def index_of(self, rank: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.r):
            rank, rem = divmod(rank, self.letters)
            out.append(rem + 1)
        return tuple(reversed(out))


class OperatorMatrix:
    """Sparse square matrix; coefficient type is any exact field element."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: Mapping[tuple[int, int], object] | None = None):
        self.dim = dim
        self.entries: dict[tuple[int, int], object] = {}
        if entries:
            for (i, j), v in entries.items():
                if v:
                    self.entries[(i, j)] = v

    @classmethod
    def identity(cls, dim: int, one=None) -> "OperatorMatrix":
        one = RationalFunction.one() if one is None else one
        return cls(dim, {(i, i): one for i in range(dim)})

    @property
    def nnz(self) -> int:
        return len(self.entries)

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def _check_dim(self, other: "OperatorMatrix") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} != {other.dim}")

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check_dim(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._raw(self.dim, out)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        return self + (-other)

    def __neg__(self) -> "OperatorMatrix":
        return self._raw(self.dim, {k: -v for k, v in self.entries.items()})

    def __mul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check_dim(other)
        rows: dict[int, list[tuple[int, object]]] = {}
        for (k, j), v in other.entries.items():
            rows.setdefault(k, []).append((j, v))
        out: dict[tuple[int, int], object] = {}
        for (i, k), u in self.entries.items():
            for j, v in rows.get(k, ()):
                key = (i, j)
                s = out.get(key)
                p = u * v
                s = p if s is None else s + p
                if s:
                    out[key] = s
                else:
                    del out[key]
        return self._raw(self.dim, out)

    @classmethod
    def _raw(cls, dim: int, entries: dict) -> "OperatorMatrix":
        obj = object.__new__(cls)
        obj.dim = dim
        obj.entries = entries
        return obj

    def scale(self, c) -> "OperatorMatrix":
        if not c:
            return self._raw(self.dim, {})
        return self._raw(self.dim, {k: v * c for k, v in self.entries.items()})

    def __eq__(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __repr__(self):
        return f"OperatorMatrix(dim={self.dim}, nnz={self.nnz})"

    def commutes_with(self, other: "OperatorMatrix") -> bool:
        return (self * other) == (other * self)

    def anticommutes_with(self, other: "OperatorMatrix") -> bool:
        return (self * other) == -(other * self)

    def flatten(self) -> dict[int, object]:
        """Row-major vector view, used by the linear-algebra layer."""
        d = self.dim
        return {i * d + j: v for (i, j), v in self.entries.items()}

    @classmethod
    def from_flat(cls, dim: int, vec: Mapping[int, object]) -> "OperatorMatrix":
        return cls._raw(dim, {divmod(k, dim): v for k, v in vec.items() if v})

    def dump_lines(self, limit: int | None = None) -> list[str]:
        """Sparse dump: `row col (num)/(den)` per entry, lexicographic order."""
        lines = []
        for (i, j) in sorted(self.entries):
            v = self.entries[(i, j)]
            if isinstance(v, RationalFunction):
                s = v.dump_str()
            elif isinstance(v, Fraction):
                s = f"({v.numerator})/({v.denominator})"
            else:
                s = str(v)
            lines.append(f"{i} {j} {s}")
            if limit is not None and len(lines) >= limit:
                break
        return lines


# ---------------------------------------------------------------------------
# the Hecke action
# ---------------------------------------------------------------------------

def _two_site_operator(space: GradedSpace, i: int,
                       rule: Callable[[int, int], list]) -> OperatorMatrix:
    """Embed a two-letter rule at tensor slots (i, i+1), identity elsewhere."""
    if not 1 <= i <= space.r - 1:
        raise ValueError(f"site index {i} out of range for r={space.r}")
    letters = space.letters
    local: dict[tuple[int, int], list] = {}
    for k in range(1, letters + 1):
        for l in range(1, letters + 1):
            local[(k, l)] = rule(k, l)
    entries: dict[tuple[int, int], object] = {}
    lo = letters ** (space.r - i - 1)   # weight of the slot i+1 position
    for col, idx in enumerate(space.indices()):
        k, l = idx[i - 1], idx[i]
        base = col - ((k - 1) * letters + (l - 1)) * lo
        for (k2, l2), coeff in local[(k, l)]:
            row = base + ((k2 - 1) * letters + (l2 - 1)) * lo
            key = (row, col)
            s = entries.get(key)
            s = coeff if s is None else s + coeff
            if s:
                entries[key] = s
            else:
                del entries[key]
    return OperatorMatrix._raw(space.dim, entries)


def pi_T(space: GradedSpace, i: int) -> OperatorMatrix:
    """Matrix of the Hecke generator T_i on the graded tensor power."""
    q = RationalFunction.q()
    qinv = RationalFunction.q(-1)
    qm = q - qinv
    diag = {0: q, 1: -qinv}    # ((-1)^d (q+q^-1) + (q-q^-1)) / 2 for degree d

    def rule(k: int, l: int) -> list:
        if k == l:
            return [((k, l), diag[space.degree(k)])]
        sign = RationalFunction.constant((-1) ** (space.degree(k) * space.degree(l)))
        if k < l:
            return [((l, k), sign), ((k, l), qm)]
        return [((l, k), sign)]

    return _two_site_operator(space, i, rule)


def pi_Tprime(space: GradedSpace, i: int) -> OperatorMatrix:
    """Matrix of the involutive generator T'_i on the graded tensor power."""
    q = RationalFunction.q()
    qinv = RationalFunction.q(-1)
    qp_inv = (q + qinv).inverse()
    ratio = (q - qinv) * qp_inv

    def rule(k: int, l: int) -> list:
        if k == l:
            return [((k, l), RationalFunction.constant((-1) ** space.degree(k)))]
        sign = (-1) ** (space.degree(k) * space.degree(l))
        swap = RationalFunction.constant(2 * sign) * qp_inv
        if k < l:
            return [((l, k), swap), ((k, l), ratio)]
        return [((l, k), swap), ((k, l), -ratio)]

    return _two_site_operator(space, i, rule)


def sign_permutation_matrix(space: GradedSpace, i: int) -> OperatorMatrix:
    """The classical signed swap of slots (i, i+1): the q -> 1 limit oracle.

    Built directly from the sign rule v_k ⊗ v_l -> (-1)^{|k||l|} v_l ⊗ v_k,
    with Fraction entries, independently of the q-deformed construction.
    """
    def rule(k: int, l: int) -> list:
        return [((l, k), Fraction((-1) ** (space.degree(k) * space.degree(l))))]

    return _two_site_operator(space, i, rule)


# ---------------------------------------------------------------------------
# the quantized-superalgebra action
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootDatum:
    """Root data of the general linear superalgebra of shape (m, n).

    The simple-root index set is I = {1, ..., m+n-1}; index m is the odd one
    (when n >= 1).  The bilinear form is +1 on the first m weight directions
    and -1 on the rest, and the pairing used by the one-site weight matrices
    is (alpha_i, eps_b).
    """

    m: int
    n: int

    @property
    def index_set(self) -> range:
        return range(1, self.m + self.n)

    def parity(self, i: int) -> int:
        return 1 if (i == self.m and self.n >= 1) else 0

    def ell(self, i: int) -> int:
        return 1 if i <= self.m else -1

    def eps_form(self, a: int, b: int) -> int:
        if a != b:
            return 0
        return 1 if a <= self.m else -1

    def alpha_pairing(self, i: int, b: int) -> int:
        """(alpha_i, eps_b) with alpha_i = eps_i - eps_{i+1}."""
        return self.eps_form(i, b) - self.eps_form(i + 1, b)


def rho_sigma(space: GradedSpace) -> OperatorMatrix:
    """Diagonal grading involution: sign (-1)^(total degree)."""
    one = RationalFunction.one()
    entries = {}
    for col, idx in enumerate(space.indices()):
        total = sum(space.degree(k) for k in idx)
        entries[(col, col)] = one if total % 2 == 0 else -one
    return OperatorMatrix._raw(space.dim, entries)


def rho_weight(space: GradedSpace, b: int) -> OperatorMatrix:
    """Diagonal q-weight operator counting occurrences of the letter b."""
    if not 1 <= b <= space.letters:
        raise ValueError(f"weight index {b} out of range")
    entries = {}
    for col, idx in enumerate(space.indices()):
        count = sum(1 for k in idx if k == b)
        entries[(col, col)] = RationalFunction.q(count)
    return OperatorMatrix._raw(space.dim, entries)


def rho_weight_vector(space: GradedSpace, weights: tuple[int, ...]) -> OperatorMatrix:
    """Diagonal action of a general integer weight: v_j scales by q^weights[j-1].

    This realizes an arbitrary element of the coweight lattice as the product
    of dual-basis weight operators raised to the given integer exponents.
    """
    if len(weights) != space.letters:
        raise ValueError(f"need {space.letters} weight entries")
    entries = {}
    for col, idx in enumerate(space.indices()):
        expo = sum(weights[k - 1] for k in idx)
        entries[(col, col)] = RationalFunction.q(expo)
    return OperatorMatrix._raw(space.dim, entries)


def rho_e(space: GradedSpace, datum: RootDatum, i: int) -> OperatorMatrix:
    """Raising operator at root i, coproduct-expanded over the r slots."""
    if i not in datum.index_set:
        raise ValueError(f"root index {i} out of range")
    p = datum.parity(i)
    entries: dict[tuple[int, int], object] = {}
    for col, idx in enumerate(space.indices()):
        for t in range(space.r):
            if idx[t] != i + 1:
                continue
            sign = 1
            if p:
                sign = (-1) ** sum(space.degree(idx[s]) for s in range(t))
            expo = -sum(datum.alpha_pairing(i, idx[s]) for s in range(t + 1, space.r))
            moved = idx[:t] + (i,) + idx[t + 1:]
            row = space.rank_of(moved)
            coeff = RationalFunction.q(expo) if sign == 1 else -RationalFunction.q(expo)
            key = (row, col)
            s = entries.get(key)
            s = coeff if s is None else s + coeff
            if s:
                entries[key] = s
            else:
                del entries[key]
    return OperatorMatrix._raw(space.dim, entries)


def rho_f(space: GradedSpace, datum: RootDatum, i: int) -> OperatorMatrix:
    """Lowering operator at root i, coproduct-expanded over the r slots."""
    if i not in datum.index_set:
        raise ValueError(f"root index {i} out of range")
    p = datum.parity(i)
    entries: dict[tuple[int, int], object] = {}
    for col, idx in enumerate(space.indices()):
        for t in range(space.r):
            if idx[t] != i:
                continue
            sign = 1
            if p:
                sign = (-1) ** sum(space.degree(idx[s]) for s in range(t))
            expo = sum(datum.alpha_pairing(i, idx[s]) for s in range(t))
            moved = idx[:t] + (i + 1,) + idx[t + 1:]
            row = space.rank_of(moved)
            coeff = RationalFunction.q(expo) if sign == 1 else -RationalFunction.q(expo)
            key = (row, col)
            s = entries.get(key)
            s = coeff if s is None else s + coeff
            if s:
                entries[key] = s
            else:
                del entries[key]
    return OperatorMatrix._raw(space.dim, entries)


def rho_generator(space: GradedSpace, kind: str, index: int | None = None,
                  datum: RootDatum | None = None) -> OperatorMatrix:
    """Dispatch by generator label: 'sigma', 'qh' (weight), 'e', 'f'."""
    datum = datum or RootDatum(space.m, space.n)
    if kind == "sigma":
        return rho_sigma(space)
    if kind == "qh":
        return rho_weight(space, index)
    if kind == "e":
        return rho_e(space, datum, index)
    if kind == "f":
        return rho_f(space, datum, index)
    raise ValueError(f"unknown generator label {kind!r}")


def rho_generators(space: GradedSpace) -> list[tuple[str, OperatorMatrix]]:
    """Labelled generator matrices of the superalgebra image, fixed order."""
    datum = RootDatum(space.m, space.n)
    out = [("sigma", rho_sigma(space))]
    for b in range(1, space.letters + 1):
        out.append((f"qh{b}", rho_weight(space, b)))
    for i in datum.index_set:
        out.append((f"e{i}", rho_e(space, datum, i)))
        out.append((f"f{i}", rho_f(space, datum, i)))
    return out


# ---------------------------------------------------------------------------
# the graded flip (square case)
# ---------------------------------------------------------------------------

def phi_tensor(space: GradedSpace) -> OperatorMatrix:
    """Signed tensor power of the flip v_k -> v_{2m-k+1}; requires m == n."""
    if space.m != space.n:
        raise ValueError("the graded flip needs dim V_0 == dim V_1")
    two_m = 2 * space.m
    one = RationalFunction.one()
    entries = {}
    for col, idx in enumerate(space.indices()):
        degs = [space.degree(k) for k in idx]
        # sign exponent: sum over slots i >= 2 of the degrees before slot i
        expo = sum(d * (space.r - j - 1) for j, d in enumerate(degs))
        row = space.rank_of(tuple(two_m - k + 1 for k in idx))
        entries[(row, col)] = one if expo % 2 == 0 else -one
    return OperatorMatrix._raw(space.dim, entries)


# ---------------------------------------------------------------------------
# representing Hecke elements and specializing
# ---------------------------------------------------------------------------

class PiRepresentation:
    """Cached matrices of the Hecke action for one graded space."""

    def __init__(self, space: GradedSpace):
        self.space = space
        self.table = symmetric_group_table(space.r)
        self._t: dict[int, OperatorMatrix] = {}
        self._tp: dict[int, OperatorMatrix] = {}
        self._word: dict[int, OperatorMatrix] = {}

    def t_matrix(self, i: int) -> OperatorMatrix:
        mat = self._t.get(i)
        if mat is None:
            mat = pi_T(self.space, i)
            self._t[i] = mat
        return mat

    def tprime_matrix(self, i: int) -> OperatorMatrix:
        mat = self._tp.get(i)
        if mat is None:
            mat = pi_Tprime(self.space, i)
            self._tp[i] = mat
        return mat

    def t_matrices(self) -> list[OperatorMatrix]:
        return [self.t_matrix(i) for i in range(1, self.space.r)]

    def tprime_matrices(self) -> list[OperatorMatrix]:
        return [self.tprime_matrix(i) for i in range(1, self.space.r)]

    def x_matrix(self, i: int) -> OperatorMatrix:
        """Image of the even generator X_i = T'_1 T'_{i+1}."""
        if not 1 <= i <= self.space.r - 2:
            raise ValueError(f"X generator index {i} out of range")
        return self.tprime_matrix(1) * self.tprime_matrix(i + 1)

    def x_matrices(self) -> list[OperatorMatrix]:
        return [self.x_matrix(i) for i in range(1, self.space.r - 1)]

    def word_matrix(self, word) -> OperatorMatrix:
        wid = self.table.index[tuple(word)]
        return self._word_matrix(wid)

    def _word_matrix(self, wid: int) -> OperatorMatrix:
        mat = self._word.get(wid)
        if mat is None:
            ff = self.table.first[wid]
            if ff is None:
                mat = OperatorMatrix.identity(self.space.dim)
            else:
                g, rest = ff
                mat = self.t_matrix(g) * self._word_matrix(rest)
            self._word[wid] = mat
        return mat

    def represent(self, x: HeckeElement) -> OperatorMatrix:
        """Linear extension of the action over the normal-form basis."""
        if x.rank != self.space.r:
            raise ValueError(f"element rank {x.rank} != tensor power {self.space.r}")
        out = OperatorMatrix(self.space.dim)
        for wid, c in sorted(x._c.items()):
            out = out + self._word_matrix(wid).scale(c)
        return out


def represent(x: HeckeElement, space: GradedSpace) -> OperatorMatrix:
    return PiRepresentation(space).represent(x)


def specialize_matrix(matrix: OperatorMatrix, point) -> OperatorMatrix:
    """Entrywise evaluation at q = t; raises PoleError naming the entry."""
    t = _as_point_value(point)
    out: dict[tuple[int, int], Fraction] = {}
    for key, v in matrix.entries.items():
        try:
            val = v.specialize(t)
        except PoleError as exc:
            raise PoleError(f"entry {key[0]},{key[1]}: {exc}") from None
        if val:
            out[key] = val
    return OperatorMatrix._raw(matrix.dim, out)
