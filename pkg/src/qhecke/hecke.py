"""The type-A Iwahori-Hecke algebra over K = Q(q), in normal-form coordinates.

Basis words.  A basis element of rank r is encoded by a descent-count vector
``(c_1, ..., c_{r-1})`` with ``0 <= c_i <= i``; the entry ``c_i`` selects the
factor ``M_i = T_i T_{i-1} ... T_{i-c_i+1}`` from the descending chain at
level i (``c_i = 0`` means ``M_i = 1``), and the basis element is the product
``M_1 M_2 ... M_{r-1}``.  Concatenating the blocks gives a reduced word for a
permutation of {1..r}; the encoding is a bijection onto the symmetric group
and the length of the word is ``sum(c_i)``.

Multiplication.  Left multiplication by a generator T_g follows the length
rule on permutations: ``T_g * T_w = T_{gw}`` when the length goes up, and
``(q - q^-1) T_w + T_{gw}`` otherwise.  Products of general elements are
reduced generator by generator; the quadratic and braid relations are
consequences and are exercised by the test suite rather than assumed.

The involutive generators ``T'_i = (2 T_i - (q - q^-1)) / (q + q^-1)`` give a
second normal-form basis (products of T' factors along the same words).  The
conversion between the two bases is triangular with respect to word length,
which is what `to_tprime_basis` exploits.

Internally, coefficients arising from these constructions always lie in the
localization Q[q, q^-1, (q+q^-1)^-1]; a compact integer representation
(`_LC`) is used on hot paths and converted to `RationalFunction` at the API
boundary.  All values are immutable once built.
"""

from __future__ import annotations

import heapq
import itertools
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Mapping

from .qfield import (
    LaurentPolynomial,
    RationalFunction,
    Q_MINUS_QINV,
    _dense,
    _qsq_power_of,
)

Word = tuple[int, ...]


# ---------------------------------------------------------------------------
# words and permutations
# ---------------------------------------------------------------------------

def normal_form_words(rank: int) -> list[Word]:
    """All descent-count vectors of the given rank, in lexicographic order."""
    if rank < 1:
        raise ValueError("rank must be >= 1")
    return list(itertools.product(*(range(i + 1) for i in range(1, rank))))


def check_word(word: Word, rank: int) -> None:
    if len(word) != rank - 1:
        raise ValueError(f"word {word} has wrong length for rank {rank}")
    for i, c in enumerate(word, start=1):
        if not 0 <= c <= i:
            raise ValueError(f"word {word}: entry {c} out of range at level {i}")


def word_parity(word: Word) -> int:
    return sum(word) & 1


def generator_sequence(word: Word) -> tuple[int, ...]:
    """The reduced word (1-based generator indices) of the basis element."""
    seq: list[int] = []
    for i, c in enumerate(word, start=1):
        seq.extend(range(i, i - c, -1))
    return tuple(seq)


def word_to_permutation(word: Word) -> tuple[int, ...]:
    """One-line permutation (images of 1..r) realized by the basis word."""
    rank = len(word) + 1
    check_word(word, rank)
    perm = list(range(rank))
    for g in reversed(generator_sequence(word)):
        a, b = g - 1, g
        perm = [b if v == a else a if v == b else v for v in perm]
    return tuple(v + 1 for v in perm)


def _first_factor(word: Word) -> tuple[int, Word]:
    """Split off the leading generator: word = T_g * rest with length - 1."""
    for j, c in enumerate(word):
        if c:
            rest = list(word)
            rest[j] = 0
            if c > 1:
                rest[j - 1] = c - 1
            return j + 1, tuple(rest)
    raise ValueError("identity word has no leading factor")


# ---------------------------------------------------------------------------
# localized coefficients: num / (d * (q + q^-1)^ek) with integer num
# ---------------------------------------------------------------------------

def _idiv_qp(a: dict[int, int]) -> dict[int, int] | None:
    """Exact division of an integer Laurent dict by q + q^-1, or None."""
    if not a:
        return {}
    lo, hi = min(a), max(a)
    quot: dict[int, int] = {}
    for e in range(hi - 1, lo, -1):
        v = a.get(e + 1, 0) - quot.get(e + 2, 0)
        if v:
            quot[e] = v
    if a.get(lo, 0) != quot.get(lo + 1, 0):
        return None
    if a.get(lo + 1, 0) != quot.get(lo, 0) + quot.get(lo + 2, 0):
        return None
    return quot


_QP_POWS: list[dict[int, int]] = [{0: 1}, {1: 1, -1: 1}]


def _qp_pow(n: int) -> dict[int, int]:
    while len(_QP_POWS) <= n:
        prev = _QP_POWS[-1]
        out: dict[int, int] = {}
        for e, c in prev.items():
            out[e + 1] = out.get(e + 1, 0) + c
            out[e - 1] = out.get(e - 1, 0) + c
        _QP_POWS.append(out)
    return _QP_POWS[n]


def _imul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                del out[e]
    return out


class _LC:
    """num / (d * (q+q^-1)^ek), canonical: gcd(content, d) = 1, q^2+1 ∤ num."""

    __slots__ = ("num", "d", "ek")

    def __init__(self, num: dict[int, int], d: int, ek: int):
        self.num = num
        self.d = d
        self.ek = ek

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        return (isinstance(other, _LC) and self.num == other.num
                and self.d == other.d and self.ek == other.ek)

    def __neg__(self) -> "_LC":
        return _LC({e: -c for e, c in self.num.items()}, self.d, self.ek)

    def __add__(self, other: "_LC") -> "_LC":
        if not other.num:
            return self
        if not self.num:
            return other
        ek = max(self.ek, other.ek)
        d = self.d * other.d // _int_gcd(self.d, other.d)
        a = self.num
        fa = d // self.d
        if ek > self.ek:
            a = _imul(a, _qp_pow(ek - self.ek))
        b = other.num
        fb = d // other.d
        if ek > other.ek:
            b = _imul(b, _qp_pow(ek - other.ek))
        out = {e: c * fa for e, c in a.items()} if fa != 1 else dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c * fb
            if s:
                out[e] = s
            else:
                del out[e]
        return _lc_norm(out, d, ek)

    def __sub__(self, other: "_LC") -> "_LC":
        return self + (-other)

    def __mul__(self, other: "_LC") -> "_LC":
        if not self.num or not other.num:
            return _LC_ZERO
        return _lc_norm(_imul(self.num, other.num), self.d * other.d, self.ek + other.ek)

    def __repr__(self):
        return f"_LC({self.num!r}, {self.d}, {self.ek})"


_LC_ZERO = _LC({}, 1, 0)


def _lc_norm(num: dict[int, int], d: int, ek: int) -> _LC:
    if not num:
        return _LC_ZERO
    while ek > 0:
        quot = _idiv_qp(num)
        if quot is None:
            break
        num = quot
        ek -= 1
    g = 0
    for c in num.values():
        g = _int_gcd(g, c)
        if g == 1:
            break
    g = _int_gcd(g, d)
    if g > 1:
        num = {e: c // g for e, c in num.items()}
        d //= g
    return _LC(num, d, ek)


_LC_ONE = _LC({0: 1}, 1, 0)
_LC_TWO = _LC({0: 2}, 1, 0)
_LC_HALF = _LC({0: 1}, 2, 0)
_LC_QM = _LC({1: 1, -1: -1}, 1, 0)     # q - q^-1
_LC_QP_INV = _LC({0: 1}, 1, 1)         # (q + q^-1)^-1


def _lc_from_int(n: int) -> _LC:
    return _LC({0: n}, 1, 0) if n else _LC_ZERO


_QSQ_POW_CACHE: list[dict[int, Fraction]] = [{0: Fraction(1)}]


def _qsq_pow_terms(k: int) -> dict[int, Fraction]:
    while len(_QSQ_POW_CACHE) <= k:
        prev = _QSQ_POW_CACHE[-1]
        out: dict[int, Fraction] = {}
        for e, c in prev.items():
            out[e + 2] = out.get(e + 2, Fraction(0)) + c
            out[e] = out.get(e, Fraction(0)) + c
        _QSQ_POW_CACHE.append({e: c for e, c in out.items() if c})
    return _QSQ_POW_CACHE[k]


def _lc_to_rf(x: _LC) -> RationalFunction:
    if not x.num:
        return RationalFunction.zero()
    num = LaurentPolynomial._raw({e + x.ek: Fraction(c, x.d) for e, c in x.num.items()})
    den = LaurentPolynomial._raw(dict(_qsq_pow_terms(x.ek)))
    return RationalFunction._make(num, den)


def _rf_to_lc(f: RationalFunction) -> _LC | None:
    """Convert when the denominator is a power of q^2+1 (else None)."""
    den = f.den.terms
    if den == {0: Fraction(1)}:
        k = 0
    else:
        dense, _ = _dense(den)
        res = _qsq_power_of(dense)
        if res is None:
            return None
        k = res[0]
    lcm = 1
    for c in f.num.terms.values():
        lcm = lcm * c.denominator // _int_gcd(lcm, c.denominator)
    num = {e - k: int(c * lcm) for e, c in f.num.terms.items()}
    return _lc_norm(num, lcm, k)


# ---------------------------------------------------------------------------
# the per-rank table: words, permutations, generator actions, lazy caches
# ---------------------------------------------------------------------------

class SymmetricGroupTable:
    """Tabulated symmetric group with the Hecke normal-form word indexing.

    Words are indexed by position in `normal_form_words(rank)`.  The tables
    below are built eagerly; the Goldman and T'-expansion caches are filled
    lazily because they are only needed by a subset of operations.
    """

    def __init__(self, rank: int):
        self.rank = rank
        self.words = normal_form_words(rank)
        self.index: dict[Word, int] = {w: i for i, w in enumerate(self.words)}
        perms = [word_to_permutation(w) for w in self.words]
        self.perms = perms
        self.perm_index: dict[tuple[int, ...], int] = {p: i for i, p in enumerate(perms)}
        if len(self.perm_index) != len(self.words):
            raise AssertionError("normal-form words do not biject onto permutations")
        self.length = [sum(w) for w in self.words]
        self.max_length = rank * (rank - 1) // 2
        self.identity = self.index[tuple([0] * (rank - 1))]
        self.seqs = [generator_sequence(w) for w in self.words]
        # left_mult[g-1][wid] = word index of s_g . w;
        # right_mult[g-1][wid] = word index of w . s_g
        self.left_mult: list[list[int]] = []
        self.right_mult: list[list[int]] = []
        for g in range(1, rank):
            lrow = []
            rrow = []
            for p in perms:
                moved = tuple(g + 1 if v == g else g if v == g + 1 else v for v in p)
                lrow.append(self.perm_index[moved])
                swapped = p[:g - 1] + (p[g], p[g - 1]) + p[g + 1:]
                rrow.append(self.perm_index[swapped])
            self.left_mult.append(lrow)
            self.right_mult.append(rrow)
        self.first: list[tuple[int, int] | None] = []
        for w in self.words:
            if sum(w) == 0:
                self.first.append(None)
            else:
                g, rest = _first_factor(w)
                self.first.append((g, self.index[rest]))
        self._goldman_lc: list[dict[int, _LC] | None] = [None] * len(self.words)
        self._tprime_lc: list[dict[int, _LC] | None] = [None] * len(self.words)
        self._goldman_rf: dict[int, dict[int, RationalFunction]] = {}
        self._tprime_rf: dict[int, dict[int, RationalFunction]] = {}
        self._tp_left: dict[tuple[int, int], dict[int, _LC]] = {}
        self._beta_lc: dict[int, _LC] = {}

    # -- generator actions on coefficient vectors (wid -> _LC)

    def gen_mul_lc(self, g: int, vec: dict[int, _LC]) -> dict[int, _LC]:
        """Left multiplication by T_g in the normal-form basis."""
        lm = self.left_mult[g - 1]
        length = self.length
        out: dict[int, _LC] = {}
        for wid, c in vec.items():
            w2 = lm[wid]
            if length[w2] > length[wid]:
                s = out.get(w2)
                out[w2] = c if s is None else s + c
            else:
                s = out.get(w2)
                out[w2] = c if s is None else s + c
                extra = c * _LC_QM
                s = out.get(wid)
                out[wid] = extra if s is None else s + extra
        return {k: v for k, v in out.items() if v}

    def gen_mul_right_lc(self, g: int, vec: dict[int, _LC]) -> dict[int, _LC]:
        """Right multiplication by T_g (length rule on the right)."""
        rm = self.right_mult[g - 1]
        length = self.length
        out: dict[int, _LC] = {}
        for wid, c in vec.items():
            w2 = rm[wid]
            s = out.get(w2)
            out[w2] = c if s is None else s + c
            if length[w2] < length[wid]:
                extra = c * _LC_QM
                s = out.get(wid)
                out[wid] = extra if s is None else s + extra
        return {k: v for k, v in out.items() if v}

    def elem_mul_lc(self, x: dict[int, _LC], y: dict[int, _LC]) -> dict[int, _LC]:
        # decompose the factor with the smaller support into generator cascades
        out: dict[int, _LC] = {}
        if len(x) <= len(y):
            decompose, anchor, gen_mul, reverse = x, y, self.gen_mul_lc, True
        else:
            decompose, anchor, gen_mul, reverse = y, x, self.gen_mul_right_lc, False
        for wid, c in decompose.items():
            tmp = anchor
            seq = self.seqs[wid]
            for g in (reversed(seq) if reverse else seq):
                tmp = gen_mul(g, tmp)
            for u, cu in tmp.items():
                v = c * cu
                if v:
                    s = out.get(u)
                    if s is None:
                        out[u] = v
                    else:
                        s = s + v
                        if s:
                            out[u] = s
                        else:
                            del out[u]
        return out

    def tprime_gen_apply_lc(self, g: int, vec: dict[int, _LC]) -> dict[int, _LC]:
        """Left multiplication by T'_g = (2 T_g - (q - q^-1)) / (q + q^-1)."""
        tg = self.gen_mul_lc(g, vec)
        out: dict[int, _LC] = {}
        for wid in tg.keys() | vec.keys():
            v = _LC_TWO * tg.get(wid, _LC_ZERO) - _LC_QM * vec.get(wid, _LC_ZERO)
            if v:
                out[wid] = v * _LC_QP_INV
        return out

    # -- lazy expansions in the T basis

    def goldman_word_lc(self, wid: int) -> dict[int, _LC]:
        cached = self._goldman_lc[wid]
        if cached is not None:
            return cached
        ff = self.first[wid]
        if ff is None:
            result = {wid: _LC_ONE}
        else:
            g, rest = ff
            prev = self.goldman_word_lc(rest)
            tg = self.gen_mul_lc(g, prev)
            result = {}
            for u in tg.keys() | prev.keys():
                v = _LC_QM * prev.get(u, _LC_ZERO) - tg.get(u, _LC_ZERO)
                if v:
                    result[u] = v
        self._goldman_lc[wid] = result
        return result

    def tprime_word_lc(self, wid: int) -> dict[int, _LC]:
        cached = self._tprime_lc[wid]
        if cached is not None:
            return cached
        ff = self.first[wid]
        if ff is None:
            result = {wid: _LC_ONE}
        else:
            g, rest = ff
            result = self.tprime_gen_apply_lc(g, self.tprime_word_lc(rest))
        self._tprime_lc[wid] = result
        return result

    def goldman_word_rf(self, wid: int) -> dict[int, RationalFunction]:
        cached = self._goldman_rf.get(wid)
        if cached is None:
            cached = {u: _lc_to_rf(c) for u, c in self.goldman_word_lc(wid).items()}
            self._goldman_rf[wid] = cached
        return cached

    def tprime_word_rf(self, wid: int) -> dict[int, RationalFunction]:
        cached = self._tprime_rf.get(wid)
        if cached is None:
            cached = {u: _lc_to_rf(c) for u, c in self.tprime_word_lc(wid).items()}
            self._tprime_rf[wid] = cached
        return cached

    # -- T'-basis coordinates

    def _beta_factor_lc(self, L: int) -> _LC:
        """(q+q^-1)^L / 2^L, the inverse leading coefficient at length L."""
        cached = self._beta_lc.get(L)
        if cached is None:
            cached = _lc_norm(dict(_qp_pow(L)), 2 ** L, 0)
            self._beta_lc[L] = cached
        return cached

    def to_tprime_lc(self, vec: dict[int, _LC]) -> dict[int, _LC]:
        """Coordinates in the T'-normal-form basis (triangular elimination)."""
        out: dict[int, _LC] = {}
        work = dict(vec)
        heap: list[tuple[int, int]] = [(-self.length[w], w) for w in work]
        heapq.heapify(heap)
        while heap:
            _, wid = heapq.heappop(heap)
            a = work.pop(wid, None)
            if a is None or not a:
                continue
            L = self.length[wid]
            beta = a * self._beta_factor_lc(L)
            out[wid] = beta
            if L:
                for u, cu in self.tprime_word_lc(wid).items():
                    if u == wid:
                        continue
                    old = work.get(u)
                    if old is None:
                        work[u] = -(beta * cu)
                        heapq.heappush(heap, (-self.length[u], u))
                    else:
                        work[u] = old - beta * cu
        return out

    def from_tprime_lc(self, vec: dict[int, _LC]) -> dict[int, _LC]:
        out: dict[int, _LC] = {}
        for wid, c in vec.items():
            for u, cu in self.tprime_word_lc(wid).items():
                v = c * cu
                if v:
                    s = out.get(u)
                    if s is None:
                        out[u] = v
                    else:
                        s = s + v
                        if s:
                            out[u] = s
                        else:
                            del out[u]
        return out

    def tp_left_col(self, g: int, wid: int) -> dict[int, _LC]:
        """T'-coordinates of T'_g * T'_w — one column of left multiplication."""
        key = (g, wid)
        cached = self._tp_left.get(key)
        if cached is None:
            z = self.tprime_gen_apply_lc(g, self.tprime_word_lc(wid))
            cached = self.to_tprime_lc(z)
            self._tp_left[key] = cached
        return cached

    def tp_left_apply(self, g: int, vec: dict[int, _LC]) -> dict[int, _LC]:
        """Left multiplication by T'_g on T'-coordinate vectors."""
        out: dict[int, _LC] = {}
        for wid, c in vec.items():
            for u, cu in self.tp_left_col(g, wid).items():
                v = c * cu
                if v:
                    s = out.get(u)
                    if s is None:
                        out[u] = v
                    else:
                        s = s + v
                        if s:
                            out[u] = s
                        else:
                            del out[u]
        return out


_TABLE_CACHE: dict[int, SymmetricGroupTable] = {}


def symmetric_group_table(rank: int) -> SymmetricGroupTable:
    table = _TABLE_CACHE.get(rank)
    if table is None:
        table = SymmetricGroupTable(rank)
        _TABLE_CACHE[rank] = table
    return table


# ---------------------------------------------------------------------------
# RationalFunction fallback engine (for coefficients outside the localization)
# ---------------------------------------------------------------------------

def _gen_mul_rf(table, g, vec):
    lm = table.left_mult[g - 1]
    length = table.length
    out = {}
    for wid, c in vec.items():
        w2 = lm[wid]
        s = out.get(w2)
        out[w2] = c if s is None else s + c
        if length[w2] < length[wid]:
            extra = c * Q_MINUS_QINV
            s = out.get(wid)
            out[wid] = extra if s is None else s + extra
    return {k: v for k, v in out.items() if v}


def _gen_mul_right_rf(table, g, vec):
    rm = table.right_mult[g - 1]
    length = table.length
    out = {}
    for wid, c in vec.items():
        w2 = rm[wid]
        s = out.get(w2)
        out[w2] = c if s is None else s + c
        if length[w2] < length[wid]:
            extra = c * Q_MINUS_QINV
            s = out.get(wid)
            out[wid] = extra if s is None else s + extra
    return {k: v for k, v in out.items() if v}


def _elem_mul_rf(table, x, y):
    out = {}
    if len(x) <= len(y):
        decompose, anchor, gen_mul, reverse = x, y, _gen_mul_rf, True
    else:
        decompose, anchor, gen_mul, reverse = y, x, _gen_mul_right_rf, False
    for wid, c in decompose.items():
        tmp = anchor
        seq = table.seqs[wid]
        for g in (reversed(seq) if reverse else seq):
            tmp = gen_mul(table, g, tmp)
        for u, cu in tmp.items():
            v = c * cu
            if v:
                s = out.get(u)
                if s is None:
                    out[u] = v
                else:
                    s = s + v
                    if s:
                        out[u] = s
                    else:
                        del out[u]
    return out


# ---------------------------------------------------------------------------
# public element type
# ---------------------------------------------------------------------------

def _as_rf(c) -> RationalFunction:
    if isinstance(c, RationalFunction):
        return c
    if isinstance(c, (int, Fraction, LaurentPolynomial)):
        prom = RationalFunction.zero()._promote(c)
        if prom is not None:
            return prom
    raise TypeError(f"cannot use {type(c).__name__} as a coefficient")


class HeckeElement:
    """Sparse linear combination of normal-form basis words, coefficients in K."""

    __slots__ = ("rank", "_c")

    def __init__(self, rank: int, coeffs: Mapping[Word, object] | None = None, *, _wids=None):
        self.rank = rank
        if _wids is not None:
            self._c = _wids
            return
        table = symmetric_group_table(rank)
        c: dict[int, RationalFunction] = {}
        if coeffs:
            for word, value in coeffs.items():
                word = tuple(word)
                check_word(word, rank)
                v = _as_rf(value)
                if v:
                    wid = table.index[word]
                    prev = c.get(wid)
                    c[wid] = v if prev is None else prev + v
        self._c = {k: v for k, v in c.items() if v}

    @property
    def coeffs(self) -> dict[Word, RationalFunction]:
        """Word-keyed view of the coefficients (a fresh dict)."""
        words = symmetric_group_table(self.rank).words
        return {words[wid]: v for wid, v in sorted(self._c.items())}

    @property
    def is_zero(self) -> bool:
        return not self._c

    def support(self) -> list[Word]:
        words = symmetric_group_table(self.rank).words
        return [words[wid] for wid in sorted(self._c)]

    # -- ring operations

    def _check_rank(self, other: "HeckeElement") -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} != {other.rank}")

    def __add__(self, other):
        if isinstance(other, HeckeElement):
            self._check_rank(other)
            out = dict(self._c)
            for k, v in other._c.items():
                s = out.get(k)
                s = v if s is None else s + v
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
            return HeckeElement(self.rank, _wids=out)
        return self + _scalar_elem(self.rank, other)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, HeckeElement) else -_as_rf(other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return HeckeElement(self.rank, _wids={k: -v for k, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            self._check_rank(other)
            table = symmetric_group_table(self.rank)
            xlc = _lc_vec(self._c)
            ylc = _lc_vec(other._c) if xlc is not None else None
            if xlc is not None and ylc is not None:
                return HeckeElement(self.rank, _wids=_rf_vec(table.elem_mul_lc(xlc, ylc)))
            return HeckeElement(self.rank, _wids=_elem_mul_rf(table, self._c, other._c))
        v = _as_rf(other)
        if not v:
            return HeckeElement(self.rank, _wids={})
        return HeckeElement(self.rank, _wids={k: c * v for k, c in self._c.items()})

    def __rmul__(self, other):
        # scalars commute with everything; elements use __mul__
        if isinstance(other, HeckeElement):
            return NotImplemented
        return self.__mul__(other)

    def __truediv__(self, other):
        v = _as_rf(other)
        return self * v.inverse()

    def __eq__(self, other):
        if isinstance(other, HeckeElement):
            return self.rank == other.rank and self._c == other._c
        if isinstance(other, (int, Fraction, RationalFunction, LaurentPolynomial)):
            return self == _scalar_elem(self.rank, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.rank, tuple(sorted((k, v) for k, v in self._c.items()))))

    def __repr__(self):
        if not self._c:
            return f"HeckeElement(rank={self.rank}, 0)"
        words = symmetric_group_table(self.rank).words
        parts = [f"({v})*T{words[k]}" for k, v in sorted(self._c.items())]
        return " + ".join(parts)

    # -- structure maps

    def goldman(self) -> "HeckeElement":
        """Image under the algebra involution determined by T_i -> (q-q^-1) - T_i."""
        table = symmetric_group_table(self.rank)
        xlc = _lc_vec(self._c)
        if xlc is not None:
            out: dict[int, _LC] = {}
            for wid, c in xlc.items():
                for u, cu in table.goldman_word_lc(wid).items():
                    v = c * cu
                    if v:
                        s = out.get(u)
                        out[u] = v if s is None else s + v
            return HeckeElement(self.rank, _wids=_rf_vec({k: v for k, v in out.items() if v}))
        out_rf: dict[int, RationalFunction] = {}
        for wid, c in self._c.items():
            for u, cu in table.goldman_word_rf(wid).items():
                v = c * cu
                if v:
                    s = out_rf.get(u)
                    out_rf[u] = v if s is None else s + v
        return HeckeElement(self.rank, _wids={k: v for k, v in out_rf.items() if v})


def _scalar_elem(rank: int, value) -> HeckeElement:
    v = _as_rf(value)
    table = symmetric_group_table(rank)
    return HeckeElement(rank, _wids=({table.identity: v} if v else {}))


def _lc_vec(c: dict[int, RationalFunction]) -> dict[int, _LC] | None:
    out = {}
    for k, v in c.items():
        lc = _rf_to_lc(v)
        if lc is None:
            return None
        out[k] = lc
    return out


def _rf_vec(c: dict[int, _LC]) -> dict[int, RationalFunction]:
    return {k: _lc_to_rf(v) for k, v in c.items() if v}


class TPrimeExpansion:
    """Coordinates of an element in the T'-normal-form basis."""

    __slots__ = ("rank", "_c")

    def __init__(self, rank: int, coeffs: Mapping[Word, object] | None = None, *, _wids=None):
        self.rank = rank
        if _wids is not None:
            self._c = _wids
            return
        table = symmetric_group_table(rank)
        c: dict[int, RationalFunction] = {}
        if coeffs:
            for word, value in coeffs.items():
                word = tuple(word)
                check_word(word, rank)
                v = _as_rf(value)
                if v:
                    c[table.index[word]] = v
        self._c = c

    @property
    def coeffs(self) -> dict[Word, RationalFunction]:
        words = symmetric_group_table(self.rank).words
        return {words[wid]: v for wid, v in sorted(self._c.items())}

    def parities(self) -> set[int]:
        length = symmetric_group_table(self.rank).length
        return {length[wid] & 1 for wid in self._c}

    @property
    def even_supported(self) -> bool:
        return self.parities() <= {0}

    def __eq__(self, other):
        if not isinstance(other, TPrimeExpansion):
            return NotImplemented
        return self.rank == other.rank and self._c == other._c

    def __repr__(self):
        words = symmetric_group_table(self.rank).words
        parts = [f"({v})*T'{words[k]}" for k, v in sorted(self._c.items())] or ["0"]
        return " + ".join(parts)


def to_tprime_basis(x: HeckeElement) -> TPrimeExpansion:
    """Re-express an element in the T'-normal-form basis."""
    table = symmetric_group_table(x.rank)
    xlc = _lc_vec(x._c)
    if xlc is not None:
        return TPrimeExpansion(x.rank, _wids=_rf_vec(table.to_tprime_lc(xlc)))
    # generic fallback: triangular elimination over K
    out: dict[int, RationalFunction] = {}
    work = dict(x._c)
    heap = [(-table.length[w], w) for w in work]
    heapq.heapify(heap)
    while heap:
        _, wid = heapq.heappop(heap)
        a = work.pop(wid, None)
        if a is None or not a:
            continue
        L = table.length[wid]
        beta = a * _lc_to_rf(table._beta_factor_lc(L))
        out[wid] = beta
        if L:
            for u, cu in table.tprime_word_rf(wid).items():
                if u == wid:
                    continue
                old = work.get(u)
                if old is None:
                    work[u] = -(beta * cu)
                    heapq.heappush(heap, (-table.length[u], u))
                else:
                    work[u] = old - beta * cu
    return TPrimeExpansion(x.rank, _wids={k: v for k, v in out.items() if v})


def from_tprime_basis(y: TPrimeExpansion) -> HeckeElement:
    """Inverse of `to_tprime_basis` (linear extension of the T'-word products)."""
    table = symmetric_group_table(y.rank)
    ylc = _lc_vec(y._c)
    if ylc is not None:
        return HeckeElement(y.rank, _wids=_rf_vec(table.from_tprime_lc(ylc)))
    out: dict[int, RationalFunction] = {}
    for wid, c in y._c.items():
        for u, cu in table.tprime_word_rf(wid).items():
            v = c * cu
            if v:
                s = out.get(u)
                out[u] = v if s is None else s + v
    return HeckeElement(y.rank, _wids={k: v for k, v in out.items() if v})


def goldman(x: HeckeElement) -> HeckeElement:
    return x.goldman()


def goldman_eigenproject(x: HeckeElement, sign: int) -> HeckeElement:
    """The projection (x + sign*goldman(x)) / 2 onto a Goldman eigenspace."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    g = x.goldman()
    half = RationalFunction.constant(Fraction(1, 2))
    return (x + g if sign == 1 else x - g) * half


# ---------------------------------------------------------------------------
# algebra factory
# ---------------------------------------------------------------------------

class HeckeAlgebra:
    """Entry point for building elements of H_{K,r}(q)."""

    def __init__(self, rank: int):
        if rank < 1:
            raise ValueError("rank must be >= 1")
        self.rank = rank
        self.table = symmetric_group_table(rank)

    def zero(self) -> HeckeElement:
        return HeckeElement(self.rank, _wids={})

    def one(self) -> HeckeElement:
        return HeckeElement(self.rank, _wids={self.table.identity: RationalFunction.one()})

    def generator(self, i: int) -> HeckeElement:
        """The generator T_i, 1 <= i <= rank-1."""
        if not 1 <= i <= self.rank - 1:
            raise ValueError(f"generator index {i} out of range for rank {self.rank}")
        word = tuple(1 if j == i - 1 else 0 for j in range(self.rank - 1))
        return HeckeElement(self.rank, _wids={self.table.index[word]: RationalFunction.one()})

    def tprime(self, i: int) -> HeckeElement:
        """T'_i = (2 T_i - (q - q^-1)) / (q + q^-1), an involutive generator."""
        if not 1 <= i <= self.rank - 1:
            raise ValueError(f"generator index {i} out of range for rank {self.rank}")
        vec = self.table.tprime_gen_apply_lc(i, {self.table.identity: _LC_ONE})
        return HeckeElement(self.rank, _wids=_rf_vec(vec))

    def basis_element(self, word: Word) -> HeckeElement:
        word = tuple(word)
        check_word(word, self.rank)
        return HeckeElement(self.rank, _wids={self.table.index[word]: RationalFunction.one()})

    def tprime_basis_element(self, word: Word) -> HeckeElement:
        """The product of T' factors along a normal-form word, in the T basis."""
        word = tuple(word)
        check_word(word, self.rank)
        wid = self.table.index[word]
        return HeckeElement(self.rank, _wids=_rf_vec(self.table.tprime_word_lc(wid)))

    def element(self, coeffs: Mapping[Word, object]) -> HeckeElement:
        return HeckeElement(self.rank, coeffs)

    def random_element(self, rng, terms: int = 3, coeff_bound: int = 4) -> HeckeElement:
        """Seeded sparse element with small integer Laurent coefficients."""
        out: dict[int, RationalFunction] = {}
        nwords = len(self.table.words)
        for _ in range(terms):
            wid = rng.randrange(nwords)
            c = RationalFunction(LaurentPolynomial(
                {rng.randint(-2, 2): Fraction(rng.randint(-coeff_bound, coeff_bound))}))
            if c:
                prev = out.get(wid)
                out[wid] = c if prev is None else prev + c
        return HeckeElement(self.rank, _wids={k: v for k, v in out.items() if v})
