"""The q-analogue of the alternating group inside the Hecke algebra.

The fixed space of the Goldman involution is a subalgebra spanned by the
T'-normal-form words of even parity (parity = sum of the descent counts mod
2).  This module enumerates that basis, decides membership, builds the
involutive generators ``X_i = T'_1 T'_{i+1}``, and verifies that the full
Hecke algebra is the Z2-crossed product of the even subalgebra along the
weak action ``a -> T'_1 a T'_1`` with trivial cocycle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import factorial

from .crossed import check_crossed_axioms, check_crossed_embedding
from .hecke import (
    HeckeAlgebra,
    HeckeElement,
    SymmetricGroupTable,
    Word,
    _LC_ONE,
    _lc_to_rf,
    normal_form_words,
    symmetric_group_table,
    word_parity,
)
from .qfield import LaurentPolynomial, RationalFunction
from .report import Report


@dataclass(frozen=True)
class EvenBasis:
    """The even-parity T'-normal-form words of a given rank."""

    rank: int
    words: tuple[Word, ...]

    def __len__(self):
        return len(self.words)


def enumerate_even_basis(rank: int) -> EvenBasis:
    """All even-parity words; they span the Goldman-fixed subalgebra."""
    if rank < 2:
        raise ValueError("even basis requires rank >= 2")
    words = tuple(w for w in normal_form_words(rank) if word_parity(w) == 0)
    return EvenBasis(rank, words)


def odd_word_count(rank: int) -> int:
    return sum(1 for w in normal_form_words(rank) if word_parity(w) == 1)


def is_in_alt(x: HeckeElement) -> bool:
    """Membership in the +1 Goldman eigenspace (the even subalgebra)."""
    return x.goldman() == x


def x_generator(rank: int, i: int) -> HeckeElement:
    """The involutive-pair generator X_i = T'_1 T'_{i+1}, 1 <= i <= rank-2."""
    if not 1 <= i <= rank - 2:
        raise ValueError(f"X generator index {i} out of range for rank {rank}")
    algebra = HeckeAlgebra(rank)
    return algebra.tprime(1) * algebra.tprime(i + 1)


# ---------------------------------------------------------------------------
# closure of the even basis under multiplication
# ---------------------------------------------------------------------------

@dataclass
class ClosureCheck:
    rank: int
    pairs_checked: int
    violations: list[tuple[Word, Word, Word, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def tprime_product_coords(table: SymmetricGroupTable, left_wid: int, right_wid: int) -> dict:
    """T'-coordinates of T'_{w1} * T'_{w2}, via cascaded generator actions."""
    vec = {right_wid: _LC_ONE}
    for g in reversed(table.seqs[left_wid]):
        vec = table.tp_left_apply(g, vec)
    return vec


def _record_parity_violations(table, w1_wid, w2_wid, vec, out) -> None:
    words, length = table.words, table.length
    for wid, c in vec.items():
        if length[wid] & 1:
            out.append((words[w1_wid], words[w2_wid], words[wid], str(_lc_to_rf(c))))


def check_even_closure(rank: int, *, sample_pairs: int | None = None,
                       seed: int = 0) -> ClosureCheck:
    """Re-expand products of even basis words and confirm even-only support.

    With ``sample_pairs=None`` every ordered pair is checked (exact, intended
    for rank <= 5); otherwise a seeded sample of pairs is used.
    """
    table = symmetric_group_table(rank)
    evens = [wid for wid in range(len(table.words)) if table.length[wid] % 2 == 0]
    result = ClosureCheck(rank, 0)

    if sample_pairs is not None:
        rng = random.Random(seed)
        for _ in range(sample_pairs):
            w1 = evens[rng.randrange(len(evens))]
            w2 = evens[rng.randrange(len(evens))]
            vec = tprime_product_coords(table, w1, w2)
            _record_parity_violations(table, w1, w2, vec, result.violations)
            result.pairs_checked += 1
        return result

    # trie over reversed generator sequences of the left factor, so cascades
    # with a common tail are evaluated once per right factor
    root: dict = {}
    for wid in evens:
        node = root
        for g in reversed(table.seqs[wid]):
            node = node.setdefault(g, {})
        node["#"] = wid

    def dfs(node, vec, w2):
        wid = node.get("#")
        if wid is not None:
            _record_parity_violations(table, wid, w2, vec, result.violations)
            result.pairs_checked += 1
        for g, child in node.items():
            if g == "#":
                continue
            dfs(child, table.tp_left_apply(g, vec), w2)

    for w2 in evens:
        dfs(root, {w2: _LC_ONE}, w2)
    return result


# ---------------------------------------------------------------------------
# the crossed-product structure of the full Hecke algebra
# ---------------------------------------------------------------------------

def _random_even_sparse(algebra: HeckeAlgebra, rng, terms: int = 2) -> HeckeElement:
    """Seeded sparse member of the even subalgebra: a short sum of pair products."""
    out = algebra.zero()
    for _ in range(terms):
        a = rng.randint(1, algebra.rank - 1)
        b = rng.randint(1, algebra.rank - 1)
        coeff = RationalFunction(LaurentPolynomial(
            {rng.randint(-2, 2): rng.randint(-3, 3)}))
        if coeff:
            out = out + algebra.tprime(a) * algebra.tprime(b) * coeff
    return out


@dataclass
class CrossedSystemWitness:
    """The data realizing the Hecke algebra as a Z2-crossed product."""

    rank: int
    conjugator: HeckeElement        # T'_1; conjugation by it is the weak action
    cocycle_value: HeckeElement     # constantly 1

    def apply(self, sign: int, a: HeckeElement) -> HeckeElement:
        if sign == 1:
            return a
        return self.conjugator * a * self.conjugator


def verify_crossed_product_H(rank: int, *, seed: int = 0,
                             exhaustive_limit: int = 4,
                             sample_size: int = 12) -> Report:
    """Check the crossed-product presentation of the Hecke algebra.

    Verifies: the even/odd direct-sum decomposition with both summands of
    dimension r!/2; that conjugation by T'_1 preserves the even subalgebra
    and squares to the identity; the crossed-system axioms for that action
    with trivial cocycle; and the four product-law formulas identifying the
    crossed product with the Hecke algebra.  Basis pairs are exhausted up to
    ``exhaustive_limit``; beyond that a seeded sample of even elements is
    used.
    """
    if rank < 2:
        raise ValueError("rank must be >= 2")
    report = Report("crossed-product-hecke", {"r": rank, "seed": seed})
    algebra = HeckeAlgebra(rank)
    table = algebra.table
    exhaustive = rank <= exhaustive_limit

    even = enumerate_even_basis(rank)
    n_even, n_odd = len(even), odd_word_count(rank)
    half = factorial(rank) // 2
    report.add("even-odd-counts", n_even == half and n_odd == half,
               expected=f"({half}, {half})", actual=f"({n_even}, {n_odd})")

    tp1 = algebra.tprime(1)
    one = algebra.one()
    witness = CrossedSystemWitness(rank, tp1, one)

    if exhaustive:
        basis_elems = [algebra.tprime_basis_element(w) for w in even.words]
        samples = basis_elems
        pair_iter = [(a, b) for a in basis_elems for b in basis_elems]
    else:
        rng = random.Random(seed)
        samples = []
        while len(samples) < sample_size:
            x = _random_even_sparse(algebra, rng)
            if not x.is_zero:
                samples.append(x)
        pair_iter = [(samples[i], samples[(i * 5 + 3) % len(samples)])
                     for i in range(len(samples))]

    # direct-sum decomposition: right multiples by T'_1 carry odd support only,
    # and together with the even words they exhaust the r! coordinates
    tp1_wid = table.index[(1,) + (0,) * (rank - 2)]
    odd_support_ok = True
    odd_seen: set[int] = set()
    if exhaustive:
        even_wids = [table.index[w] for w in even.words]
    else:
        rng_w = random.Random(seed + 1)
        all_even = [table.index[w] for w in even.words]
        even_wids = [all_even[rng_w.randrange(len(all_even))] for _ in range(sample_size)]
    odd_coord_vectors = []
    for wid in even_wids:
        coords = tprime_product_coords(table, wid, tp1_wid)
        if {table.length[u] & 1 for u in coords} != {1}:
            odd_support_ok = False
            break
        odd_seen.update(coords)
        odd_coord_vectors.append({u: _lc_to_rf(c) for u, c in coords.items()})
    report.add("odd-part-from-even-times-conjugator", odd_support_ok,
               expected="odd-parity support", actual="ok" if odd_support_ok else "mixed parity")
    if exhaustive:
        from .commutant import LinearSpan
        span = LinearSpan()
        odd_rank = sum(1 for vec in odd_coord_vectors if span.add(vec))
        report.add("decomposition-dims",
                   odd_rank == half and len(odd_seen) == half and n_even == half,
                   expected=f"({half}, {half})",
                   actual=f"({n_even}, {odd_rank})")

    # the weak action preserves the even subalgebra and has order <= 2
    preserves = all(is_in_alt(witness.apply(-1, a)) for a in samples)
    report.add("weak-action-preserves-even-part", preserves)
    involutive = all(witness.apply(-1, witness.apply(-1, a)) == a for a in samples)
    report.add("weak-action-order-two", involutive)
    multiplicative = all(
        witness.apply(-1, a * b) == witness.apply(-1, a) * witness.apply(-1, b)
        for a, b in pair_iter[: len(samples) * 2])
    report.add("weak-action-multiplicative", multiplicative)

    axiom_failures = check_crossed_axioms(
        witness.apply, lambda s, t: one, lambda s, t: one, one, samples)
    report.add("crossed-system-axioms", not axiom_failures,
               witness="; ".join(axiom_failures[:5]) if axiom_failures else None)

    embed = {1: one, -1: tp1}
    law_failures = check_crossed_embedding(
        witness.apply, lambda s, t: one, embed.__getitem__, pair_iter)
    report.add("crossed-product-law", not law_failures,
               expected=f"{len(pair_iter)} pairs x 4 sign patterns",
               actual="all equal" if not law_failures else f"{len(law_failures)} failures",
               witness="; ".join(law_failures[:5]) if law_failures else None)
    return report
