import random
from math import factorial

import pytest

from qhecke.alternating import (
    check_even_closure,
    enumerate_even_basis,
    is_in_alt,
    odd_word_count,
    tprime_product_coords,
    verify_crossed_product_H,
    x_generator,
)
from qhecke.hecke import (
    HeckeAlgebra,
    goldman_eigenproject,
    symmetric_group_table,
    to_tprime_basis,
)
from qhecke.qfield import Q_MINUS_QINV, Q_PLUS_QINV


class TestEvenBasis:
    @pytest.mark.parametrize("rank,expected", [(2, 1), (3, 3), (4, 12), (5, 60), (6, 360)])
    def test_cardinality(self, rank, expected):
        basis = enumerate_even_basis(rank)
        assert len(basis) == expected == factorial(rank) // 2
        assert odd_word_count(rank) == expected
        assert all(sum(w) % 2 == 0 for w in basis.words)

    def test_rank_one_rejected(self):
        with pytest.raises(ValueError):
            enumerate_even_basis(1)


class TestMembership:
    def test_identity(self):
        assert is_in_alt(HeckeAlgebra(3).one())

    def test_involutive_generator_is_odd(self):
        assert not is_in_alt(HeckeAlgebra(3).tprime(1))

    def test_product_of_two_is_even(self):
        H = HeckeAlgebra(3)
        p = H.tprime(1) * H.tprime(2)
        assert is_in_alt(p)
        # independent route: the second-basis expansion has even support only
        assert to_tprime_basis(p).even_supported

    @pytest.mark.parametrize("rank", [3, 4])
    def test_matches_even_support_on_samples(self, rank):
        H = HeckeAlgebra(rank)
        rng = random.Random(rank)
        for _ in range(8):
            x = H.random_element(rng, 3)
            assert is_in_alt(x) == to_tprime_basis(x).even_supported
            proj = goldman_eigenproject(x, 1)
            assert is_in_alt(proj)
            assert to_tprime_basis(proj).even_supported

    @pytest.mark.parametrize("rank", [3, 4])
    def test_matches_vanishing_minus_projection(self, rank):
        H = HeckeAlgebra(rank)
        rng = random.Random(10 + rank)
        for _ in range(8):
            x = H.random_element(rng, 3)
            assert is_in_alt(x) == goldman_eigenproject(x, -1).is_zero


class TestXGenerators:
    def test_square_one_beyond_first(self):
        one = HeckeAlgebra(5).one()
        for i in (2, 3):
            x = x_generator(5, i)
            assert x * x == one

    def test_first_generator_cubic(self):
        one = HeckeAlgebra(4).one()
        u2 = (Q_MINUS_QINV / Q_PLUS_QINV) ** 2
        x1 = x_generator(4, 1)
        assert x1 * x1 * x1 == -u2 * (x1 * x1 - x1) + one

    def test_distant_product_involutive(self):
        one = HeckeAlgebra(6).one()
        z = x_generator(6, 1) * x_generator(6, 3)
        assert z * z == one

    def test_members_of_even_part(self):
        for i in (1, 2, 3):
            assert is_in_alt(x_generator(5, i))

    def test_index_bounds(self):
        with pytest.raises(ValueError):
            x_generator(4, 3)


class TestClosure:
    @pytest.mark.parametrize("rank", [2, 3, 4])
    def test_all_pairs_closed(self, rank):
        result = check_even_closure(rank)
        assert result.passed
        assert result.pairs_checked == (factorial(rank) // 2) ** 2

    def test_sampled_mode(self):
        result = check_even_closure(5, sample_pairs=40, seed=3)
        assert result.passed and result.pairs_checked == 40

    def test_detects_odd_products(self):
        # the same coordinates machinery reports odd support when one factor
        # is odd, so a closure failure would be visible
        table = symmetric_group_table(3)
        odd = next(w for w in range(len(table.words)) if table.length[w] % 2 == 1)
        even = next(w for w in range(len(table.words)) if table.length[w] % 2 == 0)
        coords = tprime_product_coords(table, odd, even)
        assert {table.length[w] & 1 for w in coords} == {1}

    @pytest.mark.parametrize("rank", [3, 4])
    def test_cascade_matches_direct_products(self, rank):
        H = HeckeAlgebra(rank)
        table = symmetric_group_table(rank)
        rng = random.Random(rank)
        from qhecke.hecke import _lc_to_rf
        evens = [w for w in range(len(table.words)) if table.length[w] % 2 == 0]
        for _ in range(10):
            w1, w2 = rng.choice(evens), rng.choice(evens)
            coords = tprime_product_coords(table, w1, w2)
            direct = to_tprime_basis(
                H.tprime_basis_element(table.words[w1])
                * H.tprime_basis_element(table.words[w2]))
            assert direct.coeffs == {
                table.words[u]: _lc_to_rf(c) for u, c in sorted(coords.items())}


class TestCrossedProduct:
    @pytest.mark.parametrize("rank,half", [(2, 1), (3, 3), (4, 12)])
    def test_exhaustive(self, rank, half):
        report = verify_crossed_product_H(rank)
        assert report.passed
        by_name = {c.name: c for c in report.checks}
        assert by_name["even-odd-counts"].actual == f"({half}, {half})"
        assert by_name["decomposition-dims"].actual == f"({half}, {half})"

    def test_sampled_rank5(self):
        report = verify_crossed_product_H(5, seed=1)
        assert report.passed

    def test_rank_bound(self):
        with pytest.raises(ValueError):
            verify_crossed_product_H(1)
