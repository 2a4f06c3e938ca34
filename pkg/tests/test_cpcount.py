import pytest

from cpfn.cpcount import (
    cp_count,
    cp_count_bhargava,
    cp_count_closed,
    cp_count_exhaustive,
    cp_count_product,
)
from cpfn.errors import BudgetExceededError
from cpfn.modring import factorize, mu

from oracles import classify_all_tables


class TestProduct:
    def test_examples(self):
        assert cp_count_product(6, factorize(8)) == 4096
        assert cp_count_product(6, factorize(3)) == 27
        for n in (1, 5, 20):
            assert cp_count_product(n, factorize(1)) == 1

    def test_never_below_one(self):
        for m in range(1, 30):
            for n in range(1, 12):
                assert cp_count_product(n, factorize(m)) >= 1


class TestClosed:
    def test_examples(self):
        assert cp_count_closed(6, factorize(8)) == 2 ** (2 + 4 + 6)
        assert cp_count_closed(8, factorize(8)) == 2 ** (2 + 4 + 8)
        assert cp_count_closed(20, factorize(8)) == 16384
        for m in (2, 3, 9, 12, 30):
            assert cp_count_closed(2, factorize(m)) == m * m

    def test_agrees_with_product_small(self):
        for n in range(1, 41):
            for m in range(1, 41):
                mod = factorize(m)
                assert cp_count_closed(n, mod) == cp_count_product(n, mod), (n, m)


class TestBhargava:
    def test_examples(self):
        assert cp_count_bhargava(6, 2, 3) == 4096
        assert cp_count_bhargava(9, 2, 3) == 16384
        for p, e in ((2, 1), (3, 2), (7, 1)):
            assert cp_count_bhargava(1, p, e) == p**e

    def test_rejects_composite_base(self):
        with pytest.raises(ValueError):
            cp_count_bhargava(3, 6, 1)

    def test_agrees_with_closed_on_prime_powers(self):
        for p in (2, 3, 5, 7, 11):
            for e in range(1, 6):
                if p**e > 512:
                    continue
                for n in range(1, 50):
                    assert cp_count_bhargava(n, p, e) == cp_count_closed(n, factorize(p**e))


class TestDispatch:
    def test_examples(self):
        assert cp_count(12, factorize(12), method="closed") == 1728
        assert cp_count(12, factorize(12), method="product") == 12 * 12 * 6 * 2
        for m in (1, 4, 9):
            assert cp_count(1, factorize(m)) == m
        assert cp_count(6, factorize(6), method="exhaustive") == 108

    def test_exhaustive_matches_brute_force(self):
        for n, m in ((4, 4), (3, 6), (5, 3), (2, 10)):
            assert cp_count_exhaustive(n, factorize(m)) == len(classify_all_tables(n, m))

    def test_exhaustive_budget(self):
        with pytest.raises(BudgetExceededError):
            cp_count(30, factorize(30), method="exhaustive")
        # a tighter explicit budget trips earlier
        with pytest.raises(BudgetExceededError):
            cp_count_exhaustive(6, factorize(8), budget=1000)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            cp_count(3, factorize(4), method="magic")


def test_count_independent_of_n_beyond_mu():
    for m in (2, 8, 12, 36, 100):
        mod = factorize(m)
        base = cp_count_product(mu(mod), mod)
        for n in range(mu(mod), mu(mod) + 20):
            assert cp_count_product(n, mod) == base
