import math
from itertools import product

import pytest

from cpfn.modring import (
    Modulus,
    Residue,
    canonical_associate,
    divides_in_ring,
    factorize,
    ilog,
    mu,
    mu_prime,
    multiples_of,
    primes_upto,
    subgroup_order,
    unary_lcm,
    unary_lcm_mod,
)

from oracles import big_unary_lcm, brute_divides


class TestFactorize:
    def test_small_cases(self):
        assert factorize(12).factors == ((2, 2), (3, 1))
        assert factorize(1).factors == ()
        assert factorize(8).factors == ((2, 3),)

    def test_product_reconstructs(self):
        for m in range(1, 500):
            mod = factorize(m)
            assert math.prod(p**e for p, e in mod.factors) == m

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            factorize(0)
        with pytest.raises(ValueError):
            factorize(-5)

    def test_modulus_validates_factor_list(self):
        with pytest.raises(ValueError):
            Modulus(12, ((3, 1), (2, 2)))  # unsorted
        with pytest.raises(ValueError):
            Modulus(12, ((2, 2),))  # wrong product

    def test_divisors(self):
        assert factorize(12).divisors() == [1, 2, 3, 4, 6, 12]
        assert factorize(1).divisors() == [1]


class TestResidue:
    def test_range_checked(self):
        mod = factorize(8)
        assert int(Residue(7, mod)) == 7
        with pytest.raises(ValueError):
            Residue(8, mod)
        with pytest.raises(ValueError):
            Residue(-1, mod)


def test_primes_upto():
    assert primes_upto(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert primes_upto(1) == []
    assert primes_upto(2) == [2]


def test_ilog():
    assert ilog(1, 2) == 0
    assert ilog(8, 2) == 3
    assert ilog(7, 2) == 2
    assert ilog(9, 3) == 2


class TestUnaryLcm:
    def test_conventions(self):
        assert unary_lcm(0) == 1
        assert unary_lcm(1) == 1
        assert unary_lcm(5) == 60

    def test_against_fold(self):
        for k in range(50):
            assert unary_lcm(k) == big_unary_lcm(k)

    def test_mod_examples(self):
        assert unary_lcm_mod(4, factorize(8)).value == 4
        assert unary_lcm_mod(3, factorize(8)).value == 6
        assert unary_lcm_mod(4, factorize(12)).value == 0

    def test_mod_matches_big_integer_route(self):
        # valuation product vs reduce-the-huge-integer, exhaustively
        for m in range(1, 65):
            mod = factorize(m)
            for k in range(41):
                assert unary_lcm_mod(k, mod).value == big_unary_lcm(k) % m


class TestDividesInRing:
    def test_examples(self):
        mod = factorize(8)
        assert divides_in_ring(Residue(6, mod), Residue(2, mod))
        assert not divides_in_ring(Residue(2, mod), Residue(3, mod))
        for x in range(8):
            assert divides_in_ring(Residue(1, mod), Residue(x, mod))

    def test_modulus_mismatch(self):
        with pytest.raises(ValueError):
            divides_in_ring(Residue(1, factorize(8)), Residue(1, factorize(12)))

    def test_agrees_with_brute_force(self):
        for m in range(1, 65):
            mod = factorize(m)
            for a, x in product(range(m), repeat=2):
                assert divides_in_ring(Residue(a, mod), Residue(x, mod)) == brute_divides(
                    a, x, m
                ), (m, a, x)


class TestMu:
    def test_examples(self):
        assert mu(factorize(8)) == 8
        assert mu(factorize(12)) == 4
        assert mu(factorize(1)) == 1

    def test_mu_prime_examples(self):
        assert mu_prime(factorize(8)) == 4
        assert mu_prime(factorize(1)) == 0
        assert mu_prime(factorize(12)) == 4

    def test_mu_prime_against_factorial_scan(self):
        for m in range(1, 201):
            mod = factorize(m)
            k = 0
            while math.factorial(k) % m:
                k += 1
            assert mu_prime(mod) == k

    def test_mu_prime_never_exceeds_mu(self):
        for m in range(2, 201):
            mod = factorize(m)
            assert mu_prime(mod) <= mu(mod)


class TestCanonicalAssociate:
    def test_examples(self):
        mod = factorize(8)
        assert canonical_associate(3, mod).value == 2
        assert canonical_associate(7, mod).value == 4
        assert canonical_associate(8, mod).value == 0

    def test_is_gcd_of_lcm_and_m(self):
        for m in range(1, 65):
            mod = factorize(m)
            for k in range(41):
                assert canonical_associate(k, mod).value == math.gcd(big_unary_lcm(k), m) % m


class TestSubgroupOrder:
    def test_examples(self):
        assert subgroup_order(factorize(8), 3) == 4
        assert subgroup_order(factorize(8), 0) == 8
        assert subgroup_order(factorize(12), 4) == 1

    def test_matches_multiples_length(self):
        for m in range(1, 65):
            mod = factorize(m)
            for k in range(41):
                assert subgroup_order(mod, k) == len(multiples_of(unary_lcm_mod(k, mod)))

    def test_matches_brute_force_subgroup(self):
        for m in range(1, 40):
            mod = factorize(m)
            for k in range(20):
                g = unary_lcm_mod(k, mod).value
                assert subgroup_order(mod, k) == len({g * t % m for t in range(m)})


class TestMultiplesOf:
    def test_examples(self):
        mod = factorize(8)
        assert [r.value for r in multiples_of(Residue(6, mod))] == [0, 2, 4, 6]
        assert [r.value for r in multiples_of(Residue(0, mod))] == [0]
        assert [r.value for r in multiples_of(Residue(1, mod))] == list(range(8))

    def test_is_the_generated_subgroup(self):
        for m in range(1, 33):
            mod = factorize(m)
            for a in range(m):
                got = [r.value for r in multiples_of(Residue(a, mod))]
                assert got == sorted({a * t % m for t in range(m)})


class TestLcmModLemmas:
    # scaled-down versions of the full-acceptance property suite

    def test_mu_is_least_vanishing_k(self):
        for m in range(2, 101):
            mod = factorize(m)
            cut = mu(mod)
            for k in range(2 * cut + 1):
                vanished = unary_lcm_mod(k, mod).value == 0
                assert vanished == (k >= cut), (m, k)

    def test_mu_is_m_or_at_most_half(self):
        for m in range(2, 101):
            val = mu(factorize(m))
            assert val == m or 2 * val <= m

    def test_lcm_mod_is_unit_times_associate(self):
        for m in range(1, 33):
            mod = factorize(m)
            for k in range(21):
                lm = unary_lcm_mod(k, mod).value
                assoc = canonical_associate(k, mod).value
                assert any(math.gcd(u, m) == 1 and u * assoc % m == lm for u in range(m)), (m, k)
