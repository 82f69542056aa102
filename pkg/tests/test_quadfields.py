"""Quadratic-field arithmetic: Kronecker symbols, fundamentality,
candidate-discriminant enumeration, certified factorization."""
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from g2screen.quadfields import (
    FactorizationError,
    candidate_discriminants,
    factorize,
    inert_primes,
    is_fundamental,
    is_prime,
    kronecker,
    primes_up_to,
)


class TestKronecker:
    @settings(max_examples=300, deadline=None)
    @given(st.integers(-200, 200), st.integers(-200, 200))
    def test_matches_sympy(self, D, n):
        assert kronecker(D, n) == sympy.kronecker_symbol(D, n)

    def test_multiplicative_in_n(self):
        for D in (5, 8, 28, -4, 40):
            for a in range(1, 30):
                for b in range(1, 30):
                    assert kronecker(D, a * b) == kronecker(D, a) * kronecker(D, b)

    def test_periodicity_mod_D(self):
        # for fundamental D, chi_D has period |D|
        for D in (5, 8, 12, 13, 40, 85):
            for n in range(1, 3 * D):
                assert kronecker(D, n) == kronecker(D, n + D)

    def test_known_values(self):
        # 7 is inert in Q(sqrt 5); 3 splits in Q(sqrt 13); 2 ramifies in Q(sqrt 2)
        assert kronecker(5, 7) == -1
        assert kronecker(13, 3) == 1
        assert kronecker(8, 2) == 0
        assert kronecker(28, 151) == -1


class TestFundamental:
    def test_reference_lists(self):
        fund = [D for D in range(2, 50) if is_fundamental(D)]
        assert fund == [5, 8, 12, 13, 17, 21, 24, 28, 29, 33, 37, 40, 41, 44]
        neg = [D for D in range(-20, 0) if is_fundamental(D)]
        assert neg == [-20, -19, -15, -11, -8, -7, -4, -3]

    def test_one_is_not(self):
        assert not is_fundamental(1)
        assert not is_fundamental(0)

    def test_candidates_are_fundamental(self):
        for D in candidate_discriminants(2**8 * 5**3 * 7**3, 3):
            assert is_fundamental(D) and D > 1


class TestCandidates:
    def test_reference_set_p3(self):
        # support {2,5,7} with v2 >= 3: all seven allowable fields
        assert candidate_discriminants(2**8 * 5**3 * 7**3, 3) == [5, 8, 28, 40, 56, 140, 280]

    def test_reference_set_p5(self):
        assert candidate_discriminants(2**8 * 3**2 * 7**3, 5) == [8, 12, 21, 24, 28, 56, 168]

    def test_p_filter(self):
        # same delta, p = 5 drops every D divisible by 5
        assert candidate_discriminants(2**8 * 5**3 * 7**3, 5) == [8, 28, 56]

    def test_two_part_gating(self):
        # v2 = 0: only S = 1 mod 4 survives
        assert candidate_discriminants(5**2 * 7**2, 3) == [5]
        # v2 = 2: adds 4*(3 mod 4) but not 8*S
        assert candidate_discriminants(4 * 5 * 7, 3) == [5, 28, 140]
        # v2 >= 3: adds the 8*S family
        assert candidate_discriminants(8 * 5 * 7, 3) == [5, 8, 28, 40, 56, 140, 280]

    def test_false_positive_delta_misses_28(self):
        # model discriminant 2^8 5^6 17^3: 28 is NOT an allowed candidate
        cands = candidate_discriminants(2**8 * 5**6 * 17**3, 3)
        assert 28 not in cands
        assert 85 in cands  # 5*17 = 1 mod 4
        assert cands == [5, 8, 17, 40, 85, 136, 680]

    def test_sign_irrelevant(self):
        assert candidate_discriminants(-8192000, 3) == candidate_discriminants(8192000, 3)

    def test_prefactored_input(self):
        assert candidate_discriminants(0x7FFF, 3, {2: 4, 5: 1}) == \
            candidate_discriminants(80, 3)


class TestFactorize:
    @settings(max_examples=200, deadline=None)
    @given(st.integers(2, 10**12))
    def test_matches_sympy(self, n):
        assert factorize(n) == sympy.factorint(n)

    def test_catalog_scale_values(self):
        assert factorize(54448833445234278400) == {2: 16, 5: 2, 7: 16}
        assert factorize(-103418410043122384896) == {2: 51, 3: 8, 7: 1}

    def test_large_semiprime_within_range(self):
        p, q = 1_000_000_007, 998_244_353
        assert factorize(p * q) == {q: 1, p: 1}

    def test_uncertifiable_raises(self):
        # product of two 70-bit primes exceeds the 2^64 splitting limit
        p = sympy.nextprime(1 << 70)
        q = sympy.nextprime(p)
        with pytest.raises(FactorizationError):
            factorize(p * q)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factorize(0)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(-10**6, 10**6))
    def test_is_prime_matches_sympy(self, n):
        assert is_prime(n) == sympy.isprime(n)


class TestPrimesAndInertia:
    def test_sieve(self):
        assert primes_up_to(30) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
        assert len(primes_up_to(100)) == 25

    def test_inert_for_28_up_to_100(self):
        # full inertia list; a screen additionally drops a curve's bad primes
        # (e.g. 5 and 17 for the bundled false positive)
        assert inert_primes(28, 100) == \
            [5, 11, 13, 17, 23, 41, 43, 61, 67, 71, 73, 79, 89, 97]

    def test_every_allowable_field_has_many_inert_primes(self):
        # each candidate over support {2,5,7} or {2,3,7} has >= 10 inert
        # primes in [10, 100]
        for p, delta in ((3, 2**8 * 5**3 * 7**3), (5, 2**8 * 3**2 * 7**3)):
            for D in candidate_discriminants(delta, p):
                assert sum(1 for q in inert_primes(D, 100) if q >= 10) >= 10
