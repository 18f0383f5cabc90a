import math

import pytest

from legcurves import (
    full_four_torsion_rational,
    is_nth_power,
    legendre,
    make_field,
)
from legcurves.field import _is_prime
from legcurves.poly import deuring, roots_in
from legcurves.supersingular import (
    class_number,
    supersingular_lambdas,
    supersingular_prime_field_count,
    verify_eighth_power,
    verify_sp_formula,
    verify_ss_structure,
)

SMALL_PRIMES = [p for p in range(3, 62, 2) if _is_prime(p)]


class TestRootTables:
    def test_p3_frozen(self):
        t = supersingular_lambdas(3)
        assert [r.coeffs for r in t.roots] == [(2, 0)]
        assert t.prime_field_roots == [2]
        assert t.signed_prime == -3
        assert t.class_number == 1

    def test_p5_frozen(self):
        t = supersingular_lambdas(5)
        assert [r.coeffs for r in t.roots] == [(3, 1), (3, 4)]
        assert t.prime_field_roots == []
        assert t.signed_prime == 5
        assert t.class_number is None

    def test_p7_frozen(self):
        t = supersingular_lambdas(7)
        assert t.prime_field_roots == [2, 4, 6]
        assert len(t.roots) == 3

    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_count_and_distinctness(self, p):
        t = supersingular_lambdas(p)
        assert len(t.roots) == (p - 1) // 2
        assert len(set(t.roots)) == len(t.roots)
        assert t.roots == sorted(t.roots)
        assert t.signed_prime % 4 == 1

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
    def test_matches_generic_root_finder(self, p):
        t = supersingular_lambdas(p)
        assert t.roots == roots_in(t.polynomial, make_field(p, 2))

    def test_prime_field_roots_consistent(self):
        for p in SMALL_PRIMES:
            t = supersingular_lambdas(p)
            in_fp = [r for r in t.roots if all(c == 0 for c in r.coeffs[1:])]
            assert [r.coeffs[0] for r in in_fp] == t.prime_field_roots
            assert supersingular_prime_field_count(p) == len(t.prime_field_roots)

    def test_rejects_non_primes(self):
        for bad in (2, 9, 15, 1):
            with pytest.raises(ValueError):
                supersingular_lambdas(bad)
            with pytest.raises(ValueError):
                supersingular_prime_field_count(bad)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_roots_are_supersingular_over_fp(self, p):
        # a root in F_p gives a trace-zero count over F_p
        f = make_field(p)
        for a in supersingular_lambdas(p).prime_field_roots:
            assert legendre(f, a).count_points() == p + 1


class TestClassNumbers:
    @pytest.mark.parametrize("p,h", [(3, 1), (7, 1), (11, 1), (19, 1),
                                     (23, 3), (31, 3), (47, 5), (71, 7),
                                     (163, 1)])
    def test_frozen_values(self, p, h):
        assert class_number(p) == h

    def test_wrong_residue_rejected(self):
        for p in (5, 13, 17):
            with pytest.raises(ValueError):
                class_number(p)

    def test_lower_bound(self):
        for p in range(3, 500, 4):
            if _is_prime(p) and p % 4 == 3:
                assert class_number(p) > math.log(p) / 55


class TestStructure:
    @pytest.mark.parametrize("p,d", [(3, 4), (5, 4), (7, 8)])
    def test_frozen_invariant_factors(self, p, d):
        t = supersingular_lambdas(p)
        f2 = make_field(p, 2)
        for lam in t.roots:
            e = legendre(f2, lam)
            assert e.count_points() == d * d
            assert e.group_structure() == (d, d)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
    def test_sweep(self, p):
        assert verify_ss_structure(p)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19])
    def test_full_four_torsion_and_fourth_powers(self, p):
        for lam in supersingular_lambdas(p).roots:
            assert full_four_torsion_rational(legendre(lam.field, lam))
            assert is_nth_power(lam, 4)


class TestEighthPowers:
    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_both_oracles_true(self, p):
        assert verify_eighth_power(p)

    def test_elementwise_eighth_power_direct(self):
        for p in (7, 11, 13):
            for lam in supersingular_lambdas(p).roots:
                assert is_nth_power(-lam, 8)


class TestPrimeFieldCount:
    def test_frozen_counts(self):
        assert supersingular_prime_field_count(13) == 0
        assert supersingular_prime_field_count(3) == 1
        assert supersingular_prime_field_count(23) == 9

    @pytest.mark.parametrize("p", [p for p in range(3, 200, 2) if _is_prime(p)])
    def test_formula(self, p):
        assert verify_sp_formula(p)

    def test_zero_iff_one_mod_four(self):
        for p in SMALL_PRIMES:
            s = supersingular_prime_field_count(p)
            assert (s == 0) == (p % 4 == 1)
            if p % 4 == 3:
                assert s % 2 == 1

    def test_minus_one_is_a_root_for_three_mod_four(self):
        for p in range(3, 500, 2):
            if not _is_prime(p) or p % 4 != 3:
                continue
            f = make_field(p)
            assert deuring(p)(f(-1)) == f.zero
