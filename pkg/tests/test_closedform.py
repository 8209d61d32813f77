"""Closed-form counts against golden values, brute force, and the Bell layer."""

from math import comb, factorial

import pytest

from colorcomp import (
    AtLeastM,
    DomainError,
    Family,
    OneModM,
    OnesAndM,
    count_family,
    count_pd,
    count_pd_k,
    enum_colored,
    enum_family,
    num_colors,
    partial_bell,
)


def fibonacci(n):
    """F_1 = F_2 = 1; independent oracle for the d = 1 specialization."""
    a, b = 1, 1
    for _ in range(n - 2):
        a, b = b, a + b
    return b if n >= 2 else a


class TestFamilyType:
    def test_requires_m_at_least_two(self):
        with pytest.raises(DomainError):
            OnesAndM(1)

    def test_rejects_unknown_kind(self):
        with pytest.raises(DomainError):
            Family("weird", 3)

    def test_membership(self):
        assert [s for s in range(1, 9) if OnesAndM(3).admits(s)] == [1, 3]
        assert [s for s in range(1, 9) if OneModM(3).admits(s)] == [1, 4, 7]
        assert [s for s in range(1, 9) if AtLeastM(3).admits(s)] == [3, 4, 5, 6, 7, 8]


class TestCountPdK:
    def test_three_two_by_parts(self):
        assert count_pd_k(3, 2, 1) == 6
        assert count_pd_k(3, 2, 2) == 6
        assert count_pd_k(3, 2, 3) == 1

    def test_more_parts_than_total(self):
        assert count_pd_k(3, 2, 5) == 0

    def test_all_unit_parts(self):
        for nu in range(1, 8):
            for d in range(1, 5):
                assert count_pd_k(nu, d, nu) == 1

    @pytest.mark.parametrize("d", range(1, 5))
    def test_matches_bell_polynomial(self, d):
        # (k!/nu!) B_{nu,k}(1! p_1(d), 2! p_2(d), ...) = C(nu+dk-1, nu-k)
        for nu in range(1, 21):
            x = [factorial(j) * num_colors(j, d) for j in range(1, nu + 1)]
            for k in range(1, nu + 1):
                lhs = factorial(k) * partial_bell(nu, k, x) // factorial(nu)
                assert lhs == count_pd_k(nu, d, k)


class TestCountPd:
    def test_golden_thirteen(self):
        assert count_pd(3, 2) == 13

    def test_single_unit(self):
        for d in range(1, 7):
            assert count_pd(1, d) == 1

    def test_d_one_is_even_fibonacci(self):
        assert count_pd(3, 1) == 8
        for nu in range(1, 21):
            assert count_pd(nu, 1) == fibonacci(2 * nu)


class TestCountFamily:
    def test_golden_thirteens(self):
        assert count_family(OnesAndM(3), 8) == 13
        assert count_family(OneModM(3), 9) == 13
        assert count_family(AtLeastM(3), 11) == 13

    def test_empty_family(self):
        assert count_family(AtLeastM(3), 2) == 0
        assert count_family(AtLeastM(5), 4) == 0

    def test_small_n_below_m(self):
        # formulas remain valid below the usual n >= m threshold
        assert count_family(OnesAndM(4), 2) == 1
        assert count_family(OneModM(4), 3) == 1

    @pytest.mark.parametrize("m", range(2, 7))
    def test_matches_enumeration(self, m):
        for kind in ("ones", "mod", "ge"):
            family = Family(kind, m)
            for n in range(1, 16):
                assert count_family(family, n) == sum(1 for _ in enum_family(family, n))


class TestFourWayIdentity:
    @pytest.mark.parametrize("d", range(1, 6))
    def test_identity(self, d):
        m = d + 1
        for nu in range(1, 13):
            p = count_pd(nu, d)
            assert p == count_family(OnesAndM(m), m * nu - 1)
            assert p == count_family(OneModM(m), m * nu)
            assert p == count_family(AtLeastM(m), m * nu + d)

    def test_against_colored_enumeration(self):
        for d in range(1, 4):
            for nu in range(1, 7):
                assert count_pd(nu, d) == sum(1 for _ in enum_colored(nu, d))
