import pytest

from ymseries.exactalg import RatFun, one_minus_t, one_plus_t, ratfun_eq, series_expand
from ymseries.gaugeseries import (
    DegreeProfile,
    betti_degrees,
    bg_levi,
    bg_nonorientable,
    bg_orientable,
    concat_profiles,
    unitary_block_profile,
)
from ymseries.levidata import ParabolicIndex, levi_profile
from ymseries.rootsys import GroupSpec


class TestBettiDegrees:
    def test_u3(self):
        p = betti_degrees(GroupSpec("u", 3))
        assert p.degrees == (1, 2, 3) and p.center_count == 1

    def test_sp2(self):
        p = betti_degrees(GroupSpec("sp", 2))
        assert p.degrees == (2, 4) and p.center_count == 0

    def test_so6(self):
        p = betti_degrees(GroupSpec("so-even", 3))
        assert p.degrees == (2, 3, 4) and p.center_count == 0

    def test_su4(self):
        p = betti_degrees(GroupSpec("su", 4))
        assert p.degrees == (2, 3, 4) and p.center_count == 0

    def test_spin_aliases(self):
        assert betti_degrees(GroupSpec("spin-odd", 2)) == betti_degrees(GroupSpec("so-odd", 2))
        assert betti_degrees(GroupSpec("spin-even", 3)) == betti_degrees(GroupSpec("so-even", 3))

    def test_profile_validation(self):
        with pytest.raises(ValueError):
            DegreeProfile((2, 1), 1)


class TestOrientable:
    def test_u1(self):
        for ell in (0, 1, 3):
            f = bg_orientable(betti_degrees(GroupSpec("u", 1)), ell)
            assert f == RatFun(one_plus_t(1) ** (2 * ell), one_minus_t(2))

    def test_su2(self):
        ell = 2
        f = bg_orientable(betti_degrees(GroupSpec("su", 2)), ell)
        assert f == RatFun(one_plus_t(3) ** (2 * ell), one_minus_t(2) * one_minus_t(4))

    def test_u2_genus2(self):
        f = bg_orientable(betti_degrees(GroupSpec("u", 2)), 2)
        expect = RatFun(
            one_plus_t(1) ** 4 * one_plus_t(3) ** 4,
            one_minus_t(2) * one_minus_t(2) * one_minus_t(4),
        )
        assert ratfun_eq(f, expect)


class TestNonorientable:
    def test_u1_two_crosscaps(self):
        f = bg_nonorientable(betti_degrees(GroupSpec("u", 1)), 2)
        assert f == RatFun(one_plus_t(1), one_minus_t(2))
        assert f == RatFun(RatFun.one().num, one_minus_t(1))

    def test_su2_three_crosscaps(self):
        f = bg_nonorientable(betti_degrees(GroupSpec("su", 2)), 3)
        assert f == RatFun(one_plus_t(3) ** 2, one_minus_t(4))

    def test_sp2_klein(self):
        f = bg_nonorientable(betti_degrees(GroupSpec("sp", 2)), 2)
        assert f == RatFun(one_plus_t(3) * one_plus_t(7), one_minus_t(4) * one_minus_t(8))


class TestPositivityAndProducts:
    @pytest.mark.parametrize("fam,n", [("u", 2), ("su", 3), ("so-odd", 2), ("so-even", 2), ("sp", 2)])
    def test_nonnegative_series(self, fam, n):
        prof = betti_degrees(GroupSpec(fam, n))
        assert all(c >= 0 for c in series_expand(bg_orientable(prof, 0), 60).coeffs)
        assert all(c >= 0 for c in series_expand(bg_nonorientable(prof, 1), 60).coeffs)

    def test_multiplicativity(self):
        a = betti_degrees(GroupSpec("u", 2))
        b = betti_degrees(GroupSpec("sp", 1))
        combined = concat_profiles([a, b])
        for ell in (1, 2):
            assert bg_orientable(combined, ell) == bg_orientable(a, ell) * bg_orientable(b, ell)
        assert bg_nonorientable(combined, 3) == bg_nonorientable(a, 3) * bg_nonorientable(b, 3)


class TestBgLevi:
    def test_two_torus_blocks(self):
        prof = levi_profile(GroupSpec("u", 2), ParabolicIndex((1, 1), ()))
        ell = 2
        torus = bg_orientable(unitary_block_profile(1), ell)
        assert bg_levi(prof, ell) == torus * torus

    def test_full_group(self):
        g = GroupSpec("sp", 2)
        prof = levi_profile(g, ParabolicIndex((2,), (False,)))
        assert bg_levi(prof, 3) == bg_orientable(betti_degrees(g), 3)

    def test_mixed_factor(self):
        g = GroupSpec("sp", 2)
        prof = levi_profile(g, ParabolicIndex((1, 1), (False,)))
        ell = 2
        expect = bg_orientable(unitary_block_profile(1), ell) * bg_orientable(
            betti_degrees(GroupSpec("sp", 1)), ell
        )
        assert bg_levi(prof, ell) == expect
