"""Rational Poincare series of classifying spaces of gauge groups.

The rational cohomology of BG for a compact connected group G is a free
algebra on generators in degrees 2*d_1 <= ... <= 2*d_n, with d_1 = ... = d_r
= 1 accounting for the central torus.  Mapping-space arguments turn this
degree list into a closed product formula for P_t of the classifying space
of the gauge group of any principal bundle over a closed surface, orientable
(genus ell) or nonorientable (m crosscaps).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactalg import Poly, RatFun, one_minus_t, one_plus_t
from .rootsys import (
    SO_EVEN,
    SO_ODD,
    SPECIAL_UNITARY,
    SPIN_EVEN,
    SPIN_ODD,
    SYMPLECTIC,
    UNITARY,
    GroupSpec,
    UnsupportedFamily,
)


@dataclass(frozen=True)
class DegreeProfile:
    """Halved generator degrees of H^*(BG; Q) with the torus count in front."""

    degrees: tuple
    center_count: int

    def __post_init__(self):
        r = self.center_count
        if any(d != 1 for d in self.degrees[:r]) or any(d == 1 for d in self.degrees[r:]):
            raise ValueError("the first center_count degrees, and only those, must be 1")


def unitary_block_profile(m: int) -> DegreeProfile:
    """Degrees of U(m): 1, 2, ..., m with a single torus generator."""
    return DegreeProfile(tuple(range(1, m + 1)), 1)


def tail_profile(family: str, m: int) -> DegreeProfile:
    """Degrees of a rank-m orthogonal or symplectic factor."""
    if family in (SO_ODD, SYMPLECTIC):
        return DegreeProfile(tuple(2 * k for k in range(1, m + 1)), 0)
    if family == SO_EVEN:
        if m == 1:
            # SO(2) is a torus
            return DegreeProfile((1,), 1)
        return DegreeProfile(tuple(sorted([2 * k for k in range(1, m)] + [m])), 0)
    raise UnsupportedFamily(family)


def betti_degrees(g: GroupSpec) -> DegreeProfile:
    """Degree profile of the group itself."""
    fam, n = g.family, g.n
    if fam == UNITARY:
        return unitary_block_profile(n)
    if fam == SPECIAL_UNITARY:
        return DegreeProfile(tuple(range(2, n + 1)), 0)
    if fam in (SO_ODD, SPIN_ODD, SYMPLECTIC):
        return tail_profile(SO_ODD, n)
    if fam in (SO_EVEN, SPIN_EVEN):
        return tail_profile(SO_EVEN, n)
    raise UnsupportedFamily(fam)


def concat_profiles(profiles) -> DegreeProfile:
    """Degree profile of a product group."""
    degrees = []
    centers = 0
    for p in profiles:
        degrees.extend(p.degrees)
        centers += p.center_count
    return DegreeProfile(tuple(sorted(degrees)), centers)


def bg_orientable(profile: DegreeProfile, ell: int) -> RatFun:
    """P_t of B(gauge group) over the genus-ell orientable surface.

    Each torus generator contributes (1+t)^{2 ell} / (1-t^2); a generator of
    halved degree d > 1 contributes
    (1+t^{2d-1})^{2 ell} / ((1-t^{2d-2})(1-t^{2d})).
    """
    if ell < 0:
        raise ValueError("genus must be nonnegative")
    num = Poly.one()
    den = Poly.one()
    for d in profile.degrees:
        if d == 1:
            num = num * one_plus_t(1) ** (2 * ell)
            den = den * one_minus_t(2)
        else:
            num = num * one_plus_t(2 * d - 1) ** (2 * ell)
            den = den * one_minus_t(2 * d - 2) * one_minus_t(2 * d)
    return RatFun(num, den)


def bg_nonorientable(profile: DegreeProfile, m: int) -> RatFun:
    """P_t of B(gauge group) over the connected sum of m projective planes.

    Every generator, torus part included, contributes
    (1+t^{2d-1})^{m-1} / (1-t^{2d}).
    """
    if m < 1:
        raise ValueError("need at least one crosscap")
    num = Poly.one()
    den = Poly.one()
    for d in profile.degrees:
        num = num * one_plus_t(2 * d - 1) ** (m - 1)
        den = den * one_minus_t(2 * d)
    return RatFun(num, den)


def bg_levi(levi, ell: int) -> RatFun:
    """Orientable gauge series of a Levi factor (anything with .betti)."""
    return bg_orientable(levi.betti, ell)
