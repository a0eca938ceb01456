"""Closed-form equivariant Poincare series of semistable/flat strata.

Two independent routes to the same values live here.

The specialized route transcribes, family by family, the closed alternating
sums over compositions of n: the unitary series (Zagier's solution of the
rank-n recursion), and its symplectic and orthogonal counterparts.  Each
function builds its formula exactly as printed, term by term, so the code
doubles as the auditable transcription.

The general route (lr_general) evaluates the abstract inversion of the
stratification recursion: a single signed sum over all standard parabolics,
with exponents driven by the Levi case tables and the fundamental-weight
classes on pi_1.  Agreement of the two routes on every family is one of the
package's acceptance gates.

Conventions: the bracket <x> is the representative of x mod Z in the
half-open interval (0, 1], so <0> = 1.  The indicator eps(r) = [r > 1]
switches off boundary factors of one-block compositions: when eps = 0 the
factor (1 - eps * t^e) is literally 1 and the exponent term eps * e is
literally 0.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactalg import Poly, RatFun, one_minus_t, one_plus_t
from .gaugeseries import bg_levi, bg_orientable, unitary_block_profile
from .levidata import _compositions, enumerate_parabolics, levi_profile
from .rootsys import (
    SO_EVEN,
    SO_ODD,
    SYMPLECTIC,
    UNITARY,
    GroupSpec,
    UnsupportedFamily,
    validate_topclass,
    weight_on_pi1,
)

F = Fraction


class NonIntegerExponent(ValueError):
    """A t-exponent came out non-integral; signals a case-table bug."""


@dataclass(frozen=True)
class SurfaceSpec:
    """Closed surface: genus ell with i in {0,1,2} extra crosscap data.

    i = 0 is the orientable surface of genus ell; i = 1 adds a projective
    plane and i = 2 a Klein bottle (so the nonorientable surface has
    m = 2*ell + i crosscaps).
    """

    ell: int
    i: int = 0

    def __post_init__(self):
        if self.ell < 0 or self.i not in (0, 1, 2):
            raise ValueError("need ell >= 0 and i in {0,1,2}")

    @property
    def crosscaps(self) -> int:
        if self.i == 0:
            raise ValueError("orientable surface has no crosscaps")
        return 2 * self.ell + self.i


@dataclass(frozen=True)
class FlatSeriesRequest:
    group: GroupSpec
    topclass: int
    surface: SurfaceSpec

    def __post_init__(self):
        if self.surface.i != 0:
            raise ValueError("closed-form series exist for orientable surfaces only")
        if self.surface.ell < 2:
            # the stratification semantics presume genus >= 2; the formulas
            # themselves are rational functions for any genus >= 1
            warnings.warn("flat series requested below genus 2", stacklevel=3)
        validate_topclass(self.group, self.topclass)


def frac_part(x: Fraction) -> Fraction:
    """The representative of x mod Z in (0, 1]; in particular <0> = 1."""
    x = Fraction(x)
    r = x - (x.numerator // x.denominator)
    return r if r != 0 else F(1)


def _as_int_exponent(x: Fraction) -> int:
    x = Fraction(x)
    if x.denominator != 1 or x < 0:
        raise NonIntegerExponent(f"exponent {x} is not a natural number")
    return x.numerator


def _u_block(m: int, ell: int) -> RatFun:
    """Gauge series of a unitary block of size m over genus ell."""
    return bg_orientable(unitary_block_profile(m), ell)


def _pair_sum(comp) -> int:
    total = sum(comp)
    return (total * total - sum(p * p for p in comp)) // 2


def _prefixes(comp):
    acc = 0
    out = []
    for part in comp[:-1]:
        acc += part
        out.append(acc)
    return out


@lru_cache(maxsize=None)
def _zagier_cached(n: int, kmod: int, ell: int) -> RatFun:
    total = RatFun.zero()
    for comp in _compositions(n):
        r = len(comp)
        gauge = RatFun.one()
        for part in comp:
            gauge = gauge * _u_block(part, ell)
        den = Poly.one()
        for i in range(r - 1):
            den = den * one_minus_t(2 * (comp[i] + comp[i + 1]))
        twist = F(0)
        for i, prefix in enumerate(_prefixes(comp)):
            twist += 2 * (comp[i] + comp[i + 1]) * frac_part(F(-kmod * prefix, n))
        exponent = 2 * (ell - 1) * _pair_sum(comp) + _as_int_exponent(twist)
        term = gauge * RatFun(Poly.t_power(exponent), den)
        total = total + term if (r - 1) % 2 == 0 else total - term
    return total


def zagier_un(n: int, k: int, ell: int) -> RatFun:
    """Equivariant series of the central Yang-Mills stratum for U(n), degree k.

    Alternating sum over compositions (n_1, ..., n_r) of n: the product of
    the blocks' gauge series times

        t^{2(ell-1) sum_{i<j} n_i n_j}
        * t^{2 sum_i (n_i + n_{i+1}) <(n_1+...+n_i)(-k/n)>}
        / prod_i (1 - t^{2(n_i + n_{i+1})})

    with sign (-1)^(r-1).  Only k mod n enters.
    """
    if n < 1 or ell < 1:
        raise ValueError("need n >= 1 and ell >= 1")
    return _zagier_cached(n, k % n, ell)


def sun_flat(n: int, ell: int) -> RatFun:
    """Flat series for SU(n): the degree-zero U(n) series with the central
    torus factor (1+t)^{2 ell} / (1-t^2) divided out."""
    if n < 2 or ell < 1:
        raise ValueError("need n >= 2 and ell >= 1")
    torus = RatFun(one_plus_t(1) ** (2 * ell), one_minus_t(2))
    return zagier_un(n, 0, ell) / torus


def _sp_tail_gauge(m: int, ell: int) -> RatFun:
    """Gauge series of a rank-m symplectic or odd-orthogonal factor."""
    num = Poly.one()
    den = Poly.one()
    for j in range(1, m + 1):
        num = num * one_plus_t(4 * j - 1) ** (2 * ell)
    for j in range(1, 2 * m + 1):
        den = den * one_minus_t(2 * j)
    return RatFun(num, den)


def _so_even_tail_gauge(m: int, ell: int) -> RatFun:
    """Gauge series of a rank-m even-orthogonal factor, m >= 2."""
    num = one_plus_t(2 * m - 1) ** (2 * ell)
    for j in range(1, m):
        num = num * one_plus_t(4 * j - 1) ** (2 * ell)
    den = one_minus_t(2 * m - 2) * one_minus_t(2 * m)
    for j in range(1, 2 * m - 1):
        den = den * one_minus_t(2 * j)
    return RatFun(num, den)


@lru_cache(maxsize=None)
def sp_flat(n: int, ell: int) -> RatFun:
    """Flat series for Sp(n): two summand families per composition.

    First family (all blocks unitary), sign (-1)^r:
      prod gauge * t^{(ell-1)(2 sum n_i n_j + n(n+1))}
      * t^{2 sum_{i<r}(n_i+n_{i+1}) + 2(n_r+1)}
      / [prod_{i<r}(1 - t^{2(n_i+n_{i+1})})] (1 - t^{2(n_r+1)})

    Second family (symplectic tail on the last block), sign (-1)^(r-1):
      prod_{i<r} gauge * tail * t^{(ell-1)(2 sum n_i n_j + n(n+1) - n_r(n_r+1))}
      * t^{2 sum_{i<r-1}(n_i+n_{i+1}) + 2 eps(r)(n_{r-1}+2n_r+1)}
      / [prod_{i<r-1}(1 - t^{2(n_i+n_{i+1})})] (1 - eps(r) t^{2(n_{r-1}+2n_r+1)})
    """
    if n < 1 or ell < 1:
        raise ValueError("need n >= 1 and ell >= 1")
    total = RatFun.zero()
    for comp in _compositions(n):
        r = len(comp)
        pair2 = 2 * _pair_sum(comp)
        adj = [comp[i] + comp[i + 1] for i in range(r - 1)]

        gauge1 = RatFun.one()
        for part in comp:
            gauge1 = gauge1 * _u_block(part, ell)
        den1 = one_minus_t(2 * (comp[-1] + 1))
        for a in adj:
            den1 = den1 * one_minus_t(2 * a)
        e1 = (ell - 1) * (pair2 + n * (n + 1)) + 2 * sum(adj) + 2 * (comp[-1] + 1)
        term1 = gauge1 * RatFun(Poly.t_power(e1), den1)
        total = total + term1 if r % 2 == 0 else total - term1

        gauge2 = _sp_tail_gauge(comp[-1], ell)
        for part in comp[:-1]:
            gauge2 = gauge2 * _u_block(part, ell)
        den2 = Poly.one()
        for a in adj[: r - 2]:
            den2 = den2 * one_minus_t(2 * a)
        e2 = (ell - 1) * (pair2 + n * (n + 1) - comp[-1] * (comp[-1] + 1))
        e2 += 2 * sum(adj[: r - 2])
        if r > 1:
            boundary = comp[-2] + 2 * comp[-1] + 1
            den2 = den2 * one_minus_t(2 * boundary)
            e2 += 2 * boundary
        term2 = gauge2 * RatFun(Poly.t_power(e2), den2)
        total = total + term2 if (r - 1) % 2 == 0 else total - term2
    return total


@lru_cache(maxsize=None)
def so_odd_flat(n: int, ell: int, w2: int) -> RatFun:
    """Flat series for SO(2n+1) on the bundle with Stiefel-Whitney bit w2.

    Same two-family shape as the symplectic series; the bundle enters only
    through the first family, whose twist carries 4 n_r <w2/2> (so 4 n_r at
    w2 = 0 and 2 n_r at w2 = 1).  The second family's boundary denominator
    exponent is 2 n_{r-1} + 4 n_r and its twist telescopes to
    2 sum_{i<r}(n_i+n_{i+1}) + 2 eps(r) n_r.
    """
    if n < 1 or ell < 1:
        raise ValueError("need n >= 1 and ell >= 1")
    if w2 not in (0, 1):
        raise ValueError("w2 is a bit")
    q = frac_part(F(w2, 2))
    total = RatFun.zero()
    for comp in _compositions(n):
        r = len(comp)
        pair2 = 2 * _pair_sum(comp)
        adj = [comp[i] + comp[i + 1] for i in range(r - 1)]

        gauge1 = RatFun.one()
        for part in comp:
            gauge1 = gauge1 * _u_block(part, ell)
        den1 = one_minus_t(4 * comp[-1])
        for a in adj:
            den1 = den1 * one_minus_t(2 * a)
        e1 = (ell - 1) * (pair2 + n * (n + 1)) + 2 * sum(adj)
        e1 += _as_int_exponent(4 * comp[-1] * q)
        term1 = gauge1 * RatFun(Poly.t_power(e1), den1)
        total = total + term1 if r % 2 == 0 else total - term1

        gauge2 = _sp_tail_gauge(comp[-1], ell)
        for part in comp[:-1]:
            gauge2 = gauge2 * _u_block(part, ell)
        den2 = Poly.one()
        for a in adj[: r - 2]:
            den2 = den2 * one_minus_t(2 * a)
        e2 = (ell - 1) * (pair2 + n * (n + 1) - comp[-1] * (comp[-1] + 1))
        e2 += 2 * sum(adj)
        if r > 1:
            den2 = den2 * one_minus_t(2 * comp[-2] + 4 * comp[-1])
            e2 += 2 * comp[-1]
        term2 = gauge2 * RatFun(Poly.t_power(e2), den2)
        total = total + term2 if (r - 1) % 2 == 0 else total - term2
    return total


@lru_cache(maxsize=None)
def so_even_flat(n: int, ell: int, w2: int) -> RatFun:
    """Flat series for SO(2n) (n >= 2) on the bundle with bit w2.

    Three summand families:
      size-one last block (both fork nodes cut), sign (-1)^r, twist
        2 sum_{i<r-1}(n_i+n_{i+1}) + 4(n_{r-1}+1)<w2/2>,
        denominator [prod_{i<r}](1 - t^{2(n_{r-1}+1)});
      last block of size >= 2 cut at a single fork node -- the two choices
      give identical terms, hence an overall factor 2, sign (-1)^r, twist
        2 sum_{i<r}(n_i+n_{i+1}) + 4(n_r-1)<w2/2>;
      even-orthogonal tail, sign (-1)^(r-1), boundary exponent
        2(n_{r-1}+2n_r-1) gated by eps(r).
    """
    if n < 2 or ell < 1:
        raise ValueError("need n >= 2 and ell >= 1")
    if w2 not in (0, 1):
        raise ValueError("w2 is a bit")
    q = frac_part(F(w2, 2))
    total = RatFun.zero()
    for comp in _compositions(n):
        r = len(comp)
        pair2 = 2 * _pair_sum(comp)
        adj = [comp[i] + comp[i + 1] for i in range(r - 1)]

        if comp[-1] == 1:
            # size-one last block; needs r >= 2, which n >= 2 guarantees
            gauge = RatFun.one()
            for part in comp:
                gauge = gauge * _u_block(part, ell)
            den = one_minus_t(2 * (comp[-2] + 1))
            for a in adj:
                den = den * one_minus_t(2 * a)
            e = (ell - 1) * (pair2 + n * (n - 1)) + 2 * sum(adj[: r - 2])
            e += _as_int_exponent(4 * (comp[-2] + 1) * q)
            term = gauge * RatFun(Poly.t_power(e), den)
            total = total + term if r % 2 == 0 else total - term
        else:
            gauge = RatFun.one()
            for part in comp:
                gauge = gauge * _u_block(part, ell)
            den = one_minus_t(4 * (comp[-1] - 1))
            for a in adj:
                den = den * one_minus_t(2 * a)
            e = (ell - 1) * (pair2 + n * (n - 1)) + 2 * sum(adj)
            e += _as_int_exponent(4 * (comp[-1] - 1) * q)
            term = RatFun.from_int(2) * gauge * RatFun(Poly.t_power(e), den)
            total = total + term if r % 2 == 0 else total - term

            gauge3 = _so_even_tail_gauge(comp[-1], ell)
            for part in comp[:-1]:
                gauge3 = gauge3 * _u_block(part, ell)
            den3 = Poly.one()
            for a in adj[: r - 2]:
                den3 = den3 * one_minus_t(2 * a)
            e3 = (ell - 1) * (pair2 + n * (n - 1) - comp[-1] * (comp[-1] - 1))
            e3 += 2 * sum(adj[: r - 2])
            if r > 1:
                boundary = comp[-2] + 2 * comp[-1] - 1
                den3 = den3 * one_minus_t(2 * boundary)
                e3 += 2 * boundary
            term3 = gauge3 * RatFun(Poly.t_power(e3), den3)
            total = total + term3 if (r - 1) % 2 == 0 else total - term3
    return total


def lr_general(req: FlatSeriesRequest) -> RatFun:
    """The general inversion engine: signed sum over all standard parabolics.

    For each parabolic I the summand is

        (-1)^{center excess} * P_t(B gauge of the Levi)
        * t^{2 dim U^I (ell-1)}
        * t^{sum_a 4<rho^I, a^v> <w_a(c)>} / prod_a (1 - t^{4<rho^I, a^v>})

    over a in I, where w_a(c) is the fundamental-weight class of the bundle
    class c.  Denominator exponents must be positive integers and the total
    twist a natural number; violations raise NonIntegerExponent.
    """
    g, c = req.group, req.topclass
    ell = req.surface.ell
    if g.family not in (UNITARY, SO_ODD, SO_EVEN, SYMPLECTIC):
        raise UnsupportedFamily(f"no engine route for {g.family}")
    if ell < 1:
        raise ValueError("need ell >= 1")
    total = RatFun.zero()
    for idx in enumerate_parabolics(g):
        prof = levi_profile(g, idx)
        gauge = bg_levi(prof, ell)
        den = Poly.one()
        twist = F(0)
        for i, rho_pair in zip(prof.simple_indices, prof.rho_pairings):
            e4 = _as_int_exponent(4 * rho_pair)
            if e4 == 0:
                raise NonIntegerExponent("denominator exponent must be positive")
            den = den * one_minus_t(e4)
            twist += e4 * frac_part(weight_on_pi1(g, i, c))
        exponent = 2 * prof.dim_u * (ell - 1) + _as_int_exponent(twist)
        term = gauge * RatFun(Poly.t_power(exponent), den)
        total = total + term if prof.center_excess % 2 == 0 else total - term
    return total


def flat_series(g: GroupSpec, c: int, ell: int, engine: str = "specialized") -> RatFun:
    """Dispatch to the family's closed form (or the general engine).

    su and spin families are served through their series-level aliases:
    su via the degree-zero unitary series, spin via the orthogonal series
    at trivial Stiefel-Whitney class.
    """
    validate_topclass(g, c)
    if engine == "general":
        fam = g.family
        if fam == "su":
            torus = RatFun(one_plus_t(1) ** (2 * ell), one_minus_t(2))
            base = lr_general(FlatSeriesRequest(GroupSpec("u", g.n), 0, SurfaceSpec(ell)))
            return base / torus
        if fam in ("spin-odd", "spin-even"):
            alias = SO_ODD if fam == "spin-odd" else SO_EVEN
            return lr_general(FlatSeriesRequest(GroupSpec(alias, g.n), 0, SurfaceSpec(ell)))
        return lr_general(FlatSeriesRequest(g, c, SurfaceSpec(ell)))
    fam = g.family
    if fam == UNITARY:
        return zagier_un(g.n, c, ell)
    if fam == "su":
        return sun_flat(g.n, ell)
    if fam == SYMPLECTIC:
        return sp_flat(g.n, ell)
    if fam == SO_ODD:
        return so_odd_flat(g.n, ell, c)
    if fam == SO_EVEN:
        return so_even_flat(g.n, ell, c)
    if fam == "spin-odd":
        return so_odd_flat(g.n, ell, 0)
    if fam == "spin-even":
        return so_even_flat(g.n, ell, 0)
    raise UnsupportedFamily(fam)
