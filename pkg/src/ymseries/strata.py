"""Stratum combinatorics for the orientable Yang-Mills stratification.

A stratum is indexed by a rational diagonal vector mu in the closed
fundamental Weyl chamber: a composition (n_1, ..., n_r) of n carrying
integer labels (k_1, ..., k_r), with strictly decreasing block slopes
k_j / n_j and family-specific constraints on the last block.  The module
enumerates all such points of a given bundle class up to a codimension
bound, evaluates the complex codimension

    d_mu = sum over positive roots a with a(mu) > 0 of (a(mu) + ell - 1),

assembles each stratum's equivariant series as a product of unitary
central-stratum series and a flat tail, and checks the stratification
identity: the gauge series of the bundle equals the codimension-weighted
sum of the stratum series, as a truncated power series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil

from .closedforms import so_even_flat, so_odd_flat, sp_flat, zagier_un
from .exactalg import CoeffVector, RatFun, series_expand
from .gaugeseries import betti_degrees, bg_orientable
from .rootsys import (
    SO_EVEN,
    SO_ODD,
    SYMPLECTIC,
    UNITARY,
    GroupSpec,
    UnsupportedFamily,
    build_root_system,
    validate_topclass,
)

_root_system = lru_cache(maxsize=None)(build_root_system)

F = Fraction

TAIL_NONE = "none"
TAIL_ZERO = "zero_block"
TAIL_MINUS = "minus_last"


class InvalidPoint(ValueError):
    """Composition/label data violates the family's chamber constraints."""


class NonIntegerCodimension(ValueError):
    """The codimension sum came out non-integral."""


class AmbiguousComponent(ValueError):
    """A split point needs a component choice to have a series."""


@dataclass(frozen=True)
class AtiyahBottPoint:
    """One stratum index: composition with labels and a tail marker.

    tail_kind is "zero_block" when the last block has label 0 and carries
    the flat tail of the family, "minus_last" for the even-orthogonal shape
    whose last chamber coordinate is negated, else "none".
    """

    family: str
    composition: tuple
    labels: tuple
    tail_kind: str = TAIL_NONE

    def __post_init__(self):
        comp, labels = self.composition, self.labels
        if len(comp) != len(labels) or not comp or any(p < 1 for p in comp):
            raise InvalidPoint("composition and labels must align and be nonempty")
        slopes = [F(k, p) for k, p in zip(labels, comp)]
        fam = self.family
        if fam == UNITARY:
            if self.tail_kind != TAIL_NONE:
                raise InvalidPoint("unitary points carry no tail")
            if any(slopes[i] <= slopes[i + 1] for i in range(len(comp) - 1)):
                raise InvalidPoint("slopes must strictly decrease")
        elif fam in (SO_ODD, SYMPLECTIC):
            if self.tail_kind == TAIL_MINUS:
                raise InvalidPoint("minus_last is an even-orthogonal shape")
            if any(slopes[i] <= slopes[i + 1] for i in range(len(comp) - 1)):
                raise InvalidPoint("slopes must strictly decrease")
            if slopes[-1] < 0 or any(s <= 0 for s in slopes[:-1]):
                raise InvalidPoint("slopes must be positive except a zero tail")
            if (labels[-1] == 0) != (self.tail_kind == TAIL_ZERO):
                raise InvalidPoint("zero_block exactly when the last label is 0")
        elif fam == SO_EVEN:
            self._check_so_even(slopes)
        else:
            raise UnsupportedFamily(fam)

    def _check_so_even(self, slopes):
        comp, labels = self.composition, self.labels
        if self.tail_kind == TAIL_ZERO:
            if comp[-1] < 2 or labels[-1] != 0:
                raise InvalidPoint("zero tail needs a block of size >= 2 with label 0")
            body = slopes[:-1]
            if any(s <= 0 for s in body) or any(
                body[i] <= body[i + 1] for i in range(len(body) - 1)
            ):
                raise InvalidPoint("slopes before a zero tail must strictly decrease to 0")
        elif self.tail_kind == TAIL_MINUS:
            if comp[-1] < 2:
                raise InvalidPoint("minus_last needs a final block of size >= 2")
            if any(s <= 0 for s in slopes) or any(
                slopes[i] <= slopes[i + 1] for i in range(len(slopes) - 1)
            ):
                raise InvalidPoint("slopes must strictly decrease and stay positive")
        else:
            if comp[-1] == 1:
                body = slopes[:-1]
                if any(s <= 0 for s in body) or any(
                    body[i] <= body[i + 1] for i in range(len(body) - 1)
                ):
                    raise InvalidPoint("slopes must strictly decrease")
                if body and body[-1] <= abs(slopes[-1]):
                    raise InvalidPoint("the final coordinate must be dominated")
            else:
                if any(s <= 0 for s in slopes) or any(
                    slopes[i] <= slopes[i + 1] for i in range(len(slopes) - 1)
                ):
                    raise InvalidPoint("slopes must strictly decrease and stay positive")

    @property
    def is_split(self) -> bool:
        """A zero-tail orthogonal point meets both bundle classes."""
        return self.family in (SO_ODD, SO_EVEN) and self.tail_kind == TAIL_ZERO

    def chamber_vector(self) -> tuple:
        """mu as a vector of torus coordinates."""
        out = []
        for j, (p, k) in enumerate(zip(self.composition, self.labels)):
            s = F(k, p)
            if self.tail_kind == TAIL_MINUS and j == len(self.composition) - 1:
                out.extend([s] * (p - 1) + [-s])
            else:
                out.extend([s] * p)
        return tuple(out)

    def bundle_class(self) -> int | None:
        """w2 or degree of the bundle the point belongs to; None when split."""
        if self.family == UNITARY:
            return sum(self.labels)
        if self.family == SYMPLECTIC:
            return 0
        if self.is_split:
            return None
        return sum(self.labels) % 2

    def key(self):
        return (self.composition, self.labels, self.tail_kind)


def codim(g: GroupSpec, mu: AtiyahBottPoint, ell: int) -> int:
    """Complex codimension of the stratum of mu."""
    if ell < 1:
        raise ValueError("need ell >= 1")
    if mu.family != g.family or sum(mu.composition) != g.n:
        raise InvalidPoint("point does not belong to this group")
    rs = _root_system(g)
    v = mu.chamber_vector()
    total = F(0)
    for alpha in rs.positive_roots:
        val = sum((F(a) * x for a, x in zip(alpha, v)), F(0))
        if val > 0:
            total += val + (ell - 1)
    if total.denominator != 1 or total < 0:
        raise NonIntegerCodimension(f"codimension {total} for {mu}")
    return int(total)


def _pairwise_lower_bound(fam, blocks, ell) -> Fraction:
    """Codimension from the theta_i - theta_j roots plus family singles.

    A valid lower bound for every family, monotone under appending blocks:
    used to prune the enumeration.
    """
    total = F(0)
    for i in range(len(blocks)):
        ni, si = blocks[i]
        for j in range(i + 1, len(blocks)):
            nj, sj = blocks[j]
            total += ni * nj * (si - sj + ell - 1)
        if si > 0:
            if fam == SO_ODD:
                total += ni * (si + ell - 1)
            elif fam == SYMPLECTIC:
                total += ni * (2 * si + ell - 1)
    return total


def _max_label_below(slope_bound: Fraction, part: int) -> int:
    """Largest k with k/part strictly below the bound."""
    x = slope_bound * part
    return ceil(x) - 1


def enumerate_ab_points(g: GroupSpec, c: int, ell: int, codim_bound: int):
    """All stratum indices of bundle class c with codimension <= the bound.

    Completeness of the slope windows: a unitary point has every block slope
    within codim_bound of the mean slope c/n (some pair of blocks straddles
    the mean and contributes at least their slope gap); for the other
    families block slopes are bounded by the codimension through the single
    and doubled roots.  Split (zero-tail) orthogonal points meet every
    bundle class and are always included.  Returns (point, codim) pairs
    sorted by codimension and then by the point data.
    """
    validate_topclass(g, c)
    if ell < 1:
        raise ValueError("need ell >= 1")
    fam, n = g.family, g.n
    if fam == UNITARY:
        slope_hi = F(c, n) + codim_bound + 1
        slope_lo = F(c, n) - codim_bound - 1
    else:
        slope_hi = F(codim_bound + 1)
        slope_lo = F(0)
    found = []

    def finish(comp, labels, tail_kind):
        try:
            pt = AtiyahBottPoint(fam, tuple(comp), tuple(labels), tail_kind)
        except InvalidPoint:
            return
        if pt.bundle_class() is not None:
            if fam == UNITARY and pt.bundle_class() != c:
                return
            if fam in (SO_ODD, SO_EVEN) and pt.bundle_class() != c % 2:
                return
        d = codim(g, pt, ell)
        if d <= codim_bound:
            found.append((pt, d))

    def finish_block_list(comp, labels):
        if fam == UNITARY:
            finish(comp, labels, TAIL_NONE)
        elif fam in (SO_ODD, SYMPLECTIC):
            tail = TAIL_ZERO if labels[-1] == 0 else TAIL_NONE
            finish(comp, labels, tail)
        else:
            if labels[-1] == 0 and comp[-1] >= 2:
                finish(comp, labels, TAIL_ZERO)
            elif comp[-1] == 1:
                finish(comp, labels, TAIL_NONE)
            else:
                finish(comp, labels, TAIL_NONE)
                finish(comp, labels, TAIL_MINUS)

    def extend(comp, labels, blocks, remaining):
        if remaining == 0:
            finish_block_list(comp, labels)
            return
        prev_slope = blocks[-1][1] if blocks else None
        for part in range(1, remaining + 1):
            is_last = part == remaining
            upper = slope_hi if prev_slope is None else min(slope_hi, prev_slope)
            hi_k = _max_label_below(upper, part)
            lo_k = ceil(slope_lo * part)
            if fam == UNITARY and is_last:
                base_candidates = [c - sum(labels)]
            else:
                base_candidates = list(range(hi_k, lo_k - 1, -1))
            for k in base_candidates:
                if not lo_k <= k <= hi_k:
                    continue
                if fam == SO_EVEN and is_last and part == 1 and blocks and k > 0:
                    # a size-one final even-orthogonal block may go negative
                    candidates = [k, -k]
                else:
                    candidates = [k]
                for kk in candidates:
                    new_blocks = blocks + [(part, F(kk, part))]
                    if _pairwise_lower_bound(fam, new_blocks, ell) > codim_bound:
                        continue
                    extend(comp + [part], labels + [kk], new_blocks, remaining - part)

    extend([], [], [], n)
    dedup = {pt.key(): (pt, d) for pt, d in found}
    return sorted(dedup.values(), key=lambda pd: (pd[1],) + pd[0].key())


@dataclass(frozen=True)
class StratumDecomposition:
    """Symbolic product shape of one stratum component.

    factors is an ordered tuple of tagged factors:
      ("u_central", n, k)    central unitary stratum of rank n, degree k
      ("flat_sp", m)         flat symplectic tail
      ("flat_so_odd", m, w2) flat odd-orthogonal tail on the bundle w2
      ("flat_so_even", m, w2)
    component_tag is "single" for an unsplit point, else "plus"/"minus"
    naming the ambient bundle the component lives on.
    """

    factors: tuple
    component_tag: str = "single"


def stratum_decomposition(
    g: GroupSpec, mu: AtiyahBottPoint, component: str | None = None
) -> StratumDecomposition:
    """Product shape of the stratum of mu (one bundle component).

    Unitary blocks enter with the family's sign convention on the label
    (+k for unitary and symplectic groups, -k for orthogonal ones); a
    zero-tail block contributes the family's flat factor.  For split
    orthogonal points `component` picks the ambient bundle: "plus" for
    trivial w2, "minus" for the nontrivial one; the tail's own class is
    then w2 + k_1 + ... + k_{r-1} mod 2.
    """
    if mu.family != g.family or sum(mu.composition) != g.n:
        raise InvalidPoint("point does not belong to this group")
    fam = g.family
    labels = mu.labels
    if fam in (UNITARY, SYMPLECTIC):
        if component is not None:
            raise InvalidPoint("only split orthogonal points take a component")
        body = list(zip(mu.composition, labels))
        factors = []
        if fam == SYMPLECTIC and mu.tail_kind == TAIL_ZERO:
            factors.append(("flat_sp", mu.composition[-1]))
            body = body[:-1]
        return StratumDecomposition(
            tuple(("u_central", p, k) for p, k in body) + tuple(factors)
        )
    if mu.is_split:
        if component not in ("plus", "minus"):
            raise AmbiguousComponent("split point: pass component='plus' or 'minus'")
        ambient = 0 if component == "plus" else 1
        blocks = tuple(
            ("u_central", p, -k) for p, k in zip(mu.composition[:-1], labels[:-1])
        )
        tail_w2 = (ambient + sum(labels[:-1])) % 2
        kind = "flat_so_odd" if fam == SO_ODD else "flat_so_even"
        return StratumDecomposition(
            blocks + ((kind, mu.composition[-1], tail_w2),), component
        )
    if component is not None:
        raise AmbiguousComponent("unsplit point: no component to choose")
    return StratumDecomposition(
        tuple(("u_central", p, -k) for p, k in zip(mu.composition, labels))
    )


def stratum_series(
    g: GroupSpec, mu: AtiyahBottPoint, ell: int, component: str | None = None
) -> RatFun:
    """Equivariant series of the stratum of mu: its decomposition, evaluated."""
    decomposition = stratum_decomposition(g, mu, component)
    out = RatFun.one()
    for factor in decomposition.factors:
        kind = factor[0]
        if kind == "u_central":
            out = out * zagier_un(factor[1], factor[2], ell)
        elif kind == "flat_sp":
            out = out * sp_flat(factor[1], ell)
        elif kind == "flat_so_odd":
            out = out * so_odd_flat(factor[1], ell, factor[2])
        else:
            out = out * so_even_flat(factor[1], ell, factor[2])
    return out


@dataclass(frozen=True)
class RecursionReport:
    group: GroupSpec
    topclass: int
    ell: int
    degree: int
    holds: bool
    residual: CoeffVector
    strata_used: int
    strata: tuple  # ((point, codim), ...)

    def to_json(self) -> dict:
        return {
            "group": self.group.describe(),
            "topclass": self.topclass,
            "ell": self.ell,
            "degree": self.degree,
            "holds": self.holds,
            "strata_used": self.strata_used,
            "residual": list(self.residual.coeffs),
            "strata": [
                {
                    "composition": list(pt.composition),
                    "labels": list(pt.labels),
                    "tail": pt.tail_kind,
                    "codim": d,
                }
                for pt, d in self.strata
            ],
        }


def verify_recursion(g: GroupSpec, c: int, ell: int, degree: int) -> RecursionReport:
    """Check the stratification identity for the bundle of class c.

    Left side: the gauge series of the bundle.  Right side: the sum of
    t^{2 d_mu} times each stratum's series over all points of class c with
    2 d_mu <= degree (for a split point, the single component living on
    this bundle).  Both sides are expanded to the requested order; the
    report carries the residual.
    """
    import warnings

    validate_topclass(g, c)
    if ell < 2:
        warnings.warn("the stratification identity presumes genus >= 2", stacklevel=2)
    lhs = series_expand(bg_orientable(betti_degrees(g), ell), degree)
    points = enumerate_ab_points(g, c, ell, degree // 2)
    rhs = [0] * (degree + 1)
    for pt, d in points:
        if 2 * d > degree:
            continue
        comp_arg = None
        if pt.is_split:
            comp_arg = "plus" if c % 2 == 0 else "minus"
        series = stratum_series(g, pt, ell, component=comp_arg)
        coeffs = series_expand(series, degree - 2 * d).coeffs
        for i, x in enumerate(coeffs):
            rhs[2 * d + i] += x
    residual = CoeffVector(degree, tuple(a - b for a, b in zip(lhs.coeffs, rhs)))
    return RecursionReport(
        group=g,
        topclass=c,
        ell=ell,
        degree=degree,
        holds=residual.is_zero,
        residual=residual,
        strata_used=len(points),
        strata=tuple(points),
    )
