"""Lattice-cone sums, the Langlands combinatorial identity, and the
abstract inversion of the stratification recursion, at desk scale.

The basic analytic ingredient behind the closed series formulas is the
one-dimensional geometric sum

    sum over integers m with x + m > 0 of t^{p (x + m)}
        =  t^{p <x>} / (1 - t^p),        <x> in (0, 1],

tensored over the simple roots of a parabolic step.  cone_sum_closed is
the product of the closed forms, cone_sum_truncated evaluates the same
product by direct lattice enumeration; comparing them is a property test.

The inversion theorem states that a gauge-series assignment a0 on a poset
of standard parabolics is recovered from the signed combination b0 (the
semistable series) by a cone-weighted lattice sum over topological types.
invert_abstract computes b0 from its closed formula and re-sums the
defining relation by explicit lattice enumeration as the forward check.
verify_langlands tests the two alternating-sum identities on which the
inversion rests, at off-wall rational sample points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .exactalg import CoeffVector, Poly, RatFun, one_minus_t, series_expand
from .gaugeseries import bg_orientable
from .levidata import ParabolicIndex, levi_profile
from .rootsys import (
    GroupSpec,
    UnsupportedFamily,
    build_root_system,
    expand_in_simple_roots,
    pairing,
    pi1_representative,
)

F = Fraction


class NonIntegerExponent(ValueError):
    """A cone-sum exponent came out non-integral."""


class WallPoint(ValueError):
    """A sample point lies on a wall, making an indicator ill-defined."""


class TruncationTooSmall(ValueError):
    """The truncation order cannot support the requested residual check."""


def _frac01(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def _bracket(x: Fraction) -> Fraction:
    """Representative of x mod Z in (0, 1]."""
    r = _frac01(Fraction(x))
    return r if r != 0 else F(1)


@dataclass(frozen=True)
class ConeSumSpec:
    """Exponent weights p_a > 0 and twist classes x_a mod Z, one per factor."""

    weights: tuple
    classes: tuple

    def __post_init__(self):
        if len(self.weights) != len(self.classes):
            raise ValueError("weights and classes must align")
        if any(p < 1 for p in self.weights):
            raise ValueError("weights must be positive integers")
        for p, x in zip(self.weights, self.classes):
            if (p * _bracket(Fraction(x))).denominator != 1:
                raise NonIntegerExponent(f"p*<x> = {p * _bracket(Fraction(x))} not integral")


def cone_sum_closed(spec: ConeSumSpec) -> RatFun:
    """prod_a t^{p_a <x_a>} / (1 - t^{p_a})."""
    num_exp = 0
    den = Poly.one()
    for p, x in zip(spec.weights, spec.classes):
        num_exp += int(p * _bracket(Fraction(x)))
        den = den * one_minus_t(p)
    return RatFun(Poly.t_power(num_exp), den)


def cone_sum_truncated(spec: ConeSumSpec, order: int) -> CoeffVector:
    """The same product summed by direct lattice enumeration up to t^order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [0] * (order + 1)

    def rec(idx, exponent):
        if idx == len(spec.weights):
            coeffs[exponent] += 1
            return
        p = spec.weights[idx]
        x = _frac01(Fraction(spec.classes[idx]))
        # integers m with x + m > 0: the smallest admissible value of
        # p*(x+m) is p*<x>
        first = int(p * _bracket(Fraction(x)))
        e = exponent + first
        while e <= order:
            rec(idx + 1, e)
            e += p
    rec(0, 0)
    return CoeffVector(order, tuple(coeffs))


# -- exact linear algebra helpers ---------------------------------------


def _dot(u, v) -> Fraction:
    return sum((F(a) * F(b) for a, b in zip(u, v)), F(0))


def _solve(matrix_rows, rhs):
    """Solve a consistent linear system by Gaussian elimination."""
    m = len(matrix_rows)
    n = len(matrix_rows[0]) if m else 0
    rows = [[F(x) for x in row] + [F(b)] for row, b in zip(matrix_rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    for i in range(r, m):
        if rows[i][n] != 0:
            raise ValueError("inconsistent system")
    sol = [F(0)] * n
    for i, col in enumerate(pivots):
        sol[col] = rows[i][n]
    return sol


def _gram_inverse_apply(basis, vector):
    """Coordinates of the projection of vector onto span(basis) in that basis."""
    k = len(basis)
    gram = [[_dot(basis[i], basis[j]) for j in range(k)] for i in range(k)]
    rhs = [_dot(b, vector) for b in basis]
    return _solve(gram, rhs)


def _project_onto(basis, vector):
    """Orthogonal projection of vector onto span(basis)."""
    if not basis:
        return tuple(F(0) for _ in vector)
    coords = _gram_inverse_apply(basis, vector)
    out = [F(0)] * len(vector)
    for c, b in zip(coords, basis):
        for i, x in enumerate(b):
            out[i] += c * x
    return tuple(out)


# -- Langlands combinatorial identity ------------------------------------


class _TypeAPoset:
    """Standard parabolics of a rank-r type-A group, with the subspaces
    and indicator functions the Langlands identity quantifies over."""

    def __init__(self, rank: int):
        self.rank = rank
        dim = rank + 1
        self.simple = [
            tuple(F(int(j == i)) - F(int(j == i + 1)) for j in range(dim)) for i in range(rank)
        ]
        self.coroots = self.simple  # simply laced, standard coordinates
        self.subsets = [
            frozenset(s)
            for mask in range(2**rank)
            for s in [[i for i in range(rank) if mask >> i & 1]]
        ]
        self._rel_cache: dict = {}

    def a_space_basis(self, levi: frozenset):
        """Basis of the central subspace of the Levi with simple roots levi."""
        dim = self.rank + 1
        # vectors orthogonal to the levi roots and to (1,...,1)
        constraints = [self.simple[i] for i in sorted(levi)] + [tuple(F(1) for _ in range(dim))]
        basis = []
        # nullspace by elimination on the constraint matrix
        m = len(constraints)
        rows = [[F(x) for x in row] for row in constraints]
        pivots = {}
        r = 0
        for col in range(dim):
            piv = next((i for i in range(r, m) if rows[i][col] != 0), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = 1 / rows[r][col]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(m):
                if i != r and rows[i][col] != 0:
                    f = rows[i][col]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots[col] = r
            r += 1
        free = [c for c in range(dim) if c not in pivots]
        for fc in free:
            vec = [F(0)] * dim
            vec[fc] = F(1)
            for col, row_idx in pivots.items():
                vec[col] = -rows[row_idx][fc]
            basis.append(tuple(vec))
        return basis

    def relative_basis(self, small: frozenset, large: frozenset):
        """Basis of a_small^large = a_small intersect (a_large)^perp."""
        key = (small, large)
        if key in self._rel_cache:
            return self._rel_cache[key]
        a_small = self.a_space_basis(small)
        a_large = self.a_space_basis(large)
        out = []
        for v in a_small:
            w = tuple(a - b for a, b in zip(v, _project_onto(a_large, v)))
            out.append(w)
        # remove linear dependence: project away previously accepted vectors
        basis = []
        for v in out:
            w = tuple(a - b for a, b in zip(v, _project_onto(basis, v)))
            if any(x != 0 for x in w):
                basis.append(w)
        self._rel_cache[key] = basis
        return basis

    def project_relative(self, vector, small: frozenset, large: frozenset):
        return _project_onto(self.relative_basis(small, large), vector)

    def tau(self, small: frozenset, large: frozenset, h) -> bool:
        """Chamber indicator: alpha(h) > 0 for alpha in large minus small."""
        vals = [_dot(self.simple[i], h) for i in sorted(large - small)]
        if any(v == 0 for v in vals):
            raise WallPoint("root functional vanishes at the sample")
        return all(v > 0 for v in vals)

    def tau_hat(self, small: frozenset, large: frozenset, h) -> bool:
        """Dual-cone indicator: relative fundamental coweights positive."""
        idxs = sorted(large - small)
        if not idxs:
            return True
        basis = self.relative_basis(small, large)
        proj = [_project_onto(basis, self.coroots[i]) for i in idxs]
        coords = _gram_inverse_apply(proj, h) if proj else []
        # <pi_a, h> for the dual basis pi of the projected coroots is the
        # coefficient vector of h in that projected-coroot basis
        if any(c == 0 for c in coords):
            raise WallPoint("coweight functional vanishes at the sample")
        return all(c > 0 for c in coords)


def _langlands_identities_at(poset: _TypeAPoset, small, large, h) -> bool:
    between = [q for q in poset.subsets if small <= q <= large]
    total_qr = 0
    total_pq = 0
    for q in between:
        hq = poset.project_relative(h, small, q)
        h_q = poset.project_relative(h, q, large)
        sign_qr = (-1) ** (len(large) - len(q))
        sign_pq = (-1) ** (len(q) - len(small))
        if poset.tau(small, q, hq) and poset.tau_hat(q, large, h_q):
            total_qr += sign_qr
        if poset.tau_hat(small, q, hq) and poset.tau(q, large, h_q):
            total_pq += sign_pq
    expect = 1 if small == large else 0
    return total_qr == expect and total_pq == expect


def random_relative_point(rank: int, small, large, rng, poset=None) -> tuple:
    """A random rational point of a_small^large (zero when it is trivial)."""
    poset = poset or _TypeAPoset(rank)
    basis = poset.relative_basis(frozenset(small), frozenset(large))
    dim = rank + 1
    if not basis:
        return tuple(F(0) for _ in range(dim))
    while True:
        v = [F(0)] * dim
        for b in basis:
            c = F(rng.randint(-9, 9), rng.randint(1, 4))
            for i, x in enumerate(b):
                v[i] += c * x
        if any(x != 0 for x in v):
            return tuple(v)


def verify_langlands(rank: int, sample_points=None, samples: int = 64, seed: int = 7) -> bool:
    """Check both alternating-sum identities on the type-A parabolic poset.

    sample_points, when given, must be a list of (small, large, h) triples
    with h in the relative subspace; otherwise random off-wall points are
    drawn for every nested pair.  Samples on a wall raise WallPoint.
    """
    if rank not in (1, 2, 3):
        raise ValueError("rank must be 1, 2 or 3")
    poset = _TypeAPoset(rank)
    if sample_points is not None:
        for small, large, h in sample_points:
            if not _langlands_identities_at(poset, frozenset(small), frozenset(large), h):
                return False
        return True
    rng = random.Random(seed)
    for small in poset.subsets:
        for large in poset.subsets:
            if not small <= large:
                continue
            count = 1 if small == large else samples
            for _ in range(count):
                while True:
                    h = random_relative_point(rank, small, large, rng, poset)
                    try:
                        ok = _langlands_identities_at(poset, small, large, h)
                        break
                    except WallPoint:
                        continue
                if not ok:
                    return False
    return True


# -- abstract inversion ---------------------------------------------------


@dataclass(frozen=True)
class PosetPairData:
    """Data of one nested pair P < Q: the relative simple roots."""

    indices: tuple  # 1-based ambient simple-root indices in I_P minus I_Q
    weights: tuple  # exponent weights p_a = 4 <rho_P^Q, a^v>


@dataclass(frozen=True)
class ParabolicPoset:
    """Standard parabolics of one classical group, ordered by inclusion.

    Elements are labelled by the subset I of simple-root indices CUT by the
    parabolic (so the group itself is the empty set and the Borel is all of
    them); P <= Q as parabolics means I_P >= I_Q as subsets.  n_weights
    are the stratum codimension offsets 2 dim U (ell - 1).
    """

    group: GroupSpec
    ell: int
    elements: tuple  # frozensets of 1-based indices
    n_weights: dict  # element -> n_P
    pair_data: dict  # (small_parabolic, large_parabolic) -> PosetPairData
    levi_indices: dict  # element -> ParabolicIndex

    def order_le(self, p, q) -> bool:
        """p <= q in the parabolic order (cut sets reverse-ordered)."""
        return q <= p


def _parabolic_index_for_cutset(g: GroupSpec, cut: frozenset) -> ParabolicIndex:
    """The composition-with-flags description of the parabolic cutting `cut`."""
    n, fam = g.n, g.family
    if fam == "u":
        positions = sorted(cut)
        comp = []
        prev = 0
        for p in positions:
            comp.append(p - prev)
            prev = p
        comp.append(n - prev)
        return ParabolicIndex(tuple(comp), ())
    if fam in ("so-odd", "sp"):
        last_in = n in cut
        positions = sorted(c for c in cut if c < n)
        comp = []
        prev = 0
        for p in positions:
            comp.append(p - prev)
            prev = p
        comp.append(n - prev)
        return ParabolicIndex(tuple(comp), (last_in,))
    raise UnsupportedFamily("posets are built for u, so-odd and sp families")


def build_parabolic_poset(g: GroupSpec, ell: int) -> ParabolicPoset:
    """All standard parabolics of g with the pair data the inversion needs."""
    if g.family not in ("u", "so-odd", "sp"):
        raise UnsupportedFamily("posets are built for u, so-odd and sp families")
    if g.n > 3:
        raise ValueError("poset construction is scoped to rank <= 3")
    rs = build_root_system(g)
    rank = len(rs.simple_roots)
    elements = [
        frozenset(i + 1 for i in range(rank) if mask >> i & 1) for mask in range(2**rank)
    ]
    n_weights = {}
    levi_indices = {}
    for cut in elements:
        idx = _parabolic_index_for_cutset(g, cut)
        prof = levi_profile(g, idx)
        n_weights[cut] = 2 * prof.dim_u * (ell - 1)
        levi_indices[cut] = idx
    pair_data = {}
    for small in elements:  # small parabolic = larger cut set
        for large in elements:
            if not large <= small or large == small:
                continue
            rel = sorted(small - large)
            rho = _relative_rho(rs, small, large)
            weights = []
            for a in rel:
                val = 4 * pairing(rho, rs.simple_coroots[a - 1])
                if val.denominator != 1 or val <= 0:
                    raise NonIntegerExponent(f"pair weight {val} not a positive integer")
                weights.append(int(val))
            pair_data[(small, large)] = PosetPairData(tuple(rel), tuple(weights))
    return ParabolicPoset(
        group=g,
        ell=ell,
        elements=tuple(elements),
        n_weights=n_weights,
        pair_data=pair_data,
        levi_indices=levi_indices,
    )


def _relative_rho(rs, small_cut: frozenset, large_cut: frozenset):
    """Half sum of positive roots in the large Levi outside the small one.

    Roots are classified by support: inside the Levi of a parabolic exactly
    when their support avoids the parabolic's cut set.
    """
    n = len(rs.positive_roots[0]) if rs.positive_roots else 0
    total = [F(0)] * n
    for beta in rs.positive_roots:
        coeffs = expand_in_simple_roots(beta, rs.simple_roots)
        support = {i + 1 for i, c in enumerate(coeffs) if c != 0}
        if support & large_cut:
            continue  # outside the large Levi
        if support & small_cut:
            for i, x in enumerate(beta):
                total[i] += F(x)
    return tuple(x / 2 for x in total)


def default_gauge_assignment(poset: ParabolicPoset) -> dict:
    """a0: each parabolic's Levi gauge series over the genus-ell surface."""
    out = {}
    for cut in poset.elements:
        prof = levi_profile(poset.group, poset.levi_indices[cut])
        out[cut] = bg_orientable(prof.betti, poset.ell)
    return out




def _relative_weight(rs, q_cut: frozenset, a: int):
    """Fundamental weight of the Levi cut by q_cut, dual to coroot a.

    The covector pairing delta with every Levi simple coroot and vanishing
    on the Levi's center; a must be a Levi simple index (not in q_cut).
    Only these weights induce the correct classes in Q/Z on topological
    types of Levi bundles: the ambient weights vanish on the wrong center.
    """
    n = len(rs.simple_coroots[0])
    rank = len(rs.simple_roots)
    levi_idx = [i for i in range(rank) if (i + 1) not in q_cut]
    rows = [list(rs.simple_coroots[i]) for i in levi_idx]
    rhs = [F(int(i + 1 == a)) for i in levi_idx]
    # center of the Levi: common kernel of the Levi simple roots
    center = _nullspace([rs.simple_roots[i] for i in levi_idx], n)
    rows += [list(z) for z in center]
    rhs += [F(0)] * len(center)
    return tuple(_solve(rows, rhs))


def _nullspace(covectors, n):
    """Basis of the common kernel of the given covectors in Q^n."""
    m = len(covectors)
    rows = [[F(x) for x in cv] for cv in covectors]
    pivots = {}
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots[col] = r
        r += 1
    out = []
    for free in range(n):
        if free in pivots:
            continue
        vec = [F(0)] * n
        vec[free] = F(1)
        for col, row_idx in pivots.items():
            vec[col] = -rows[row_idx][free]
        out.append(tuple(vec))
    return out


def _b0_at_element(poset: ParabolicPoset, a0: dict, rs, q_cut: frozenset, rep) -> RatFun:
    """Closed inversion formula at one element, for the type represented by rep.

    b0(Q) = sum over parabolics P <= Q (cut sets p_cut >= q_cut) of

        (-1)^{|p_cut - q_cut|} a0(P) t^{n_P - n_Q}
        prod_a t^{p_a <x_a>} / (1 - t^{p_a}),

    the product over a in p_cut - q_cut with x_a the class of rep under
    the Levi-relative fundamental weight of a.
    """
    acc = RatFun.zero()
    for p_cut in poset.elements:
        if not q_cut <= p_cut:
            continue
        shift = poset.n_weights[p_cut] - poset.n_weights[q_cut]
        if p_cut == q_cut:
            term = a0[p_cut] * RatFun.t_power(shift)
        else:
            data = poset.pair_data[(p_cut, q_cut)]
            den = Poly.one()
            twist = F(0)
            for a, p in zip(data.indices, data.weights):
                x = _bracket(pairing(_relative_weight(rs, q_cut, a), rep))
                den = den * one_minus_t(p)
                twist += p * x
            # individual p<x> may be fractional; the total twist may not be
            if twist.denominator != 1:
                raise NonIntegerExponent(f"total twist {twist} not integral")
            term = a0[p_cut] * RatFun(Poly.t_power(shift + int(twist)), den)
        acc = acc + term if len(p_cut - q_cut) % 2 == 0 else acc - term
    return acc


def closed_inverse(poset: ParabolicPoset, a0: dict, topclass: int) -> dict:
    """b0 at every poset element for (the image of) the topological class."""
    g = poset.group
    rs = build_root_system(g)
    rep = pi1_representative(g, topclass)
    return {q: _b0_at_element(poset, a0, rs, q, rep) for q in poset.elements}


def forward_residual(poset: ParabolicPoset, a0: dict, b0_top: RatFun, topclass: int, order: int):
    """Residual of the defining relation at the group element, as a series.

    The relation writes a0(G) as b0(G) plus, for every proper parabolic P,
    the sum of b0(P, type) t^{n_P + 4 rho_P(slope)} over topological types
    of P-Levi bundles inducing the given class, restricted to types whose
    slope vector lies in P's open chamber.  Types are enumerated as actual
    lattice points rep + sum m_a coroot_a; the enumeration box is finite
    because on the chamber every fundamental-coweight coordinate
    x_a + m_a is nonnegative and the exponent is n_P + sum p_a (x_a + m_a).
    """
    if order < 0:
        raise TruncationTooSmall("order must be nonnegative")
    g = poset.group
    rs = build_root_system(g)
    rep = pi1_representative(g, topclass)
    ambient = rs.fundamental_weights
    top = frozenset()
    rhs = [0] * (order + 1)

    for p_cut in poset.elements:
        if p_cut == top:
            for i, x in enumerate(series_expand(b0_top, order).coeffs):
                rhs[i] += x
            continue
        n_p = poset.n_weights[p_cut]
        if n_p > order:
            continue
        idxs = sorted(p_cut)
        coroots = [rs.simple_coroots[a - 1] for a in idxs]
        rho = _relative_rho(rs, p_cut, top)
        p_weights = []
        for cv in coroots:
            w = 4 * pairing(rho, cv)
            if w.denominator != 1 or w <= 0:
                raise NonIntegerExponent("forward weights must be positive integers")
            p_weights.append(int(w))
        base_vals = [pairing(ambient[a - 1], rep) for a in idxs]
        lo = [ceil(-x) for x in base_vals]
        hi = [(F(order - n_p, w) - x).__floor__() for w, x in zip(p_weights, base_vals)]
        levi_span = _levi_coroot_basis(rs, p_cut)
        levi_weight_idx = [i + 1 for i in range(len(rs.simple_roots)) if (i + 1) not in p_cut]
        rel_weights = {a: _relative_weight(rs, p_cut, a) for a in levi_weight_idx}
        b0_cache: dict = {}

        def lattice_point(m_vec):
            x = [F(a) for a in rep]
            for m, cv in zip(m_vec, coroots):
                for i, c in enumerate(cv):
                    x[i] += m * c
            return tuple(x)

        def visit(pos, m_vec):
            if pos == len(idxs):
                x = lattice_point(m_vec)
                center_part = tuple(
                    a - b for a, b in zip(x, _project_onto(levi_span, x))
                )
                if any(
                    sum((F(c) * s for c, s in zip(rs.simple_roots[a - 1], center_part)), F(0))
                    <= 0
                    for a in idxs
                ):
                    return
                exponent = F(n_p) + 4 * pairing(rho, x)
                if exponent.denominator != 1 or exponent < 0:
                    raise NonIntegerExponent(f"lattice exponent {exponent}")
                e = int(exponent)
                if e > order:
                    return
                key = tuple(_frac01(pairing(rel_weights[a], x)) for a in levi_weight_idx)
                if key not in b0_cache:
                    b0_cache[key] = _b0_at_element(poset, a0, rs, p_cut, x)
                for i, c in enumerate(series_expand(b0_cache[key], order - e).coeffs):
                    rhs[e + i] += c
                return
            for m in range(lo[pos], hi[pos] + 1):
                visit(pos + 1, m_vec + (m,))

        visit(0, ())

    lhs = series_expand(a0[top], order)
    return CoeffVector(order, tuple(a - b for a, b in zip(lhs.coeffs, rhs)))


def _levi_coroot_basis(rs, cut: frozenset):
    """Simple coroots of the Levi: those not in the cut set."""
    rank = len(rs.simple_roots)
    return [rs.simple_coroots[i] for i in range(rank) if (i + 1) not in cut]


def invert_abstract(poset: ParabolicPoset, a0: dict, topclass: int, truncation: int):
    """Closed-formula inverse of a0 plus the forward-relation residual.

    Returns (b0, residual): b0 maps each poset element to its inverted
    series for (the image of) the given topological class; the residual is
    the truncated difference between a0 at the group element and the
    lattice re-summation of the defining relation.
    """
    b0 = closed_inverse(poset, a0, topclass)
    residual = forward_residual(poset, a0, b0[frozenset()], topclass, truncation)
    return b0, residual
