"""Combinatorics of Yang-Mills strata over nonorientable surfaces.

Pulling a connection back to the orientable double cover turns the deck
transformation into an involution tau on the fundamental Weyl chamber; the
strata of the nonorientable functional are indexed by tau-fixed chamber
vectors subject to family-specific integrality.  This module implements
tau, enumerates the index sets of Yang-Mills types, and classifies each
point's connected components: how many there are, which bundle (through
the second Stiefel-Whitney class) each lives on, and the ordered list of
twisted-variety factors its reduced representation variety splits into.

No numeric series are attached to the twisted factors; the reports are
structural, to be filled by a series provider if one ever exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rootsys import (
    SO_EVEN,
    SO_ODD,
    SYMPLECTIC,
    UNITARY,
    GroupSpec,
    UnsupportedFamily,
)

F = Fraction


class InvalidPoint(ValueError):
    """Point data outside the family's nonorientable index set."""


def chamber_involution(g: GroupSpec, mu) -> tuple:
    """The involution tau on chamber vectors.

    Unitary chambers reverse and negate; odd-orthogonal and symplectic
    chambers are pointwise fixed; the even-orthogonal chamber flips the
    sign of the last coordinate exactly when n is odd.
    """
    v = tuple(F(x) for x in mu)
    if len(v) != g.n:
        raise ValueError(f"chamber vector must have length {g.n}")
    fam = g.family
    if fam == UNITARY:
        return tuple(-x for x in reversed(v))
    if fam in (SO_ODD, SYMPLECTIC):
        return v
    if fam == SO_EVEN:
        if g.n % 2 == 1:
            return v[:-1] + (-v[-1],)
        return v
    raise UnsupportedFamily(fam)


@dataclass(frozen=True)
class NonorientablePoint:
    """Index of a nonorientable Yang-Mills stratum.

    Block j of size n_j carries the integer label k_j; the chamber value of
    the block is 2 k_j / n_j - 1 for symplectic groups and 2 k_j / n_j for
    orthogonal ones.  zero_tail marks a final block sitting at chamber
    value 0 (its label is stored as 0); minus_last marks the
    even-orthogonal shape whose last coordinate is negated.
    """

    family: str
    composition: tuple
    labels: tuple
    zero_tail: bool
    surface_i: int
    minus_last: bool = False

    def __post_init__(self):
        if self.surface_i not in (1, 2):
            raise InvalidPoint("surface_i must be 1 or 2")
        comp, labels = self.composition, self.labels
        if len(comp) != len(labels) or not comp or any(p < 1 for p in comp):
            raise InvalidPoint("composition and labels must align and be nonempty")
        if self.zero_tail and labels[-1] != 0:
            raise InvalidPoint("a zero tail stores label 0")
        body = list(zip(comp, labels))
        if self.zero_tail:
            body = body[:-1]
        slopes = [F(k, p) for p, k in body]
        fam = self.family
        if fam == SYMPLECTIC:
            if self.minus_last:
                raise InvalidPoint("minus_last is an even-orthogonal shape")
            if any(s <= F(1, 2) for s in slopes):
                raise InvalidPoint("symplectic slopes must exceed 1/2")
            if any(slopes[i] <= slopes[i + 1] for i in range(len(slopes) - 1)):
                raise InvalidPoint("slopes must strictly decrease")
        elif fam == SO_ODD:
            if self.minus_last:
                raise InvalidPoint("minus_last is an even-orthogonal shape")
            if any(s <= 0 for s in slopes):
                raise InvalidPoint("slopes before the tail must be positive")
            if any(slopes[i] <= slopes[i + 1] for i in range(len(slopes) - 1)):
                raise InvalidPoint("slopes must strictly decrease")
        elif fam == SO_EVEN:
            self._check_so_even(slopes)
        else:
            raise UnsupportedFamily(fam)

    def _check_so_even(self, slopes):
        n = sum(self.composition)
        comp, labels = self.composition, self.labels
        if n % 2 == 1:
            # only tau-fixed vectors end in 0: the zero tail is mandatory
            if not self.zero_tail or self.minus_last:
                raise InvalidPoint("odd even-orthogonal rank forces a plain zero tail")
            if any(s <= 0 for s in slopes) or any(
                slopes[i] <= slopes[i + 1] for i in range(len(slopes) - 1)
            ):
                raise InvalidPoint("slopes must strictly decrease to the tail")
            return
        if self.zero_tail:
            if self.minus_last or comp[-1] < 2:
                raise InvalidPoint("zero tail needs a plain block of size >= 2")
            if any(s <= 0 for s in slopes) or any(
                slopes[i] <= slopes[i + 1] for i in range(len(slopes) - 1)
            ):
                raise InvalidPoint("slopes must strictly decrease to the tail")
        elif comp[-1] == 1 and not self.minus_last:
            body, last = slopes[:-1], slopes[-1]
            if any(s <= 0 for s in body) or any(
                body[i] <= body[i + 1] for i in range(len(body) - 1)
            ):
                raise InvalidPoint("slopes must strictly decrease")
            if body and body[-1] <= abs(last):
                raise InvalidPoint("the final label must be dominated")
            if not body and len(comp) == 1:
                raise InvalidPoint("rank >= 2 has at least two coordinates")
        else:
            if self.minus_last and comp[-1] < 2:
                raise InvalidPoint("minus_last needs a final block of size >= 2")
            if any(s <= 0 for s in slopes) or any(
                slopes[i] <= slopes[i + 1] for i in range(len(slopes) - 1)
            ):
                raise InvalidPoint("slopes must strictly decrease and stay positive")

    def chamber_vector(self) -> tuple:
        """The tau-fixed chamber vector the point indexes."""
        fam = self.family
        out = []
        last = len(self.composition) - 1
        for j, (p, k) in enumerate(zip(self.composition, self.labels)):
            if fam == SYMPLECTIC:
                val = F(2 * k, p) - 1 if not (self.zero_tail and j == last) else F(0)
            else:
                val = F(2 * k, p)
            if self.minus_last and j == last:
                out.extend([val] * (p - 1) + [-val])
            else:
                out.extend([val] * p)
        return tuple(out)


@dataclass(frozen=True)
class TwistedU:
    """Conjugation-twisted unitary representation variety factor."""

    n: int
    k: int

    def render(self, surface="l,i") -> str:
        return f"M~({surface};{self.n},{self.k})"

    def to_json(self) -> dict:
        return {"kind": "twisted_u", "n": self.n, "k": self.k}


@dataclass(frozen=True)
class TwistedO:
    """Determinant-twisted orthogonal factor with its component sign."""

    size: int  # the m of O(m)
    det: int  # +1 or -1: determinant constraint on the twisting element
    sign: int  # +1 or -1: which obstruction component

    def render(self, surface="l,i") -> str:
        d = "+" if self.det == 1 else "-"
        s = "+" if self.sign == 1 else "-"
        return f"VO({surface};{self.size};det{d};comp{s})"

    def to_json(self) -> dict:
        return {"kind": "twisted_o", "size": self.size, "det": self.det, "sign": self.sign}


@dataclass(frozen=True)
class FlatSp:
    """Flat symplectic tail factor."""

    n: int

    def render(self, surface="l,i") -> str:
        return f"M(Sp({self.n}))"

    def to_json(self) -> dict:
        return {"kind": "flat_sp", "n": self.n}


@dataclass(frozen=True)
class Component:
    w2: int | None  # Stiefel-Whitney bit; None where pi_1 is trivial
    factors: tuple

    @property
    def bundle_label(self) -> str:
        if self.w2 is None or self.w2 == 0:
            return "trivial_bundle"
        return "nontrivial_bundle"


@dataclass(frozen=True)
class ComponentReport:
    point: NonorientablePoint
    component_count: int
    components: tuple
    validity: dict

    def to_json(self) -> dict:
        return {
            "group": self._group_name(),
            "point": {
                "composition": list(self.point.composition),
                "labels": list(self.point.labels),
                "zero_tail": self.point.zero_tail,
                "minus_last": self.point.minus_last,
            },
            "surface_i": self.point.surface_i,
            "components": [
                {"w2": comp.w2, "factors": [f.to_json() for f in comp.factors]}
                for comp in self.components
            ],
            "validity": dict(self.validity),
        }

    def _group_name(self) -> str:
        n = sum(self.point.composition)
        fam = self.point.family
        return GroupSpec(fam, n).describe()


def enumerate_nonorientable_points(g: GroupSpec, i: int, bound: int):
    """All index-set points of g over the surface type i with |k_j| <= bound.

    Candidate block data is generated by brute force within the label bound
    and filtered through the point constructor, which owns the family's
    chamber constraints.
    """
    if i not in (1, 2):
        raise ValueError("i must be 1 or 2")
    fam, n = g.family, g.n
    if fam not in (SYMPLECTIC, SO_ODD, SO_EVEN):
        raise UnsupportedFamily(fam)
    found = {}

    def try_point(comp, labels, zero_tail, minus_last=False):
        try:
            pt = NonorientablePoint(fam, tuple(comp), tuple(labels), zero_tail, i, minus_last)
        except InvalidPoint:
            return
        found[(pt.composition, pt.labels, pt.zero_tail, pt.minus_last)] = pt

    def terminal(comp, labels):
        if fam == SYMPLECTIC:
            try_point(comp, labels, labels[-1] == 0)
        elif fam == SO_ODD:
            try_point(comp, labels, labels[-1] == 0)
        else:
            if labels[-1] == 0 and comp[-1] >= 2:
                try_point(comp, labels, True)
            elif comp[-1] >= 2:
                try_point(comp, labels, False, False)
                try_point(comp, labels, False, True)
            else:
                try_point(comp, labels, False)

    def extend(comp, labels, remaining):
        if remaining == 0:
            terminal(comp, labels)
            return
        for part in range(1, remaining + 1):
            is_final = part == remaining
            negatives_ok = fam == SO_EVEN and n % 2 == 0 and is_final and part == 1
            lo = -bound if negatives_ok else 0
            for k in range(bound, lo - 1, -1):
                extend(comp + [part], labels + [k], remaining - part)
        # a zero tail may absorb the whole remainder even mid-sequence
        if fam in (SYMPLECTIC, SO_EVEN):
            try_point(comp + [remaining], labels + [0], True)

    extend([], [], n)
    return sorted(
        found.values(),
        key=lambda p: (len(p.composition), p.composition, p.labels, p.minus_last, p.zero_tail),
    )


def classify_components(g: GroupSpec, p: NonorientablePoint) -> ComponentReport:
    """Component count, bundle classes, and twisted factors of one stratum.

    Connectivity of the individual factors holds for ell >= 2i (and the
    orthogonal factor splits into its two signed parts for ell >= 2 and
    size > 2); these thresholds are recorded in the validity block rather
    than enforced.
    """
    if p.family != g.family or sum(p.composition) != g.n:
        raise InvalidPoint("point does not belong to this group")
    fam, n, i = g.family, g.n, p.surface_i
    comp, labels = p.composition, p.labels
    validity = {"l_min": 2 * i}
    if fam == SYMPLECTIC:
        if p.zero_tail:
            factors = [TwistedU(a, k) for a, k in zip(comp[:-1], labels[:-1])]
            factors.append(FlatSp(comp[-1]))
        else:
            factors = [TwistedU(a, k) for a, k in zip(comp, labels)]
        return ComponentReport(p, 1, (Component(None, tuple(factors)),), validity)
    if fam == SO_ODD:
        if not p.zero_tail:
            w2 = (sum(labels) + i * n * (n + 1) // 2) % 2
            factors = tuple(TwistedU(a, -k) for a, k in zip(comp, labels))
            return ComponentReport(p, 1, (Component(w2, factors),), validity)
        m = comp[-1]
        body = tuple(TwistedU(a, -k) for a, k in zip(comp[:-1], labels[:-1]))
        det = (-1) ** (n - m)
        exponent = sum(labels[:-1]) + i * (n - m) * (n - m - 1) // 2
        comps = []
        for w2, outer in ((0, 1), (1, -1)):
            sign = outer * (-1) ** exponent
            comps.append(Component(w2, body + (TwistedO(2 * m + 1, det, sign),)))
        return ComponentReport(p, 2, tuple(comps), validity)
    if fam == SO_EVEN:
        m_half = n // 2  # the m of SO(4m) / SO(4m+2)
        if n % 2 == 1:
            mr = comp[-1]
            body = tuple(TwistedU(a, -k) for a, k in zip(comp[:-1], labels[:-1]))
            det = (-1) ** (mr - 1)
            exponent = sum(labels[:-1]) + i * m_half + i * mr * (mr - 1) // 2
            comps = []
            for w2, outer in ((0, 1), (1, -1)):
                sign = outer * (-1) ** exponent
                comps.append(Component(w2, body + (TwistedO(2 * mr, det, sign),)))
            return ComponentReport(p, 2, tuple(comps), validity)
        if p.zero_tail:
            mr = comp[-1]
            body = tuple(TwistedU(a, -k) for a, k in zip(comp[:-1], labels[:-1]))
            det = (-1) ** mr
            exponent = sum(labels[:-1]) + i * m_half + i * mr * (mr + 1) // 2
            comps = []
            for w2, outer in ((0, 1), (1, -1)):
                sign = outer * (-1) ** exponent
                comps.append(Component(w2, body + (TwistedO(2 * mr, det, sign),)))
            return ComponentReport(p, 2, tuple(comps), validity)
        w2 = (sum(labels) + i * m_half) % 2
        factors = tuple(TwistedU(a, -k) for a, k in zip(comp, labels))
        return ComponentReport(p, 1, (Component(w2, factors),), validity)
    raise UnsupportedFamily(fam)


def decomposition_render(report: ComponentReport) -> str:
    """Human-readable product decomposition, one line per component."""
    lines = []
    for comp in report.components:
        body = " x ".join(f.render() for f in comp.factors) if comp.factors else "(point)"
        if report.component_count == 2:
            tag = "+" if comp.w2 == 0 else "-"
            lines.append(f"{tag}: {body}")
        else:
            lines.append(body)
    return "\n".join(lines)


def tau_fixed_unrealized(g: GroupSpec, i: int, bound: int):
    """Diagnostic: tau-fixed quantized chamber vectors carrying no stratum.

    Candidates have block values a_j / n_j with positive integer numerators
    (strictly decreasing, optionally followed by a zero block where the
    family allows one); the realized ones are exactly those with every
    a_j + n_j even (symplectic) or a_j even (orthogonal).  Returns the
    unrealized candidates as chamber-value block lists, numerators bounded
    by the given bound.  Listing only; nothing downstream consumes this.
    """
    fam, n = g.family, g.n
    if fam not in (SYMPLECTIC, SO_ODD, SO_EVEN):
        raise UnsupportedFamily(fam)
    out = []

    def realized(part, numerator):
        if fam == SYMPLECTIC:
            return (numerator + part) % 2 == 0
        return numerator % 2 == 0

    def rec(blocks, remaining):
        # blocks: list of (size, numerator) with value numerator/size
        if blocks:
            allow_tail = not (fam == SO_EVEN and n % 2 == 0 and remaining < 2)
            if remaining == 0 or (remaining >= 1 and allow_tail):
                candidate = blocks + ([(remaining, 0)] if remaining else [])
                if fam == SO_EVEN and n % 2 == 1 and (not candidate or candidate[-1][1] != 0):
                    pass
                elif sum(b[0] for b in candidate) == n:
                    if not all(realized(p, a) for p, a in candidate if a != 0):
                        out.append(tuple((p, F(a, p)) for p, a in candidate))
        for part in range(1, remaining + 1):
            prev = F(blocks[-1][1], blocks[-1][0]) if blocks else None
            for a in range(1, bound + 1):
                val = F(a, part)
                if prev is not None and val >= prev:
                    continue
                if fam == SYMPLECTIC and val <= 0:
                    continue
                rec(blocks + [(part, a)], remaining - part)

    rec([], n)
    dedup = sorted(set(out))
    return dedup
