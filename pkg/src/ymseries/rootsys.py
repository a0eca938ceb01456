"""Root data for the classical groups U(n), SU(n), SO(2n+1), SO(2n), Sp(n).

Covectors (roots, weights) live in the basis theta_1..theta_n dual to the
coordinate basis e_1..e_n of the maximal torus; vectors (coroots, fundamental
group representatives) live in the e-basis.  Both are stored as tuples of
exact rationals of length n, so a pairing is a plain dot product.

The fundamental weights returned here are dual to the simple coroots and
orthogonal to the central directions; evaluated on a representative of a
class in pi_1 of the group they produce the rational class mod Z that drives
the twist exponents of the closed series formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


UNITARY = "u"
SPECIAL_UNITARY = "su"
SO_ODD = "so-odd"
SO_EVEN = "so-even"
SYMPLECTIC = "sp"
SPIN_ODD = "spin-odd"
SPIN_EVEN = "spin-even"

FAMILIES = (UNITARY, SPECIAL_UNITARY, SO_ODD, SO_EVEN, SYMPLECTIC, SPIN_ODD, SPIN_EVEN)

# families whose pi_1 is Z/2, carried as a Stiefel-Whitney bit
SO_LIKE = (SO_ODD, SO_EVEN)
# families with trivial pi_1
SIMPLY_CONNECTED = (SYMPLECTIC, SPIN_ODD, SPIN_EVEN)


class UnsupportedRank(ValueError):
    """Rank outside the family's validity range."""


class UnsupportedFamily(ValueError):
    """Operation not defined for this group family."""


class DimensionMismatch(ValueError):
    """Covector and vector of different coordinate dimensions."""


@dataclass(frozen=True)
class GroupSpec:
    """A classical group family together with its rank parameter n.

    The rank parameter follows the family naming: GroupSpec("so-odd", 2) is
    SO(5), GroupSpec("sp", 3) is Sp(3), GroupSpec("u", 4) is U(4).
    """

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedFamily(f"unknown family {self.family!r}")
        min_n = {SO_EVEN: 2, SPIN_EVEN: 2, SPECIAL_UNITARY: 2}.get(self.family, 1)
        if self.n < min_n:
            raise UnsupportedRank(f"{self.family} requires n >= {min_n}, got {self.n}")

    def describe(self) -> str:
        fam, n = self.family, self.n
        return {
            UNITARY: f"U({n})",
            SPECIAL_UNITARY: f"SU({n})",
            SO_ODD: f"SO({2 * n + 1})",
            SO_EVEN: f"SO({2 * n})",
            SYMPLECTIC: f"Sp({n})",
            SPIN_ODD: f"Spin({2 * n + 1})",
            SPIN_EVEN: f"Spin({2 * n})",
        }[fam]


@dataclass(frozen=True)
class TopClass:
    """Topological class of a bundle: an element of pi_1 of the group.

    For u/su this is the degree (any integer), for so-odd/so-even the
    second Stiefel-Whitney bit (0 or 1), and for sp/spin families the only
    value 0.
    """

    value: int = 0


def validate_topclass(g: GroupSpec, c) -> int:
    if isinstance(c, TopClass):
        c = c.value
    if g.family in SO_LIKE:
        if c not in (0, 1):
            raise ValueError(f"{g.describe()} carries a w2 bit, got {c}")
    elif g.family in SIMPLY_CONNECTED:
        if c != 0:
            raise ValueError(f"{g.describe()} is simply connected, got class {c}")
    return c


@dataclass(frozen=True)
class RootSystem:
    n: int
    simple_roots: tuple
    positive_roots: tuple
    simple_coroots: tuple
    fundamental_weights: tuple


def pairing(covector, vector) -> Fraction:
    """Exact dot product between a theta-basis covector and an e-basis vector."""
    if len(covector) != len(vector):
        raise DimensionMismatch(f"{len(covector)} != {len(vector)}")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(covector, vector)), Fraction(0))


def _vec(n, entries: dict) -> tuple:
    v = [Fraction(0)] * n
    for i, val in entries.items():
        v[i] = Fraction(val)
    return tuple(v)


def _simple_data(g: GroupSpec):
    """Simple roots (theta-basis) and simple coroots (e-basis)."""
    n = g.n
    fam = g.family
    a_chain = [_vec(n, {i: 1, i + 1: -1}) for i in range(n - 1)]
    if fam in (UNITARY, SPECIAL_UNITARY):
        return a_chain, list(a_chain)
    if fam in (SO_ODD, SPIN_ODD):
        roots = a_chain + [_vec(n, {n - 1: 1})]
        coroots = list(a_chain) + [_vec(n, {n - 1: 2})]
        return roots, coroots
    if fam in (SO_EVEN, SPIN_EVEN):
        roots = a_chain + [_vec(n, {n - 2: 1, n - 1: 1})]
        coroots = list(a_chain) + [_vec(n, {n - 2: 1, n - 1: 1})]
        return roots, coroots
    if fam == SYMPLECTIC:
        roots = a_chain + [_vec(n, {n - 1: 2})]
        coroots = list(a_chain) + [_vec(n, {n - 1: 1})]
        return roots, coroots
    raise UnsupportedFamily(fam)


def _close_under_reflections(simple_roots, simple_coroots):
    """All roots, generated from the simple ones by simple reflections."""
    roots = set(simple_roots)
    frontier = list(simple_roots)
    while frontier:
        nxt = []
        for beta in frontier:
            for alpha, alpha_v in zip(simple_roots, simple_coroots):
                k = pairing(beta, alpha_v)
                img = tuple(b - k * a for b, a in zip(beta, alpha))
                if img not in roots:
                    roots.add(img)
                    nxt.append(img)
        frontier = nxt
    return roots


def expand_in_simple_roots(beta, simple_roots):
    """Coefficients of beta in the simple-root basis, or None."""
    n = len(beta)
    s = len(simple_roots)
    # Gaussian elimination on the n x (s+1) system
    rows = [[Fraction(simple_roots[j][i]) for j in range(s)] + [Fraction(beta[i])] for i in range(n)]
    pivots = []
    r = 0
    for col in range(s):
        piv = next((i for i in range(r, n) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    for i in range(r, n):
        if rows[i][s] != 0:
            return None
    coeffs = [Fraction(0)] * s
    for i, col in enumerate(pivots):
        coeffs[col] = rows[i][s]
    return coeffs


def _fundamental_weights(g: GroupSpec, simple_coroots):
    """Covectors dual to the simple coroots, vanishing on the center.

    For u/su the coroots span only the trace-zero hyperplane, so the duality
    conditions are completed by requiring each weight to kill the central
    direction e_1 + ... + e_n; this is the choice under which the weights
    induce well-defined classes in Q/Z on pi_1 of the group.
    """
    n = g.n
    s = len(simple_coroots)
    constraints = [list(v) for v in simple_coroots]
    rhs_rows = [[Fraction(int(i == j)) for j in range(s)] for i in range(s)]
    if g.family in (UNITARY, SPECIAL_UNITARY):
        constraints.append([Fraction(1)] * n)
        rhs_rows.append([Fraction(0)] * s)
    m = len(constraints)
    weights = []
    for j in range(s):
        rows = [list(constraints[i]) + [rhs_rows[i][j]] for i in range(m)]
        sol = _solve_square(rows, n)
        weights.append(tuple(sol))
    return weights


def _solve_square(rows, n):
    """Solve an m x n full-column-rank system given as rows [A | b]."""
    m = len(rows)
    r = 0
    pivots = []
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
    if r < n:
        raise ValueError("system is rank deficient")
    for i in range(r, m):
        if rows[i][n] != 0:
            raise ValueError("inconsistent system")
    sol = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        sol[col] = rows[i][n]
    return sol


def build_root_system(g: GroupSpec) -> RootSystem:
    """Simple roots, positive roots, coroots and fundamental weights of g."""
    simple_roots, simple_coroots = _simple_data(g)
    all_roots = _close_under_reflections(simple_roots, simple_coroots)
    positive = []
    for beta in all_roots:
        coeffs = expand_in_simple_roots(beta, simple_roots)
        if coeffs is not None and all(c >= 0 for c in coeffs):
            positive.append(beta)
    positive.sort()
    weights = _fundamental_weights(g, simple_coroots)
    return RootSystem(
        n=g.n,
        simple_roots=tuple(simple_roots),
        positive_roots=tuple(positive),
        simple_coroots=tuple(simple_coroots),
        fundamental_weights=tuple(weights),
    )


def _frac01(x: Fraction) -> Fraction:
    """Representative of x mod Z in [0, 1)."""
    return x - (x.numerator // x.denominator)


def pi1_representative(g: GroupSpec, c: int) -> tuple:
    """A lift of the class c in pi_1 to the coweight lattice of the torus.

    Degree-c unitary bundles lift to c*e_1; the nontrivial SO bundle lifts
    to e_n; simply connected families lift to 0.
    """
    validate_topclass(g, c)
    n = g.n
    if g.family in (UNITARY, SPECIAL_UNITARY):
        return _vec(n, {0: c})
    if g.family in SO_LIKE:
        return _vec(n, {n - 1: c})
    return _vec(n, {})


def weight_on_pi1(g: GroupSpec, i: int, c: int) -> Fraction:
    """Class of the i-th fundamental weight on c in Q/Z, as a value in [0,1).

    i is 1-based.  For u the value is -i*c/n mod 1 (the weights kill the
    central direction); for so-odd it is c/2 at i = n and 0 below; for
    so-even it is -c/2 at i = n-1 and c/2 at i = n; symplectic and spin
    groups have trivial pi_1.
    """
    if g.family == SPECIAL_UNITARY:
        raise UnsupportedFamily("su classes are handled through the u series")
    if not 1 <= i <= g.n:
        raise ValueError(f"simple root index {i} out of range 1..{g.n}")
    validate_topclass(g, c)
    n = g.n
    if g.family == UNITARY:
        return _frac01(Fraction(-i * c, n))
    if g.family == SO_ODD:
        return _frac01(Fraction(c, 2)) if i == n else Fraction(0)
    if g.family == SO_EVEN:
        if i == n - 1:
            return _frac01(Fraction(-c, 2))
        if i == n:
            return _frac01(Fraction(c, 2))
        return Fraction(0)
    return Fraction(0)


def root_system_to_json(rs: RootSystem) -> dict:
    def enc(vectors):
        return [[str(x) for x in v] for v in vectors]

    return {
        "n": rs.n,
        "simple_roots": enc(rs.simple_roots),
        "positive_roots": enc(rs.positive_roots),
        "simple_coroots": enc(rs.simple_coroots),
        "fundamental_weights": enc(rs.fundamental_weights),
    }
