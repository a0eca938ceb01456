"""Exact univariate arithmetic in the formal variable t.

Everything downstream is a rational function of t with integer polynomial
numerator and denominator, so this module provides exactly three value types:

  Poly        dense polynomial with arbitrary-precision integer coefficients
  RatFun      normalized quotient of two Poly values
  CoeffVector truncated power-series coefficients of a RatFun

All values are immutable and all arithmetic is exact.  Polynomial gcds are
computed with a fraction-free subresultant remainder sequence, so intermediate
coefficient growth stays bounded without ever leaving the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class ZeroDenominator(ZeroDivisionError):
    """Attempt to build a rational function with denominator zero."""


class DivisionByZero(ZeroDivisionError):
    """Division of rational functions by the zero function."""


class PoleAtZero(ValueError):
    """Series expansion requested for a function with a pole at t = 0."""


class NonIntegerCoefficient(ValueError):
    """A power-series coefficient came out non-integral.

    Every series this package produces is a Poincare series, so a fractional
    coefficient always indicates a transcription bug upstream; we abort
    instead of rounding.
    """


class ParseError(ValueError):
    """Malformed plain-text polynomial or rational function."""


class Poly:
    """Dense univariate polynomial over the integers.

    ``coeffs[i]`` is the coefficient of t**i; the top coefficient is nonzero
    unless the polynomial is zero (empty tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @staticmethod
    def const(c: int) -> "Poly":
        return Poly((c,))

    @staticmethod
    def t_power(e: int, c: int = 1) -> "Poly":
        """The monomial c * t**e."""
        if e < 0:
            raise ValueError("negative exponent")
        return Poly((0,) * e + (c,))

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def content(self) -> int:
        """gcd of all coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
            if g == 1:
                break
        return g

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return Poly(out)

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: int) -> "Poly":
        return Poly(tuple(c * x for x in self.coeffs))

    def shift(self, e: int) -> "Poly":
        """Multiply by t**e."""
        if self.is_zero:
            return self
        return Poly((0,) * e + self.coeffs)

    def divexact(self, other: "Poly") -> "Poly":
        """Exact polynomial division; other must divide self exactly."""
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return self
        rem = list(self.coeffs)
        lead = other.leading
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            raise ValueError("not an exact division")
        out = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree]
            if c % lead != 0:
                raise ValueError("not an exact division")
            q = c // lead
            out[k] = q
            if q:
                for j, cb in enumerate(other.coeffs):
                    rem[k + j] -= q * cb
        if any(rem[: other.degree]):
            raise ValueError("not an exact division")
        return Poly(out)

    def divexact_int(self, c: int) -> "Poly":
        return Poly(tuple(x // c for x in self.coeffs))

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __repr__(self):
        return f"Poly({render_poly(self)!r})"


def _pseudo_rem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of a by b: lc(b)**(deg a - deg b + 1) * a mod b."""
    rem = list(a.coeffs)
    db, lb = b.degree, b.leading
    e = a.degree - db + 1
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        lead = rem[-1]
        rem = [lb * c for c in rem]
        k = len(rem) - 1 - db
        for j, cb in enumerate(b.coeffs):
            rem[k + j] -= lead * cb
        rem.pop()
        e -= 1
    scale = lb ** max(e, 0)
    return Poly([scale * c for c in rem])


def _sign_normalize(p: Poly) -> Poly:
    return -p if p.leading < 0 else p


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd with positive leading coefficient.

    Subresultant remainder sequence on the primitive parts; the integer
    contents are folded back in at the end.
    """
    if a.is_zero:
        return _sign_normalize(b)
    if b.is_zero:
        return _sign_normalize(a)
    ca, cb = a.content(), b.content()
    c = gcd(ca, cb)
    A, B = a.divexact_int(ca), b.divexact_int(cb)
    if A.degree < B.degree:
        A, B = B, A
    g, h = 1, 1
    while True:
        d = A.degree - B.degree
        R = _pseudo_rem(A, B)
        if R.is_zero:
            break
        if R.degree == 0:
            return Poly.const(c)
        A, B = B, R.divexact_int(g * h**d)
        g = A.leading
        if d >= 1:
            h = g**d // h ** (d - 1)
        # d == 0 only on the first step when degrees tie; h stays 1 then
    prim = B.divexact_int(B.content())
    return _sign_normalize(prim).scale(c)


class RatFun:
    """Quotient of two integer polynomials, kept in canonical form.

    Invariants: den is nonzero and its lowest-order nonzero coefficient is
    positive (monomials are written in increasing degree, so this is the
    leading coefficient of the displayed form), the polynomial gcd of num
    and den is 1, and gcd(content(num), content(den)) is 1.  Equal functions
    therefore have identical representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = Poly((1,)), _normalized=False):
        if den.is_zero:
            raise ZeroDenominator("denominator is the zero polynomial")
        if not _normalized:
            if num.is_zero:
                den = Poly.one()
            else:
                g = poly_gcd(num, den)
                if g.degree > 0 or g.leading != 1:
                    num = num.divexact(g)
                    den = den.divexact(g)
                c = gcd(num.content(), den.content())
                if c > 1:
                    num = num.divexact_int(c)
                    den = den.divexact_int(c)
                if next(c for c in den.coeffs if c != 0) < 0:
                    num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    @staticmethod
    def zero() -> "RatFun":
        return RatFun(Poly.zero(), Poly.one(), _normalized=True)

    @staticmethod
    def one() -> "RatFun":
        return RatFun(Poly.one(), Poly.one(), _normalized=True)

    @staticmethod
    def from_int(c: int) -> "RatFun":
        return RatFun(Poly.const(c), Poly.one(), _normalized=True)

    @staticmethod
    def t_power(e: int) -> "RatFun":
        return RatFun(Poly.t_power(e), Poly.one(), _normalized=True)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: "RatFun") -> "RatFun":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        g = poly_gcd(self.den, other.den)
        d1 = other.den.divexact(g)
        num = self.num * d1 + other.num * self.den.divexact(g)
        den = self.den * d1
        return RatFun(num, den)

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den, _normalized=True)

    def __sub__(self, other: "RatFun") -> "RatFun":
        return self + (-other)

    def __mul__(self, other: "RatFun") -> "RatFun":
        if self.is_zero or other.is_zero:
            return RatFun.zero()
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num = self.num.divexact(g1) * other.num.divexact(g2)
        den = self.den.divexact(g2) * other.den.divexact(g1)
        return RatFun(num, den)

    def __truediv__(self, other: "RatFun") -> "RatFun":
        if other.is_zero:
            raise DivisionByZero("division by the zero function")
        return self * RatFun(other.den, other.num)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFun):
            return NotImplemented
        # canonical form makes structural comparison sufficient
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFun", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RatFun({render_ratfun(self)!r})"


@dataclass(frozen=True)
class CoeffVector:
    """Power-series coefficients of a RatFun modulo t**(order+1)."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient list must have length order + 1")

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "CoeffVector") -> "CoeffVector":
        if self.order != other.order:
            raise ValueError("order mismatch")
        return CoeffVector(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CoeffVector") -> "CoeffVector":
        if self.order != other.order:
            raise ValueError("order mismatch")
        return CoeffVector(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))


# -- spec-level operation wrappers -------------------------------------


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    """Ring arithmetic on polynomials; op is one of add, sub, mul."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_pow(base: Poly, e: int) -> Poly:
    return base**e


def ratfun_make(num: Poly, den: Poly) -> RatFun:
    return RatFun(num, den)


def ratfun_arith(f: RatFun, g: RatFun, op: str) -> RatFun:
    """Field arithmetic on rational functions; op is add, sub, mul or div."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"unknown op {op!r}")


def ratfun_eq(f: RatFun, g: RatFun) -> bool:
    """Equality as rational functions: num(f)*den(g) == num(g)*den(f)."""
    if f.num == g.num and f.den == g.den:
        return True
    return f.num * g.den == g.num * f.den


def series_expand(f: RatFun, order: int) -> CoeffVector:
    """Coefficients of the power series of f at t = 0, through t**order.

    The denominator must not vanish at 0.  Coefficients are computed as
    exact rationals and must all be integers; a fractional one raises
    NonIntegerCoefficient.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    den = f.den
    d0 = den[0]
    if d0 == 0:
        raise PoleAtZero("denominator vanishes at t = 0")
    out = []
    dd = den.degree
    for k in range(order + 1):
        acc = Fraction(f.num[k])
        for j in range(1, min(k, dd) + 1):
            acc -= den[j] * out[k - j]
        bk = acc / d0
        if bk.denominator != 1:
            raise NonIntegerCoefficient(f"coefficient of t^{k} is {bk}")
        out.append(bk)
    return CoeffVector(order, tuple(int(c) for c in out))


def series_nonnegative(f: RatFun, order: int) -> bool:
    """True when all series coefficients through t**order are >= 0."""
    return all(c >= 0 for c in series_expand(f, order).coeffs)


# -- rendering and parsing ----------------------------------------------


def _render_term(c: int, d: int, sep: str = "*", caret: str = "^", brace: bool = False) -> str:
    e = f"{{{d}}}" if brace else f"{d}"
    if d == 0:
        return str(c)
    tpart = "t" if d == 1 else f"t{caret}{e}"
    if c == 1:
        return tpart
    if c == -1:
        return "-" + tpart
    return f"{c}{sep}{tpart}"


def _render_poly(p: Poly, sep: str, caret: str, brace: bool) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for d, c in enumerate(p.coeffs):
        if c == 0:
            continue
        term = _render_term(c, d, sep, caret, brace)
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append("- " + term[1:])
        else:
            parts.append("+ " + term)
    return " ".join(parts)


def render_poly(p: Poly) -> str:
    """Canonical plain text, monomials in increasing degree."""
    return _render_poly(p, "*", "^", brace=False)


def render_ratfun(f: RatFun) -> str:
    return f"({render_poly(f.num)})/({render_poly(f.den)})"


def latex_poly(p: Poly) -> str:
    return _render_poly(p, "", "^", brace=True)


def latex_ratfun(f: RatFun) -> str:
    if f.den == Poly.one():
        return latex_poly(f.num)
    return f"\\frac{{{latex_poly(f.num)}}}{{{latex_poly(f.den)}}}"


def parse_poly(text: str) -> Poly:
    """Parse the canonical plain-text polynomial form."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    if s == "0":
        return Poly.zero()
    # split into signed terms
    terms = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-*^":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    coeffs: dict[int, int] = {}
    for term in terms:
        if not term or term in "+-":
            raise ParseError(f"bad term in {text!r}")
        sign = 1
        body = term
        while body and body[0] in "+-":
            if body[0] == "-":
                sign = -sign
            body = body[1:]
        if "t" not in body:
            try:
                c, d = sign * int(body), 0
            except ValueError as exc:
                raise ParseError(f"bad constant {term!r}") from exc
        else:
            head, _, tail = body.partition("t")
            if head.endswith("*"):
                head = head[:-1]
            try:
                c = sign * (int(head) if head else 1)
            except ValueError as exc:
                raise ParseError(f"bad coefficient {term!r}") from exc
            if tail == "":
                d = 1
            elif tail.startswith("^"):
                try:
                    d = int(tail[1:])
                except ValueError as exc:
                    raise ParseError(f"bad exponent {term!r}") from exc
            else:
                raise ParseError(f"bad term {term!r}")
        coeffs[d] = coeffs.get(d, 0) + c
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return Poly(out)


def parse_ratfun(text: str) -> RatFun:
    """Parse the canonical "(num)/(den)" form; a bare polynomial also works."""
    s = text.strip()
    if s.startswith("(") and ")/(" in s and s.endswith(")"):
        i = s.index(")/(")
        num, den = s[1:i], s[i + 3 : -1]
        return RatFun(parse_poly(num), parse_poly(den))
    return RatFun(parse_poly(s))


def ratfun_to_json(f: RatFun) -> dict:
    return {"num": list(f.num.coeffs), "den": list(f.den.coeffs)}


# convenience monomials used throughout the closed formulas

def one_minus_t(e: int) -> Poly:
    """1 - t**e."""
    return Poly.one() - Poly.t_power(e)


def one_plus_t(e: int) -> Poly:
    """1 + t**e."""
    return Poly.one() + Poly.t_power(e)
