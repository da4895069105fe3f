"""Univariate polynomials over exact rationals.

Just enough arithmetic for Smith-form reduction of a degree-1 polynomial
matrix and for reporting its factors: ring operations, exact division,
monic gcd, squarefree splitting, and rational root extraction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .ratmat import rat, RatLike

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RatPoly:
    """Polynomial with ascending rational coefficients, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[RatLike]):
        cs = [rat(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: RatLike) -> "RatPoly":
        return cls([c])

    @classmethod
    def variable(cls) -> "RatPoly":
        return cls([0, 1])

    @classmethod
    def linear(cls, a: RatLike, b: RatLike) -> "RatPoly":
        """a*s + b"""
        return cls([b, a])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return _ZERO
        return self.coeffs[-1]

    def monic(self) -> "RatPoly":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        inv = _ONE / self.coeffs[-1]
        return RatPoly([c * inv for c in self.coeffs])

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return RatPoly(out)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self.coeffs])

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        if not self.coeffs or not other.coeffs:
            return RatPoly([])
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return RatPoly(out)

    def scale(self, c: RatLike) -> "RatPoly":
        c = rat(c)
        return RatPoly([c * x for x in self.coeffs])

    def divmod(self, other: "RatPoly") -> tuple:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead_inv = _ONE / other.leading
        q = [_ZERO] * max(0, len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                f = c * lead_inv
                q[i - d] = f
                for j, oc in enumerate(other.coeffs):
                    rem[i - d + j] = rem[i - d + j] - f * oc
        return RatPoly(q), RatPoly(rem)

    def exact_div(self, other: "RatPoly") -> "RatPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"inexact polynomial division: {self} / {other}")
        return q

    def divides(self, other: "RatPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return other.divmod(self)[1].is_zero()

    def derivative(self) -> "RatPoly":
        return RatPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, s: RatLike) -> Fraction:
        s = rat(s)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * s + c
        return acc

    def __repr__(self) -> str:
        return f"RatPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{mag}s" if i == 1 else f"{mag}s^{i}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = (f"-{first_body}" if first_sign == "-" else first_body)
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic greatest common divisor (Euclid)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def squarefree_decomposition(p: RatPoly) -> list:
    """Yun-style splitting of a nonzero polynomial into [(factor, power)].

    Factors are monic, squarefree, pairwise coprime, and
    prod factor**power == p.monic(). Constant input yields [].
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree decomposition")
    p = p.monic()
    if p.is_constant():
        return []
    out = []
    g = poly_gcd(p, p.derivative())
    w = p.exact_div(g)  # product of distinct roots
    power = 1
    while w.degree > 0:
        y = poly_gcd(w, g)
        part = w.exact_div(y)
        if part.degree > 0:
            out.append((part, power))
        w = y
        g = g.exact_div(y)
        power += 1
    return out


def rational_roots(p: RatPoly) -> list:
    """All rational roots of a nonzero polynomial (without multiplicity)."""
    if p.is_zero():
        raise ValueError("every rational is a root of the zero polynomial")
    roots = []
    coeffs = list(p.coeffs)
    low = 0
    while not coeffs[low]:
        low += 1
    if low > 0:
        roots.append(_ZERO)
        coeffs = coeffs[low:]
    if len(coeffs) <= 1:
        return roots
    # Clear denominators, then run the usual divisor search on a0 and lead.
    den_lcm = 1
    for c in coeffs:
        den_lcm = math.lcm(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in coeffs]
    a0, lead = abs(ints[0]), abs(ints[-1])
    for pnum in _divisors(a0):
        for qden in _divisors(lead):
            for cand in (Fraction(pnum, qden), Fraction(-pnum, qden)):
                if cand not in roots and p.eval(cand) == 0:
                    roots.append(cand)
    return roots


def _divisors(n: int) -> list:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)
