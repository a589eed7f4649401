"""Univariate polynomials with exact rational coefficients.

A polynomial is represented as a tuple of ``Fraction`` coefficients,
index = exponent, with a nonzero leading coefficient (the zero polynomial
is the empty tuple).  This is the coefficient ring Q[t] used for the
deformation differentials and the Smith normal form.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ZeroPolynomial


class Poly:
    """Immutable univariate polynomial over Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def const(c) -> "Poly":
        return Poly([Fraction(c)])

    @staticmethod
    def monomial(exp: int, c=1) -> "Poly":
        return Poly([0] * exp + [Fraction(c)])

    # -- basic queries ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def constant_term(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[0]

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Poly":
        """Multiply by t**k (k >= 0)."""
        if not self.coeffs:
            return self
        return Poly([Fraction(0)] * k + list(self.coeffs))

    def divmod(self, other: "Poly"):
        """Euclidean division; other must be nonzero."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            if c:
                quot[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def divides(self, other: "Poly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def eval(self, x):
        """Horner evaluation; x may be a Fraction or any ring element."""
        acc = None
        for c in reversed(self.coeffs):
            if acc is None:
                acc = c
            else:
                acc = acc * x + c
        if acc is None:
            return Fraction(0)
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Poly([c / lead for c in self.coeffs])

    def reversed(self) -> "Poly":
        """Coefficient reversal t^n p(1/t); minimal polynomial of the inverse root."""
        return Poly(list(reversed(self.coeffs)))

    # -- integer normal forms ----------------------------------------------

    def primitive_int_coeffs(self) -> tuple:
        """Integer coefficients after clearing denominators and content.

        The sign is normalized so the leading coefficient is positive.
        Returns () for the zero polynomial.
        """
        if self.is_zero():
            return ()
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        ints = [c // g for c in ints]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        return tuple(ints)

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                if i == 0:
                    terms.append(str(c))
                elif i == 1:
                    terms.append(f"{c}*t" if c != 1 else "t")
                else:
                    terms.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return "Poly(" + " + ".join(terms) + ")"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd in Q[t]."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = a, b
    u0, u1 = Poly.const(1), Poly()
    v0, v1 = Poly(), Poly.const(1)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    lead = r0.leading()
    inv = 1 / lead
    return r0.monic(), u0 * inv, v0 * inv


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly()
    return ((a * b) // poly_gcd(a, b)).monic()


def rational_roots(p: Poly):
    """All rational roots of p != 0, via the rational root test."""
    if p.is_zero():
        raise ZeroPolynomial("rational_roots of the zero polynomial")
    ints = list(p.primitive_int_coeffs())
    shift = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        shift += 1
    roots = []
    if shift:
        roots.append(Fraction(0))
    if len(ints) <= 1:
        return roots
    a0, an = abs(ints[0]), abs(ints[-1])
    q = Poly(ints)
    for num in _divisors(a0):
        for den in _divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if q.eval(cand) == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)


def _divisors(n: int):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def squarefree_factors(p: Poly):
    """Squarefree decomposition with rational roots split off.

    Returns a list of (monic factor, multiplicity) with pairwise coprime,
    squarefree factors whose product with multiplicities equals p up to a
    nonzero constant.  Constants yield the empty list.
    """
    if p.is_zero():
        raise ZeroPolynomial("squarefree_factors of the zero polynomial")
    p = p.monic()
    out = []
    # Yun's algorithm
    dp = p.derivative()
    g = poly_gcd(p, dp)
    w = p // g
    mult = 1
    while not w.is_constant():
        y = poly_gcd(w, g)
        factor = w // y
        if not factor.is_constant():
            out.extend(_split_rational_roots(factor, mult))
        w = y
        g = g // y
        mult += 1
    return out


def _split_rational_roots(f: Poly, mult: int):
    """Split the linear factors of a squarefree monic f off its residue."""
    pieces = []
    for r in rational_roots(f):
        lin = Poly([-r, 1])
        f = f // lin
        pieces.append((lin, mult))
    if not f.is_constant():
        pieces.append((f.monic(), mult))
    return pieces


def coprime_basis(polys: Sequence[Poly]):
    """Gcd-free basis: pairwise coprime monic polynomials such that every
    nonconstant input is, up to a constant, a product of basis elements.

    Inputs must be nonzero; constants are dropped.  Repeatedly splits a
    non-coprime pair (a, b) into {gcd, a/gcd, b/gcd}; the total degree
    strictly decreases, so this terminates.
    """
    work = []
    for p in polys:
        p = p.monic()
        if not p.is_constant() and p not in work:
            work.append(p)
    done = False
    while not done:
        done = True
        for i in range(len(work)):
            for j in range(i + 1, len(work)):
                g = poly_gcd(work[i], work[j])
                if g.is_constant():
                    continue
                a, b = work[i] // g, work[j] // g
                repl = [q for q in (g, a, b) if not q.is_constant()]
                rest = [work[k] for k in range(len(work)) if k not in (i, j)]
                work = rest
                for q in repl:
                    if q not in work:
                        work.append(q)
                done = False
                break
            if not done:
                break
    return work
