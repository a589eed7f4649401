"""Exact arithmetic in Q[x]/(m) and the Dirichlet-unit / algebraic-integer tests.

A monodromy value ("scalar") is either a ``Fraction`` or a ``FieldElement``:
a residue modulo an integer minimal polynomial asserted irreducible by the
caller.  Irreducibility is verified only by cheap necessary conditions
(squarefree, no rational root in degree >= 2); a reducible modulus is
detected lazily whenever an inversion meets a zero divisor, which raises
``ZeroDivisorEncountered`` carrying the discovered factor.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import FieldMismatch, ZeroDivisorEncountered, ZeroMonodromy
from .polyq import Poly, poly_gcd, poly_xgcd, rational_roots


class NumberField:
    """Q[x]/(min_poly) with an integer, primitive, squarefree modulus."""

    def __init__(self, min_poly_coeffs):
        p = Poly(min_poly_coeffs)
        if p.degree < 1:
            raise ValueError("minimal polynomial must have degree >= 1")
        self.int_coeffs = p.primitive_int_coeffs()
        self.min_poly = Poly(self.int_coeffs)
        g = poly_gcd(self.min_poly, self.min_poly.derivative())
        if not g.is_constant():
            raise ValueError(f"minimal polynomial is not squarefree: factor {g}")
        if self.min_poly.degree >= 2 and rational_roots(self.min_poly):
            raise ValueError("minimal polynomial has a rational root")

    @property
    def degree(self) -> int:
        return self.min_poly.degree

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.int_coeffs == other.int_coeffs

    def __hash__(self):
        return hash(self.int_coeffs)

    def __repr__(self):
        return f"NumberField({list(self.int_coeffs)})"

    # -- element constructors -------------------------------------------

    def element(self, coeffs) -> "FieldElement":
        return FieldElement(self, Poly(coeffs) % self.min_poly)

    def generator(self) -> "FieldElement":
        """The root class x of the minimal polynomial."""
        return self.element([0, 1])

    def from_rational(self, c) -> "FieldElement":
        return self.element([Fraction(c)])

    def zero(self) -> "FieldElement":
        return self.element([])

    def one(self) -> "FieldElement":
        return self.element([1])


class FieldElement:
    """Residue in Q[x]/(m), reduced modulo the minimal polynomial."""

    __slots__ = ("field", "residue")

    def __init__(self, field: NumberField, residue: Poly):
        self.field = field
        self.residue = residue % field.min_poly

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field} != {self.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        raise TypeError(f"cannot coerce {other!r} into {self.field}")

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.residue + other.residue)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, -self.residue)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.residue * other.residue)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Inverse via extended gcd with the modulus."""
        if self.residue.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        g, u, _ = poly_xgcd(self.residue, self.field.min_poly)
        if not g.is_constant():
            raise ZeroDivisorEncountered(g)
        return FieldElement(self.field, u)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.field.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.residue == other.residue

    def __hash__(self):
        return hash((self.field, self.residue))

    def __bool__(self):
        return not self.residue.is_zero()

    def is_rational(self) -> bool:
        return self.residue.is_constant()

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.residue.constant_term()

    def min_poly_int_coeffs(self) -> tuple:
        """Primitive integer minimal polynomial of this element over Q.

        Computed from the characteristic polynomial of multiplication by the
        element on the power basis; for a generator this is the field
        modulus.  The result is squarefree because the field modulus is.
        """
        from .linalg import char_poly_rational

        n = self.field.degree
        cols = []
        for i in range(n):
            prod = (self.residue * Poly.monomial(i)) % self.field.min_poly
            col = [Fraction(0)] * n
            for j, c in enumerate(prod.coeffs):
                col[j] = c
            cols.append(col)
        mat = [[cols[j][i] for j in range(n)] for i in range(n)]
        cp = char_poly_rational(mat)
        # the char poly is a power of the minimal polynomial; take the
        # squarefree part
        g = poly_gcd(cp, cp.derivative())
        return (cp // g).primitive_int_coeffs()

    def __repr__(self):
        return f"FieldElement({self.residue!r} mod {list(self.field.int_coeffs)})"


Scalar = Union[Fraction, FieldElement]


def as_scalar(value) -> Scalar:
    if isinstance(value, FieldElement):
        return value
    return Fraction(value)


def scalar_is_zero(a: Scalar) -> bool:
    if isinstance(a, FieldElement):
        return not bool(a)
    return a == 0


def check_nonzero(a: Scalar) -> Scalar:
    if scalar_is_zero(a):
        raise ZeroMonodromy("monodromy value must be nonzero")
    return a


def scalar_inv(a: Scalar) -> Scalar:
    check_nonzero(a)
    if isinstance(a, FieldElement):
        return a.inverse()
    return 1 / Fraction(a)


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    if isinstance(a, FieldElement) or isinstance(b, FieldElement):
        if not isinstance(a, FieldElement):
            a, b = b, a
        return a * b
    return Fraction(a) * Fraction(b)


def scalar_pow(a: Scalar, n: int) -> Scalar:
    if isinstance(a, FieldElement):
        return a ** n
    return Fraction(a) ** n


def scalar_key(a: Scalar):
    """Hashable canonical key; rational field elements collapse to Fraction."""
    if isinstance(a, FieldElement):
        if a.is_rational():
            return a.as_rational()
        return (a.field.int_coeffs, a.residue.coeffs)
    return Fraction(a)


def scalar_field(a: Scalar):
    return a.field if isinstance(a, FieldElement) else None


def coerce_into_field(a: Scalar, field: NumberField) -> FieldElement:
    if isinstance(a, FieldElement):
        if a.field != field:
            raise FieldMismatch(f"{a.field} != {field}")
        return a
    return field.from_rational(a)


def is_algebraic_integer(a: Scalar) -> bool:
    """True iff a is a root of a monic integer polynomial."""
    check_nonzero(a)
    if isinstance(a, FieldElement):
        if a.is_rational():
            return is_algebraic_integer(a.as_rational())
        coeffs = a.min_poly_int_coeffs()
        return abs(coeffs[-1]) == 1
    return Fraction(a).denominator == 1


def is_dirichlet_unit(a: Scalar) -> bool:
    """True iff a and 1/a are both algebraic integers.

    Equivalent to |leading| = |constant| = 1 for the primitive integer
    minimal polynomial (the reversal of the minimal polynomial is the
    minimal polynomial of the inverse).
    """
    check_nonzero(a)
    if isinstance(a, FieldElement):
        if a.is_rational():
            return is_dirichlet_unit(a.as_rational())
        coeffs = a.min_poly_int_coeffs()
        return abs(coeffs[-1]) == 1 and abs(coeffs[0]) == 1
    a = Fraction(a)
    return abs(a.numerator) == 1 and a.denominator == 1
