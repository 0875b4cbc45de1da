"""Arithmetic in F[X]/(f) for a monic quartic f, in the basis 1, y, y^2, y^3."""

from __future__ import annotations

from dataclasses import dataclass

from . import poly
from .errors import InvalidInput, NonInvertible, ReduciblePolynomial
from .field import Field, Rationals


def _is_irreducible_quartic(F, f):
    if F.is_finite:
        q = F.order
        x = [F.zero, F.one]
        # every factor of degree 1 or 2 divides X^(q^2) - X
        xq2 = poly.powmod(F, x, q * q, f)
        return poly.degree(poly.gcd(F, poly.sub(xq2, x), f)) == 0
    if f[1] == 0 and f[3] == 0:
        from .biquadratic import BiquadPoly, is_irreducible_biquadratic

        return is_irreducible_biquadratic(F, BiquadPoly(f[2], f[0]))
    if isinstance(F, Rationals):
        import sympy

        X = sympy.Symbol("X")
        expr = sum(sympy.Rational(c.numerator, c.denominator) * X**i for i, c in enumerate(f))
        return sympy.Poly(expr, X, domain="QQ").is_irreducible
    raise InvalidInput(f"cannot certify irreducibility of a general quartic over {F}; pass check=False")


@dataclass(frozen=True)
class QuotientRing:
    """``field[X]/(modulus)``; ``modulus`` is given low -> high and must be monic of degree 4."""

    field: Field
    modulus: tuple
    check: bool = True

    def __post_init__(self):
        F = self.field
        m = tuple(F(c) for c in self.modulus)
        if len(m) != 5 or m[4] != 1:
            raise InvalidInput("modulus must be a monic quartic (five coefficients, low -> high)")
        object.__setattr__(self, "modulus", m)
        if self.check and not _is_irreducible_quartic(F, list(m)):
            raise ReduciblePolynomial(f"{poly.format_poly(F, m)} is reducible over {F}")

    def __call__(self, coords):
        coords = [self.field(c) for c in coords]
        if len(coords) > 4:
            coords = poly.rem(self.field, coords, list(self.modulus))
        return tuple(coords) + (self.field.zero,) * (4 - len(coords))

    def _vec(self, f):
        f = poly.rem(self.field, f, list(self.modulus))
        return tuple(f) + (self.field.zero,) * (4 - len(f))

    @property
    def zero(self):
        return (self.field.zero,) * 4

    @property
    def one(self):
        return self.constant(1)

    @property
    def y(self):
        return self([0, 1])

    def constant(self, c):
        return self([c])

    def add(self, a, b):
        return tuple(x + y for x, y in zip(self(a), self(b)))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(self(a), self(b)))

    def mul(self, a, b):
        return self._vec(poly.mul(self.field, list(self(a)), list(self(b))))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        return self._vec(poly.powmod(self.field, list(self(a)), e, list(self.modulus)))

    def inv(self, a):
        a = self(a)
        if all(c == 0 for c in a):
            raise NonInvertible("0 has no inverse")
        d, s, _ = poly.egcd(self.field, list(a), list(self.modulus))
        if poly.degree(d) != 0:
            raise NonInvertible("element shares a factor with the modulus")
        return self._vec(s)

    def minimal_polynomial(self, v):
        return minimal_polynomial(self, v)


def quotient_arith(R, op, lhs, rhs=None):
    if op == "add":
        return R.add(lhs, rhs)
    if op == "sub":
        return R.sub(lhs, rhs)
    if op == "mul":
        return R.mul(lhs, rhs)
    if op == "inv":
        return R.inv(lhs)
    raise InvalidInput(f"unknown ring operation {op!r}")


def minimal_polynomial(R, v):
    """Monic annihilator of least degree, found as the first linear relation among powers of ``v``."""
    F = R.field
    v = R(v)
    rows = []  # (vector, pivot, combination over powers)
    power = R.one
    for k in range(5):
        vec = list(power)
        comb = [F.zero] * k + [F.one]
        for rvec, piv, rcomb in rows:
            c = vec[piv]
            if c != 0:
                vec = [x - c * y for x, y in zip(vec, rvec)]
                comb = poly.sub(comb, poly.scale(rcomb, c))
        comb = comb + [F.zero] * (k + 1 - len(comb))
        pivot = next((i for i, c in enumerate(vec) if c != 0), None)
        if pivot is None:
            return poly.monic(F, comb)
        inv = F.one / vec[pivot]
        rows.append(([c * inv for c in vec], pivot, [c * inv for c in comb]))
        power = R.mul(power, v)
    raise AssertionError("five vectors in a four-dimensional space must be dependent")
