"""Two-parameter normal forms of monic quartics.

After the shift ``s = x + u/4`` a quartic becomes ``s^4 + (P2/2) s^2 + P1 s + P0``
where ``P0, P1, P2`` are the value and first two derivatives at ``-u/4``.  A
vanishing linear term leaves a biquadratic; otherwise rescaling ``s`` gives
``X^4 + aX^2 + bX + b`` and inverting gives ``X^4 + X^3 + cX^2 + d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import poly
from .field import Field
from .ring import QuotientRing


@dataclass(frozen=True)
class QuarticPoly:
    """``X^4 + uX^3 + vX^2 + wX + z``."""

    u: object
    v: object
    w: object
    z: object

    def over(self, F):
        return QuarticPoly(F(self.u), F(self.v), F(self.w), F(self.z))

    def coeffs(self, F):
        return [F(self.z), F(self.w), F(self.v), F(self.u), F.one]

    @classmethod
    def from_coeffs(cls, coeffs):
        """From five low -> high coefficients of a monic quartic."""
        z, w, v, u, lead = coeffs
        if lead != 1:
            raise ValueError("quartic must be monic")
        return cls(u, v, w, z)

    def format(self, F):
        return poly.format_poly(F, self.coeffs(F))


@dataclass(frozen=True)
class TaylorData:
    P0: object
    P1: object
    P2: object


def taylor_at_quarter(F: Field, P: QuarticPoly) -> TaylorData:
    f = P.coeffs(F)
    t = -F(P.u) / 4
    d1 = poly.derivative(f)
    d2 = poly.derivative(d1)
    return TaylorData(F(poly.evaluate(f, t)), F(poly.evaluate(d1, t)), F(poly.evaluate(d2, t)))


def taylor_identity_holds(F, P, T, points=(0, 1, -1)):
    """Check ``P(x) = P0 + P1 s + P2/2 s^2 + s^4`` with ``s = x + u/4`` at a few points."""
    f = P.coeffs(F)
    for x in points:
        x = F(x)
        s = x + F(P.u) / 4
        if poly.evaluate(f, x) != T.P0 + T.P1 * s + T.P2 / 2 * s * s + s**4:
            return False
    return True


@dataclass(frozen=True)
class ReducibleRootZero:
    kind = "ReducibleRootZero"

    def root(self, F, P):
        return F.zero


@dataclass(frozen=True)
class ReducibleRootQuarterU:
    kind = "ReducibleRootQuarterU"

    def root(self, F, P):
        return -F(P.u) / 4


@dataclass(frozen=True)
class BiquadForm:
    """``X^4 + aX^2 + b`` reached by ``y = x + shift``."""

    a: object
    b: object
    shift: object

    kind = "BiquadForm"

    def coeffs(self, F):
        return [self.b, F.zero, self.a, F.zero, F.one]

    def polynomial(self, F):
        return QuarticPoly.from_coeffs(self.coeffs(F))

    def substitution(self, F):
        return f"y = x + {F.format(self.shift)}"

    def image(self, R, x):
        return R.add(x, R.constant(self.shift))


@dataclass(frozen=True)
class TForm:
    """``X^4 + X^3 + cX^2 + d`` reached by ``z = 4 P0 / (P1 (4x + u))``."""

    c: object
    d: object
    P0: object
    P1: object
    u: object

    kind = "TForm"

    def coeffs(self, F):
        return [self.d, F.zero, self.c, F.one, F.one]

    def polynomial(self, F):
        return QuarticPoly.from_coeffs(self.coeffs(F))

    def substitution(self, F):
        return f"z = {F.format(4 * self.P0)}/(({F.format(self.P1)})*(4*x + {F.format(self.u)}))"

    def image(self, R, x):
        denom = R.mul(R.constant(self.P1), R.add(R.mul(R.constant(4), x), R.constant(self.u)))
        return R.mul(R.constant(4 * self.P0), R.inv(denom))


@dataclass(frozen=True)
class RForm:
    """``X^4 + aX^2 + bX + b`` reached by ``y = scale * (x + shift)``; carries the reciprocal form."""

    a: object
    b: object
    scale: object
    shift: object
    tform: TForm = dc_field(compare=True)

    kind = "RForm"

    def coeffs(self, F):
        return [self.b, self.b, self.a, F.zero, F.one]

    def polynomial(self, F):
        return QuarticPoly.from_coeffs(self.coeffs(F))

    def substitution(self, F):
        return f"y = ({F.format(self.scale)})*(x + {F.format(self.shift)})"

    def image(self, R, x):
        return R.mul(R.constant(self.scale), R.add(x, R.constant(self.shift)))


def normalize(F: Field, P: QuarticPoly):
    """Dispatch on ``z``, ``P0`` and ``P1`` only; the leading shift coefficient ``u`` is never tested."""
    P = P.over(F)
    if P.z == 0:
        return ReducibleRootZero()
    T = taylor_at_quarter(F, P)
    P0, P1, P2 = T.P0, T.P1, T.P2
    shift = P.u / 4
    if P0 == 0:
        return ReducibleRootQuarterU()
    if P1 == 0:
        return BiquadForm(P2 / 2, P0, shift)
    tform = TForm(P2 * P0 / (2 * P1 * P1), P0**3 / P1**4, P0, P1, P.u)
    return RForm(P1 * P1 * P2 / (2 * P0 * P0), P1**4 / P0**3, P1 / P0, shift, tform)


def verify_substitution(F: Field, P: QuarticPoly, form) -> bool:
    """Evaluate the target form at the image of a root of ``P`` in ``F[X]/(P)``.

    Meaningful when ``P`` is irreducible; the ring is built without an
    irreducibility certificate so this also runs on reducible inputs that
    happen to keep every needed denominator invertible.
    """
    R = QuotientRing(F, tuple(P.coeffs(F)), check=False)
    forms = [form] + ([form.tform] if isinstance(form, RForm) else [])
    for nf in forms:
        y = nf.image(R, R.y)
        acc = R.zero
        for c in reversed(nf.coeffs(F)):
            acc = R.add(R.mul(acc, y), R.constant(c))
        if any(c != 0 for c in acc):
            return False
    return True


def reciprocal_identity_holds(F: Field, form: RForm) -> bool:
    """``T(X) = X^4 R(1/X) / b``, coefficientwise."""
    r = form.coeffs(F)
    expected = [c / form.b for c in reversed(r)]
    return expected == list(form.tform.coeffs(F))
