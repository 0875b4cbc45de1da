"""Elementary abelian (Klein four) quartic extensions F(sqrt a, sqrt b)."""

from __future__ import annotations

from dataclasses import dataclass

from . import poly
from .biquadratic import V4, BiquadPoly, aut_type, is_irreducible_biquadratic, quadratic_subfields
from .errors import (
    DegenerateParameters,
    NotElementaryAbelian,
    NotRadicalElementaryAbelian,
    ReduciblePolynomial,
    ZeroInput,
)
from .field import Field, SquareClass
from .ring import QuotientRing, minimal_polynomial


@dataclass(frozen=True)
class ElemAbelianExt:
    """``F(sqrt a, sqrt b)``, generated by a root of ``X^4 - 2(a+b)X^2 + (a-b)^2``."""

    field: Field
    a: object
    b: object

    def __post_init__(self):
        F = self.field
        a, b = F(self.a), F(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        _check_params(F, a, b)

    def polynomial(self):
        return BiquadPoly(-2 * (self.a + self.b), (self.a - self.b) ** 2)

    def ring(self):
        return QuotientRing(self.field, tuple(self.polynomial().coeffs(self.field)))

    def subfield_classes(self):
        F = self.field
        return frozenset(F.square_class(x) for x in (self.a, self.b, self.a * self.b))


def _check_params(F, a, b):
    if a == 0 or b == 0:
        raise ZeroInput("a and b must be nonzero")
    for name, val in (("a", a), ("b", b), ("ab", a * b)):
        if F.is_square(val):
            raise DegenerateParameters(name, f"{name} = {F.format(val)} is a square in {F}")


def _require_v4(F, P, omega=None):
    try:
        kind = aut_type(F, P, omega)
    except ReduciblePolynomial as exc:
        raise NotElementaryAbelian(f"reducible: {exc.detail}")
    if kind != V4:
        raise NotElementaryAbelian(f"{P.format(F)} has automorphism type {kind.tag}")


def canonical_ab(F: Field, P: BiquadPoly, omega=None) -> ElemAbelianExt:
    _require_v4(F, P, omega)
    u = F(P.u)
    om = F.sqrt(P.w) if omega is None else F(omega)
    a = (2 * om - u) / 4
    b = -(2 * om + u) / 4
    E = ElemAbelianExt(F, a, b)
    assert -2 * (a + b) == u and (a - b) ** 2 == F(P.w)
    return E


def compose_elem_abelian(F: Field, a, b) -> BiquadPoly:
    a, b = F(a), F(b)
    _check_params(F, a, b)
    return BiquadPoly(-2 * (a + b), (a - b) ** 2)


@dataclass(frozen=True)
class IsoVerdict:
    isomorphic: bool
    matched_condition: int | None = None


# (numerator index, denominator index) pairs; numerators are (-v-2z, -v+2z),
# denominators are (-u+2w, -u-2w, u^2-4w^2)
_ELEM_CONDITIONS = ((0, 1), (0, 2), (1, 0), (1, 2), (2, 1), (2, 0))


def elem_iso(F: Field, P: BiquadPoly, Q: BiquadPoly, omega_p=None, omega_q=None) -> IsoVerdict:
    """Isomorphism of two V4 extensions through the six square-ratio conditions."""
    _require_v4(F, P, omega_p)
    _require_v4(F, Q, omega_q)
    u, v = F(P.u), F(Q.u)
    w = F.sqrt(P.w) if omega_p is None else F(omega_p)
    z = F.sqrt(Q.w) if omega_q is None else F(omega_q)
    dens = (-u + 2 * w, -u - 2 * w, u * u - 4 * w * w)
    nums = (-v - 2 * z, -v + 2 * z)
    matched = None
    for idx, (i, j) in enumerate(_ELEM_CONDITIONS, start=1):
        if F.is_square(nums[0] / dens[i]) and F.is_square(nums[1] / dens[j]):
            matched = idx
            break
    verdict = IsoVerdict(matched is not None, matched)
    assert verdict.isomorphic == subfield_iso(F, P, Q, omega_p, omega_q)
    return verdict


def subfield_iso(F: Field, P: BiquadPoly, Q: BiquadPoly, omega_p=None, omega_q=None) -> bool:
    """Isomorphism of two V4 extensions by comparing their sets of quadratic subfields."""
    return quadratic_subfields(F, P, omega_p).classes == quadratic_subfields(F, Q, omega_q).classes


@dataclass(frozen=True)
class TrivialClosure:
    radical_min_poly: BiquadPoly
    generator_description: str
    gamma_square: object

    kind = "TrivialClosure"


@dataclass(frozen=True)
class NoClosure:
    kind = "NoClosure"


@dataclass(frozen=True)
class ThreeClosures:
    closure_classes: tuple

    kind = "ThreeClosures"


def radical_closure_analysis(E: ElemAbelianExt):
    F = E.field
    if F.is_square(-1):
        return NoClosure()
    minus_one = F.square_class(-1)
    triple = (E.a, E.b, E.a * E.b)
    classes = [F.square_class(x) for x in triple]
    if minus_one in classes:
        a1 = next(x for x, k in zip(triple, classes) if k != minus_one)
        a1 = F.square_class(a1).rep
        P = BiquadPoly(F.zero, 4 * a1 * a1)
        if not is_irreducible_biquadratic(F, P) or aut_type(F, P) != V4:
            raise AssertionError("radical polynomial lost irreducibility")
        desc = f"gamma*(1+i) with gamma^2 = {F.format(a1)}, i^2 = -1"
        return TrivialClosure(P, desc, a1)
    out = tuple(sorted((-k for k in classes), key=SquareClass.sort_key))
    for i in range(3):
        for j in range(i + 1, 3):
            assert out[i] != out[j]
    return ThreeClosures(out)


def radical_elem_iso(F: Field, a, a2) -> bool:
    """Isomorphism of the radical extensions cut out by ``X^4 + a`` and ``X^4 + a2``.

    A pair with exactly one Klein-four member is never isomorphic and yields
    False; inputs where neither is Klein four are rejected.
    """
    a, a2 = F(a), F(a2)
    kinds = []
    for val in (a, a2):
        P = BiquadPoly(F.zero, val)
        if val == 0 or not is_irreducible_biquadratic(F, P):
            raise NotRadicalElementaryAbelian(f"X^4 + {F.format(val)} is reducible over {F}")
        kinds.append(aut_type(F, P))
    if kinds.count(V4) == 0:
        raise NotRadicalElementaryAbelian("neither polynomial has Klein four automorphism group")
    if kinds.count(V4) == 1:
        return False
    ratio = a2 / a
    primary = F.fourth_root_exists(ratio)
    # a2 = d^4 a^j with j in {1, 3}
    alt = primary or F.fourth_root_exists(a2 / a**3)
    assert alt == primary
    return primary


def is_biquadratic_generator(E: ElemAbelianExt, coords) -> bool:
    R = E.ring()
    m = minimal_polynomial(R, coords)
    return poly.degree(m) == 4 and m[1] == 0 and m[3] == 0


def generator_families(E: ElemAbelianExt, r, s):
    """The three closed-form generators ``s*alpha + r*beta``, ``r*alpha + s*alpha*beta``, ``r*beta + s*alpha*beta``.

    Coordinates are in the basis 1, y, y^2, y^3 with ``y = alpha + beta``.
    """
    F = E.field
    a, b = E.a, E.b
    r, s = F(r), F(s)
    k = 2 * (a - b)
    alpha = (F.zero, (3 * a + b) / k, F.zero, -F.one / k)
    beta = (F.zero, -(a + 3 * b) / k, F.zero, F.one / k)
    ab = (-(a + b) / 2, F.zero, F.one / 2, F.zero)

    def lin(x, p, y, q):
        return tuple(p * xi + q * yi for xi, yi in zip(x, y))

    return {
        "ab": lin(alpha, s, beta, r),
        "b": lin(alpha, r, ab, s),
        "a": lin(beta, r, ab, s),
    }
