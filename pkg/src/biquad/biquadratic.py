"""Irreducibility, automorphism type and quadratic subfields of X^4 + uX^2 + w."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput, ReduciblePolynomial, ZeroConstantTerm
from .field import Field, PrimeField, QuadExt, Rationals


@dataclass(frozen=True)
class BiquadPoly:
    u: object
    w: object

    def over(self, F):
        return BiquadPoly(F(self.u), F(self.w))

    def coeffs(self, F):
        """Coefficients low -> high."""
        return [F(self.w), F.zero, F(self.u), F.zero, F.one]

    def discriminant(self, F):
        u, w = F(self.u), F(self.w)
        return u * u - 4 * w

    def rescale(self, F, c):
        """The polynomial whose roots are ``c`` times ours: same field extension."""
        c = F(c)
        return BiquadPoly(c * c * F(self.u), c**4 * F(self.w))

    def format(self, F):
        from .poly import format_poly

        return format_poly(F, self.coeffs(F))


@dataclass(frozen=True)
class AutKind:
    tag: str
    galois_closure_group: str | None = None

    def __str__(self):
        return self.tag


V4 = AutKind("V4")
C4 = AutKind("C4")
C2 = AutKind("C2", "D8")


@dataclass(frozen=True)
class SubfieldSet:
    classes: frozenset

    def sorted(self):
        return sorted(self.classes, key=lambda k: k.sort_key())

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.sorted())


def _root_of_w(F, w, omega):
    if omega is None:
        return F.sqrt(w)
    omega = F(omega)
    if omega * omega != w:
        raise InvalidInput("supplied omega is not a square root of w")
    return omega


def is_irreducible_biquadratic(F: Field, P: BiquadPoly, omega=None) -> bool:
    """Decide irreducibility of ``X^4 + uX^2 + w`` over ``F``.

    ``omega`` overrides the canonical root of ``w`` (used to check sign invariance).
    """
    u, w = F(P.u), F(P.w)
    if w == 0:
        raise ZeroConstantTerm("w = 0, so 0 is a root")
    if F.is_square_or_zero(u * u - 4 * w):
        return False
    if not F.is_square(w):
        # the other two quadratic splittings need omega in F
        return True
    om = _root_of_w(F, w, omega)
    return not (F.is_square_or_zero(-u + 2 * om) or F.is_square_or_zero(-u - 2 * om))


def _require_irreducible(F, P, omega=None):
    if not is_irreducible_biquadratic(F, P, omega):
        raise ReduciblePolynomial(f"{P.format(F)} is reducible over {F}")


def aut_type(F: Field, P: BiquadPoly, omega=None) -> AutKind:
    _require_irreducible(F, P, omega)
    u, w = F(P.u), F(P.w)
    if F.is_square(w):
        return V4
    if F.is_square(w * (u * u - 4 * w)):
        return C4
    return C2


def is_galois(F: Field, P: BiquadPoly, omega=None) -> bool:
    kind = aut_type(F, P, omega)
    galois = kind in (V4, C4)
    if isinstance(F, (Rationals, PrimeField)):
        # w is a square in L exactly when it is one in F(gamma), gamma^2 = u^2 - 4w
        gamma_field = QuadExt(F, P.discriminant(F))
        assert gamma_field.is_square(gamma_field.embed(P.w)) == galois
    return galois


def quadratic_subfields(F: Field, P: BiquadPoly, omega=None) -> SubfieldSet:
    kind = aut_type(F, P, omega)
    u, w = F(P.u), F(P.w)
    disc = u * u - 4 * w
    if kind != V4:
        return SubfieldSet(frozenset([F.square_class(disc)]))
    om = _root_of_w(F, w, omega)
    ka, kb, kc = (F.square_class(x) for x in (-u + 2 * om, -u - 2 * om, disc))
    classes = frozenset([ka, kb, kc])
    assert len(classes) == 3 and ka * kb == kc
    return SubfieldSet(classes)


def analyze(F: Field, P: BiquadPoly) -> dict:
    """Everything decidable about one biquadratic, as plain values."""
    irreducible = is_irreducible_biquadratic(F, P)
    out = {"irreducible": irreducible}
    if not irreducible:
        return out
    kind = aut_type(F, P)
    out["aut"] = kind.tag
    out["galois"] = is_galois(F, P)
    out["subfields"] = [k.to_json() for k in quadratic_subfields(F, P)]
    if kind.galois_closure_group:
        out["closure_group"] = kind.galois_closure_group
    return out
