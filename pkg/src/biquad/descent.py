"""Isomorphism of non-cyclic biquadratic extensions.

A non-Galois ``X^4 + uX^2 + w`` becomes Klein four over ``E = F(sqrt w)``.  That
yields three independent deciders for isomorphism: an explicit sign search over
F, a comparison of class keys living in ``F(sqrt s)``, and a direct Klein-four
comparison over the common closure ``E``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .biquadratic import C2, C4, V4, BiquadPoly, aut_type
from .elem_abelian import canonical_ab, elem_iso, subfield_iso
from .errors import CyclicInput, NotNonGalois, ReduciblePolynomial
from .field import Field, QuadExt, SquareClass
from .moduli import OrbitKey, S3, orbit


@dataclass(frozen=True)
class Trivial:
    kind = "Trivial"


@dataclass(frozen=True)
class Closure:
    w_class: SquareClass
    closure_field: QuadExt

    kind = "Closure"


@dataclass(frozen=True)
class NoneCyclic:
    kind = "NoneCyclic"


def _closure_field(F, w):
    return QuadExt(F, F.square_class(w).rep)


def elem_abelian_closure(F: Field, P: BiquadPoly):
    kind = aut_type(F, P)
    if kind == V4:
        return Trivial()
    if kind == C4:
        return NoneCyclic()
    E = _closure_field(F, P.w)
    # the same polynomial stays irreducible over E and turns Klein four there
    assert aut_type(E, P.over(E)) == V4
    return Closure(F.square_class(P.w), E)


@dataclass(frozen=True)
class DescentWitness:
    c: object
    a: object
    r: int
    s: int
    omega_cap: object
    branch: str


@dataclass(frozen=True)
class DescentVerdict:
    isomorphic: bool
    witness: DescentWitness | None = None
    reason: str | None = None
    matched_condition: int | None = None


def descent_search(F: Field, P: BiquadPoly, Q: BiquadPoly, zero_rule="signed"):
    """Search the 16 sign choices for a witness that ``P`` and ``Q`` define isomorphic fields.

    With ``Omega == 0`` the extra requirement is that ``-ra`` or ``-ra/w`` be a
    square (``zero_rule="signed"``); ``zero_rule="unsigned"`` tests ``ra`` and
    ``ra/w`` instead and is kept only to demonstrate that variant is unsound.
    """
    u, w, v, z = F(P.u), F(P.w), F(Q.u), F(Q.w)
    disc_p = u * u - 4 * w
    c0 = F.sqrt(z / w)
    a0 = F.sqrt((v * v - 4 * z) / disc_p)
    if c0 is None or a0 is None:
        return None
    sign = -1 if zero_rule == "signed" else 1
    for c in (c0, -c0):
        for a in (a0, -a0):
            for r in (1, -1):
                for s in (1, -1):
                    omega = (r * a / w + (u * v - 4 * w * c * s) / (w * disc_p)) / 2
                    if omega != 0:
                        if F.is_square(omega):
                            return DescentWitness(c, a, r, s, omega, "OmegaSquare")
                        continue
                    ra = sign * r * a
                    if F.is_square(ra):
                        return DescentWitness(c, a, r, s, omega, "OmegaZero_ra")
                    if F.is_square(ra / w):
                        return DescentWitness(c, a, r, s, omega, "OmegaZero_ra_over_w")
    return None


def noncyclic_iso(F: Field, P: BiquadPoly, Q: BiquadPoly) -> DescentVerdict:
    kp, kq = aut_type(F, P), aut_type(F, Q)
    if C4 in (kp, kq):
        raise CyclicInput("cyclic extensions are outside this classification")
    if kp == V4 and kq == V4:
        v = elem_iso(F, P, Q)
        return DescentVerdict(v.isomorphic, matched_condition=v.matched_condition)
    if kp != kq:
        return DescentVerdict(False, reason="MixedAutKinds")
    witness = descent_search(F, P, Q)
    return DescentVerdict(witness is not None, witness)


def closure_iso(F: Field, P: BiquadPoly, Q: BiquadPoly) -> bool:
    """Decide isomorphism of two non-Galois extensions by comparing over their closures."""
    for poly_ in (P, Q):
        if aut_type(F, poly_) != C2:
            raise NotNonGalois(f"{poly_.format(F)} is not non-Galois")
    if F.square_class(P.w) != F.square_class(Q.w):
        return False
    E = _closure_field(F, P.w)
    return subfield_iso(E, P.over(E), Q.over(E))


@dataclass(frozen=True, eq=False)
class NonGaloisKey:
    """``s`` with ``w = d^2 s`` and the class of ``-u - 2d sqrt(s)`` up to conjugation."""

    s: SquareClass
    rep: object
    field: QuadExt

    def orbit_classes(self):
        E = self.field
        return (E.square_class(self.rep), E.square_class(E.sigma(self.rep)))

    def __eq__(self, other):
        if not isinstance(other, NonGaloisKey):
            return NotImplemented
        if self.s != other.s or self.field != other.field:
            return False
        E, rep = self.field, other.rep
        return E.is_square(self.rep / rep) or E.is_square(self.rep / E.sigma(rep))

    def __hash__(self):
        # the norm class is shared by rep and its conjugate
        return hash((self.s, self.field.class_hash(self.rep)))

    def to_json(self):
        E = self.field
        return {
            "kind": "NonGalois",
            "s": self.s.to_json(),
            "rep": E.to_json(self.rep),
            "orbit": [E.to_json(self.rep), E.to_json(E.sigma(self.rep))],
        }


@dataclass(frozen=True)
class ElemKey:
    orbit: OrbitKey

    def to_json(self):
        return {"kind": "ElemAbelian", **self.orbit.to_json()}


def nongalois_class_key(F: Field, P: BiquadPoly) -> NonGaloisKey:
    try:
        kind = aut_type(F, P)
    except ReduciblePolynomial as exc:
        raise NotNonGalois(f"reducible: {exc.detail}")
    if kind != C2:
        raise NotNonGalois(f"{P.format(F)} has automorphism type {kind.tag}")
    u, w = F(P.u), F(P.w)
    s = F.square_class(w)
    E = QuadExt(F, s.rep)
    d = F.sqrt(w / s.rep)
    rep = E((-u, -2 * d))
    disc = E.embed(u * u - 4 * w)
    assert rep * E.sigma(rep) == disc
    # rep is not of the form beta*sigma(beta)*gamma^2, i.e. not in the norm group
    assert not E.is_square(disc)
    return NonGaloisKey(s, rep, E)


def class_key(F: Field, P: BiquadPoly):
    """Classification key of a non-cyclic extension."""
    kind = aut_type(F, P)
    if kind == C4:
        raise CyclicInput("cyclic extensions have no key")
    if kind == V4:
        E = canonical_ab(F, P)
        return ElemKey(orbit(F, (E.a, E.b)))
    return nongalois_class_key(F, P)


@dataclass(frozen=True, eq=False)
class DeltaImage:
    """Image of a key as an S3-orbit of pairs, tagged with the field the pairs live in."""

    tag: SquareClass | None
    pairs: tuple
    field: Field

    def __eq__(self, other):
        if not isinstance(other, DeltaImage):
            return NotImplemented
        if (self.tag is None) != (other.tag is None):
            return _any_exactly_equal(self, other)
        if self.tag is not None and self.tag != other.tag:
            return _any_exactly_equal(self, other)
        target = other.pairs[0]
        return any(_q2_related(self.field, p, target) for p in self.pairs)

    def __hash__(self):
        # images with different tags can still compare equal through a shared pair
        return hash(DeltaImage)


def _any_exactly_equal(x, y):
    return any(p == q for p in x.pairs for q in y.pairs)


def _q2_related(K, p, q):
    """Pair relation: equal entries, square ratios of base pairs, or conjugate pairs with square ratio."""
    if p == q:
        return True
    if isinstance(K, QuadExt):
        conj_p = p[1] == K.sigma(p[0]) and p[0].y != 0
        conj_q = q[1] == K.sigma(q[0]) and q[0].y != 0
        if conj_p and conj_q:
            return K.is_square(p[0] / q[0])
        in_base = all(x.y == 0 for x in (*p, *q))
        if not in_base:
            return False
        F = K.base
        return F.is_square(p[0].x / q[0].x) and F.is_square(p[1].x / q[1].x)
    return K.is_square(p[0] / q[0]) and K.is_square(p[1] / q[1])


def _s3_pairs(K, base_pair):
    b, b1 = base_pair
    labels = (b, b1, b * b1)
    return tuple((labels[g[0] - 1], labels[g[1] - 1]) for g in S3)


def delta_embed(key) -> DeltaImage:
    if isinstance(key, ElemKey):
        K = key.orbit.canonical_rep.field
        rep = key.orbit.canonical_rep.reps()
        return DeltaImage(None, _s3_pairs(K, rep), K)
    E = key.field
    return DeltaImage(key.s, _s3_pairs(E, (key.rep, E.sigma(key.rep))), E)
