"""Square-class pairs, the S3 action on them, and enumeration of Klein-four classes.

A pair ``(b, b')`` of nonzero elements stands for the extension
``F(sqrt b, sqrt b')``.  Its three quadratic subfields are labelled
``1 -> b``, ``2 -> b'``, ``3 -> bb'``; a permutation ``g`` of ``{1, 2, 3}`` sends
the pair to ``(label g(1), label g(2))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .errors import GeneratorIsSquare, InvalidInput, ZeroInput
from .field import Field, SquareClass

S3 = tuple(permutations((1, 2, 3)))
IDENTITY = (1, 2, 3)


@dataclass(frozen=True)
class PairClass:
    """A pair of square classes; equality is componentwise class equality."""

    a_class: SquareClass
    b_class: SquareClass

    @classmethod
    def of(cls, F: Field, a, b):
        a, b = F(a), F(b)
        if a == 0 or b == 0:
            raise ZeroInput("pair entries must be nonzero")
        return cls(F.square_class(a), F.square_class(b))

    @property
    def field(self):
        return self.a_class.field

    def labels(self):
        """Classes of ``b``, ``b'`` and ``bb'``."""
        return (self.a_class, self.b_class, self.a_class * self.b_class)

    def sort_key(self):
        return (self.a_class.sort_key(), self.b_class.sort_key())

    def reps(self):
        return (self.a_class.rep, self.b_class.rep)

    def to_json(self):
        return [self.a_class.to_json(), self.b_class.to_json()]


def _as_pair(F, p):
    if isinstance(p, PairClass):
        return p
    if len(p) != 2:
        raise InvalidInput("a pair needs exactly two entries")
    return PairClass.of(F, p[0], p[1])


def _check_nonzero(F, *entries):
    for x in entries:
        if F(x) == 0:
            raise ZeroInput("pair entries must be nonzero")


def sim1_equal(F: Field, p1, p2) -> bool:
    (a, a1), (b, b1) = p1, p2
    _check_nonzero(F, a, a1, b, b1)
    return F.is_square(F(a) * F(b)) and F.is_square(F(a1) * F(b1))


def s3_act(g, p: PairClass) -> PairClass:
    labels = p.labels()
    return PairClass(labels[g[0] - 1], labels[g[1] - 1])


def s3_mul(g, h):
    """The product ``gh`` for which ``s3_act(gh, p) == s3_act(g, s3_act(h, p))``.

    Acting on labels is a right action for ordinary composition, so ``gh`` is
    the permutation ``k -> h(g(k))``.
    """
    return tuple(h[g[k] - 1] for k in range(3))


@dataclass(frozen=True, eq=False)
class OrbitKey:
    """An S3-orbit of pair classes together with its least member."""

    members: frozenset
    canonical_rep: PairClass

    def __eq__(self, other):
        if not isinstance(other, OrbitKey):
            return NotImplemented
        return self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __len__(self):
        return len(self.members)

    def sorted_members(self):
        return sorted(self.members, key=PairClass.sort_key)

    def to_json(self):
        return {
            "canonical_rep": self.canonical_rep.to_json(),
            "orbit": [m.to_json() for m in self.sorted_members()],
        }


def orbit(F: Field, p) -> OrbitKey:
    p = _as_pair(F, p)
    members = frozenset(s3_act(g, p) for g in S3)
    return OrbitKey(members, min(members, key=PairClass.sort_key))


_SIM_CONDITIONS = (
    # (which of b, b', bb' pairs with a, which pairs with a')
    (0, 1),
    (1, 0),
    (0, 2),
    (2, 0),
    (1, 2),
    (2, 1),
)


def sim_condition(F: Field, p1, p2):
    """Index (1..6) of the first pair condition relating ``p1`` and ``p2``, or None."""
    (a, a1), (b, b1) = p1, p2
    _check_nonzero(F, a, a1, b, b1)
    a, a1, b, b1 = F(a), F(a1), F(b), F(b1)
    targets = (b, b1, b * b1)
    for idx, (i, j) in enumerate(_SIM_CONDITIONS, start=1):
        if F.is_square(a * targets[i]) and F.is_square(a1 * targets[j]):
            return idx
    return None


def sim_equal(F: Field, p1, p2) -> bool:
    return sim_condition(F, p1, p2) is not None


def in_excluded_S(F: Field, p) -> bool:
    a, a1 = p
    _check_nonzero(F, a, a1)
    a, a1 = F(a), F(a1)
    return F.is_square(a) or F.is_square(a1) or F.is_square(a * a1)


def class_group(F: Field, gens=None):
    """Square classes of the subgroup generated by ``gens`` (all classes for finite fields)."""
    if F.is_finite:
        return [F.square_class(1), F.square_class(F.nonsquare())]
    if gens is None:
        raise InvalidInput(f"{F} has infinitely many square classes; list generators")
    classes = [F.square_class(1)]
    for g in gens:
        g = F(g)
        if g == 0:
            raise ZeroInput("generator 0")
        if F.is_square(g):
            raise GeneratorIsSquare(f"generator {F.format(g)} is a square in {F}")
        k = F.square_class(g)
        if k not in classes:
            classes = classes + [c * k for c in classes]
    return sorted(classes, key=SquareClass.sort_key)


def enumerate_elem_abelian_classes(F: Field, gens=None):
    """S3-orbits of non-excluded pairs over the class group generated by ``gens``."""
    G = class_group(F, gens)
    seen = {}
    for x, y in product(G, G):
        if in_excluded_S(F, (x.rep, y.rep)):
            continue
        key = orbit(F, PairClass(x, y))
        seen.setdefault(key, key)
    return sorted(seen, key=lambda k: k.canonical_rep.sort_key())


def gaussian_binomial_2(n, k):
    """Number of k-dimensional subspaces of an n-dimensional space over F_2."""
    num = den = 1
    for i in range(k):
        num *= 2 ** (n - i) - 1
        den *= 2 ** (i + 1) - 1
    return num // den

