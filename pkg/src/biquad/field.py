"""Exact base fields: the rationals, odd prime fields, and one quadratic step over either.

Elements are plain Python values with operator overloading:
``fractions.Fraction`` over Q, :class:`ModP` over F_p and :class:`QuadElem`
(``x + y*sqrt(d)``) over a quadratic extension.  Every field object exposes the
same small protocol (``zero``, ``one``, ``is_square``, ``sqrt``,
``square_class`` ...), so the algebra modules never branch on the field kind.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from sympy import isprime
from sympy.ntheory import sqrt_mod

from .errors import (
    InvalidField,
    InvalidInput,
    SquareInput,
    TowerTooDeep,
    UnfactorableInteger,
    ZeroInput,
)

DEFAULT_FACTOR_BOUND = 10**6


def factor_bound():
    """Trial-division bound, overridable through ``BIQUAD_FACTOR_BOUND``."""
    raw = os.environ.get("BIQUAD_FACTOR_BOUND")
    if raw is None:
        return DEFAULT_FACTOR_BOUND
    try:
        bound = int(raw)
    except ValueError:
        raise InvalidInput(f"BIQUAD_FACTOR_BOUND must be an integer, got {raw!r}")
    if bound < 2:
        raise InvalidInput("BIQUAD_FACTOR_BOUND must be at least 2")
    return bound


@lru_cache(maxsize=4)
def _primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i in range(n + 1) if sieve[i]]


def squarefree_part(n, bound=None):
    """Return the square-free kernel of a nonzero integer, keeping its sign.

    Trial division runs up to ``bound``.  A leftover cofactor ``m`` has no prime
    factor below the bound; when ``m <= bound**3`` it is a prime, a product of
    two distinct primes, or a prime square, all of which are decided exactly.
    Anything larger raises :class:`UnfactorableInteger`.
    """
    if n == 0:
        raise ZeroInput("square-free part of 0")
    bound = factor_bound() if bound is None else bound
    sign = -1 if n < 0 else 1
    m = abs(n)
    core = 1
    for p in _primes_upto(bound):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if e & 1:
                core *= p
    else:
        if m > 1 and m > bound**3:
            raise UnfactorableInteger(f"cofactor {m} exceeds trial-division bound {bound}")
    if m > 1:
        r = math.isqrt(m)
        if r * r != m:
            core *= m
    return sign * core


def _is_int_square(n):
    return n >= 0 and math.isqrt(n) ** 2 == n


class Field:
    """Protocol shared by all supported fields."""

    is_finite = False

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def is_square(self, x):
        x = self(x)
        if x == 0:
            raise ZeroInput("squareness of 0")
        return self._is_square(x)

    def is_square_or_zero(self, x):
        x = self(x)
        return x == 0 or self._is_square(x)

    def square_class(self, x):
        x = self(x)
        if x == 0:
            raise ZeroInput("square class of 0")
        return SquareClass(self, self._class_rep(x))

    def class_hash(self, rep):
        return hash(self._class_rep(rep))

    def class_key(self, rep):
        return self.sort_key(self._class_rep(rep))

    def fourth_root_exists(self, x):
        """True iff ``x = c**4`` for some ``c`` in the field."""
        if not self.is_square(x):
            return False
        r = self.sqrt(x)
        return self._is_square(r) or self._is_square(-r)

    def elements(self):
        raise TypeError(f"{self} is infinite")

    def nonzero_elements(self):
        return [x for x in self.elements() if x != 0]

    def format(self, x):
        obj = self.to_json(x)
        return obj if isinstance(obj, str) else json.dumps(obj, sort_keys=True)


@dataclass(frozen=True)
class Rationals(Field):
    kind = "Q"

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, bool):
            raise InvalidInput("booleans are not field elements")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise InvalidInput(f"bad rational literal {value!r}")
        raise InvalidInput(f"cannot read {value!r} as a rational")

    def _is_square(self, x):
        return x > 0 and _is_int_square(x.numerator) and _is_int_square(x.denominator)

    def sqrt(self, x):
        """Nonnegative square root, or None when ``x`` is not a square."""
        x = self(x)
        if x == 0:
            return x
        if not self._is_square(x):
            return None
        return Fraction(math.isqrt(x.numerator), math.isqrt(x.denominator))

    def _class_rep(self, x):
        return Fraction(squarefree_part(x.numerator * x.denominator))

    def class_hash(self, rep):
        rep = self(rep)
        if rep.denominator == 1 and rep == squarefree_part(rep.numerator):
            return hash(rep)
        return hash(self._class_rep(rep))

    def is_canonical_sign(self, x):
        return x > 0

    def sort_key(self, x):
        x = self(x)
        return (abs(x), x < 0)

    def nonsquare(self):
        return Fraction(-1)

    def to_json(self, x):
        x = self(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def parse(self, obj):
        if isinstance(obj, float):
            raise InvalidInput("floats are not accepted; write rationals as 'num/den'")
        return self(obj)

    def descriptor(self):
        return {"kind": "Q"}

    def __str__(self):
        return "Q"


class ModP:
    """Residue modulo an odd prime; mixes freely with ints and Fractions."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError(f"mixing residues mod {self.p} and {other.p}")
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError(f"division by 0 mod {self.p}")
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError(f"division by 0 mod {self.p}")
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e):
        if e < 0:
            if self.v == 0:
                raise ZeroDivisionError(f"division by 0 mod {self.p}")
            return ModP(pow(pow(self.v, -1, self.p), -e, self.p), self.p)
        return ModP(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        return False if o is None else self.v == o

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    kind = "Fp"
    is_finite = True

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise InvalidField(f"prime must be an integer, got {self.p!r}")
        if self.p < 3 or not isprime(self.p):
            raise InvalidField(f"p = {self.p} is not an odd prime")

    def __call__(self, value):
        if isinstance(value, ModP):
            if value.p != self.p:
                raise InvalidInput(f"residue mod {value.p} used in F_{self.p}")
            return value
        if isinstance(value, bool):
            raise InvalidInput("booleans are not field elements")
        if isinstance(value, int):
            return ModP(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise InvalidInput(f"{value} has no image in F_{self.p}")
            return ModP(value.numerator * pow(value.denominator, -1, self.p), self.p)
        if isinstance(value, str):
            try:
                return self(Fraction(value.strip()))
            except (ValueError, ZeroDivisionError):
                raise InvalidInput(f"bad residue literal {value!r}")
        raise InvalidInput(f"cannot read {value!r} as an element of F_{self.p}")

    @property
    def order(self):
        return self.p

    def _is_square(self, x):
        return pow(x.v, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, x):
        """Square root in ``[0, (p-1)/2]``, or None for nonsquares."""
        x = self(x)
        if x == 0:
            return x
        if not self._is_square(x):
            return None
        r = sqrt_mod(x.v, self.p)
        return ModP(min(r, self.p - r), self.p)

    @cached_property
    def least_nonsquare(self):
        n = 2
        while pow(n, (self.p - 1) // 2, self.p) == 1:
            n += 1
        return ModP(n, self.p)

    def nonsquare(self):
        return self.least_nonsquare

    def _class_rep(self, x):
        return self.one if self._is_square(x) else self.least_nonsquare

    def is_canonical_sign(self, x):
        return x.v <= (self.p - 1) // 2

    def sort_key(self, x):
        return self(x).v

    def elements(self):
        return [ModP(i, self.p) for i in range(self.p)]

    def to_json(self, x):
        return str(self(x).v)

    def parse(self, obj):
        if isinstance(obj, float):
            raise InvalidInput("floats are not accepted")
        return self(obj)

    def descriptor(self):
        return {"kind": "Fp", "p": self.p}

    def __str__(self):
        return f"F{self.p}"


class QuadElem:
    """``x + y*sqrt(d)`` in a :class:`QuadExt`."""

    __slots__ = ("x", "y", "field")

    def __init__(self, x, y, field):
        self.x = x
        self.y = y
        self.field = field

    def _coerce(self, other):
        if isinstance(other, QuadElem):
            if other.field != self.field:
                raise ValueError("mixing elements of different quadratic extensions")
            return other
        if isinstance(other, (int, Fraction, ModP)) and not isinstance(other, bool):
            return QuadElem(self.field.base(other), self.field.base.zero, self.field)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.x + o.x, self.y + o.y, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.x - o.x, self.y - o.y, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.d
        return QuadElem(self.x * o.x + d * self.y * o.y, self.x * o.y + self.y * o.x, self.field)

    __rmul__ = __mul__

    def conj(self):
        return QuadElem(self.x, -self.y, self.field)

    def norm(self):
        return self.x * self.x - self.field.d * self.y * self.y

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by 0 in quadratic extension")
        return QuadElem(self.x / n, -self.y / n, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return QuadElem(-self.x, -self.y, self.field)

    def __pos__(self):
        return self

    def __pow__(self, e):
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = self.field.one
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        return o is not None and self.x == o.x and self.y == o.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def __repr__(self):
        return f"QuadElem({self.x}, {self.y}; d={self.field.d})"

    def __str__(self):
        return f"{self.x} + {self.y}*sqrt({self.field.d})"


@dataclass(frozen=True)
class QuadExt(Field):
    """``base(sqrt(d))`` for a nonsquare ``d``; towers stop after one step."""

    base: Field
    d: object

    kind = "QuadExt"

    def __post_init__(self):
        if not isinstance(self.base, (Rationals, PrimeField)):
            raise TowerTooDeep("quadratic extensions may only sit over Q or F_p")
        d = self.base(self.d)
        object.__setattr__(self, "d", d)
        if d == 0 or self.base.is_square(d):
            raise InvalidField(f"d = {self.base.format(d)} is a square in {self.base}")

    @property
    def is_finite(self):
        return self.base.is_finite

    @property
    def order(self):
        return self.base.order**2

    def __call__(self, value):
        if isinstance(value, QuadElem):
            if value.field != self:
                raise InvalidInput("element belongs to a different extension")
            return value
        if isinstance(value, tuple) and len(value) == 2:
            return QuadElem(self.base(value[0]), self.base(value[1]), self)
        if isinstance(value, dict):
            try:
                return QuadElem(self.base.parse(value["x"]), self.base.parse(value["y"]), self)
            except KeyError:
                raise InvalidInput("quadratic-extension literal needs 'x' and 'y'")
        return QuadElem(self.base(value), self.base.zero, self)

    @property
    def sqrt_d(self):
        return QuadElem(self.base.zero, self.base.one, self)

    def embed(self, x):
        return QuadElem(self.base(x), self.base.zero, self)

    def sigma(self, x):
        """The nontrivial automorphism ``x + y*sqrt(d) -> x - y*sqrt(d)``."""
        return self(x).conj()

    def _is_square(self, t):
        base = self.base
        a, b = t.x, t.y
        if b == 0:
            return base._is_square(a) or base._is_square(a / self.d)
        n = base.sqrt(a * a - self.d * b * b)
        if n is None:
            return False
        return any(c != 0 and base._is_square(c) for c in ((a + n) / 2, (a - n) / 2))

    def sqrt(self, t):
        """Canonical root: its first nonzero coordinate has the base's canonical sign."""
        t = self(t)
        base = self.base
        if t == 0:
            return t
        a, b = t.x, t.y
        root = None
        if b == 0:
            r = base.sqrt(a)
            if r is not None:
                root = QuadElem(r, base.zero, self)
            else:
                r = base.sqrt(a / self.d)
                if r is not None:
                    root = QuadElem(base.zero, r, self)
        else:
            n = base.sqrt(a * a - self.d * b * b)
            if n is not None:
                for cand in ((a + n) / 2, (a - n) / 2):
                    if cand != 0:
                        x = base.sqrt(cand)
                        if x is not None:
                            root = QuadElem(x, b / (2 * x), self)
                            break
        if root is None:
            return None
        lead = root.x if root.x != 0 else root.y
        return root if base.is_canonical_sign(lead) else -root

    def _class_rep(self, t):
        base = self.base
        if isinstance(base, Rationals):
            coords = [c for c in (t.x, t.y) if c != 0]
            g = Fraction(
                math.gcd(*(c.numerator for c in coords)),
                math.lcm(*(c.denominator for c in coords)),
            )
            core = base._class_rep(g)
            return QuadElem(t.x / g * core, t.y / g * core, self)
        lead = t.x if t.x != 0 else t.y
        scale = (base.one if base._is_square(lead) else base.least_nonsquare) / lead
        return QuadElem(t.x * scale, t.y * scale, self)

    def class_hash(self, rep):
        return hash(self.base._class_rep(self(rep).norm()))

    def class_key(self, rep):
        rep = self._class_rep(self(rep))
        return (self.base.class_key(rep.norm()), self.sort_key(rep))

    def is_canonical_sign(self, t):
        lead = t.x if t.x != 0 else t.y
        return self.base.is_canonical_sign(lead)

    def sort_key(self, t):
        t = self(t)
        return (self.base.sort_key(t.x), self.base.sort_key(t.y))

    @cached_property
    def _nonsquare(self):
        base = self.base
        candidates = [base(k) for k in (-1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7)]
        for k in candidates:
            if k != 0 and not self._is_square(self.embed(k)):
                return self.embed(k)
        i = 0
        while True:
            cand = QuadElem(base(i), base.one, self)
            if cand != 0 and not self._is_square(cand):
                return cand
            i += 1

    def nonsquare(self):
        return self._nonsquare

    def elements(self):
        if not self.is_finite:
            raise TypeError(f"{self} is infinite")
        return [QuadElem(x, y, self) for x in self.base.elements() for y in self.base.elements()]

    def to_json(self, t):
        t = self(t)
        return {"x": self.base.to_json(t.x), "y": self.base.to_json(t.y)}

    def parse(self, obj):
        if isinstance(obj, dict):
            return self(obj)
        return self.embed(self.base.parse(obj))

    def descriptor(self):
        return {"kind": "QuadExt", "base": self.base.descriptor(), "d": self.base.to_json(self.d)}

    def __str__(self):
        return f"{self.base}(sqrt({self.base.format(self.d)}))"


@dataclass(frozen=True, eq=False)
class SquareClass:
    """The coset ``rep * (F^x)^2``; equality is decided by squareness of the ratio."""

    field: Field
    rep: object

    def __eq__(self, other):
        if not isinstance(other, SquareClass) or other.field != self.field:
            return NotImplemented
        return self.field.is_square(self.rep / other.rep)

    def __hash__(self):
        return hash((self.field, self.field.class_hash(self.rep)))

    def __mul__(self, other):
        return self.field.square_class(self.rep * other.rep)

    def __neg__(self):
        return self.field.square_class(-self.rep)

    def is_trivial(self):
        return self.field.is_square(self.rep)

    def sort_key(self):
        return self.field.class_key(self.rep)

    def to_json(self):
        return self.field.to_json(self.rep)

    def __repr__(self):
        return f"SquareClass({self.field.format(self.rep)} in {self.field})"

    def __str__(self):
        return self.field.format(self.rep)


def is_square(F, x):
    """True iff ``x`` (nonzero) is a square in ``F``."""
    return F.is_square(x)


def square_class(F, x):
    return F.square_class(x)


def quad_ext_iso(F, a, b):
    """Decide ``F(sqrt a) ~= F(sqrt b)`` over ``F``."""
    a, b = F(a), F(b)
    for name, val in (("a", a), ("b", b)):
        if val == 0:
            raise ZeroInput(f"{name} = 0")
        if F.is_square(val):
            raise SquareInput(f"{name} = {F.format(val)} is a square in {F}")
    return F.is_square(a / b)


def parse_field(obj):
    """Build a field from a descriptor.

    Accepts the JSON form ``{"kind": "Q" | "Fp" | "QuadExt", ...}`` or the
    shorthands ``"Q"``, ``"Fp:5"``, ``"F5"`` and ``"GF(5)"``.
    """
    if isinstance(obj, Field):
        return obj
    if isinstance(obj, str):
        text = obj.strip()
        if text.startswith("{"):
            try:
                return parse_field(json.loads(text))
            except json.JSONDecodeError as exc:
                raise InvalidField(f"bad field descriptor: {exc}")
        if text in ("Q", "QQ"):
            return Rationals()
        for prefix, suffix in (("Fp:", ""), ("GF(", ")"), ("F", "")):
            if text.startswith(prefix) and text.endswith(suffix):
                digits = text[len(prefix) : len(text) - len(suffix)]
                if digits.isdigit():
                    return PrimeField(int(digits))
        raise InvalidField(f"unknown field descriptor {obj!r}")
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InvalidField(f"field descriptor must be an object with 'kind', got {obj!r}")
    kind = obj["kind"]
    if kind == "Q":
        return Rationals()
    if kind == "Fp":
        p = obj.get("p")
        if isinstance(p, str) and p.isdigit():
            p = int(p)
        return PrimeField(p)
    if kind == "QuadExt":
        if "base" not in obj or "d" not in obj:
            raise InvalidField("QuadExt needs 'base' and 'd'")
        base = parse_field(obj["base"])
        if not isinstance(base, (Rationals, PrimeField)):
            raise TowerTooDeep("quadratic extensions may only sit over Q or F_p")
        return QuadExt(base, base.parse(obj["d"]))
    raise InvalidField(f"unknown field kind {kind!r}")
