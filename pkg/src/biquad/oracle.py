"""Brute-force ground truth for tests and the ``oracle-check`` command.

Nothing here uses the closed-form criteria being validated.  Finite fields are
searched exhaustively; over Q only biquadratics are handled, by the rational
root theorem plus the three ways such a polynomial can split into quadratics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from sympy import divisors

from . import poly
from .biquadratic import BiquadPoly
from .errors import OracleScopeExceeded, ReducibleInput
from .field import Field, PrimeField, QuadExt, Rationals
from .normal_forms import QuarticPoly
from .ring import QuotientRing, minimal_polynomial


@dataclass(frozen=True)
class FactorReport:
    factors: tuple  # ((coefficients low -> high, multiplicity), ...)
    pattern: str

    @property
    def irreducible(self):
        return self.pattern == "irreducible-degree-4"


def _pattern(factors):
    degs = sorted((len(f) - 1 for f, m in factors for _ in range(m)), reverse=True)
    if degs == [4]:
        return "irreducible-degree-4"
    return "+".join(map(str, degs))


def _collect(factors):
    out = []
    for f in factors:
        for i, (g, m) in enumerate(out):
            if g == f:
                out[i] = (g, m + 1)
                break
        else:
            out.append((f, 1))
    return tuple(out)


def _strip_roots(F, f, roots):
    factors = []
    for r in roots:
        while len(f) > 1:
            q, rem = poly.divmod_(F, f, [-r, F.one])
            if rem:
                break
            factors.append([-r, F.one])
            f = q
    return f, factors


def _finite_factor(F, f):
    roots = [x for x in F.elements() if poly.evaluate(f, x) == 0]
    rest, factors = _strip_roots(F, f, roots)
    if len(rest) == 5:
        elems = F.elements()
        for b, c in product(elems, elems):
            q, r = poly.divmod_(F, rest, [c, b, F.one])
            if not r:
                factors += [[c, b, F.one], q]
                break
        else:
            factors.append(rest)
    elif len(rest) > 1:
        factors.append(rest)
    return factors


def _rat_sqrt(x):
    """Nonnegative rational square root, or None."""
    x = Fraction(x)
    if x < 0:
        return None
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    return Fraction(n, d) if n * n == x.numerator and d * d == x.denominator else None


def _rational_roots(f):
    if f[0] == 0:
        return [Fraction(0)] + _rational_roots(poly.trim(f[1:]))
    den = math.lcm(*(c.denominator for c in f))
    g = [int(c * den) for c in f]
    cands = set()
    for p_ in divisors(abs(g[0])):
        for q in divisors(abs(g[-1])):
            cands.update((Fraction(p_, q), Fraction(-p_, q)))
    return sorted((r for r in cands if poly.evaluate(f, r) == 0), key=lambda r: (abs(r), r))


def _rational_biquad_split(w, u):
    """Monic quadratic pairs multiplying to ``X^4 + uX^2 + w``, or None."""
    t = _rat_sqrt(u * u - 4 * w)
    if t is not None:
        r1, r2 = (-u + t) / 2, (-u - t) / 2
        return [[-r1, 0, 1], [-r2, 0, 1]]
    om = _rat_sqrt(w)
    if om is None:
        return None
    for o in (om, -om):
        k = _rat_sqrt(2 * o - u)
        if k is not None:
            return [[o, -k, 1], [o, k, 1]]
    return None


def _rational_factor(F, f):
    if f[1] != 0 or f[3] != 0:
        raise OracleScopeExceeded("over Q only biquadratic quartics are in scope")
    rest, factors = _strip_roots(F, f, _rational_roots(f))
    if len(rest) == 5:
        split = _rational_biquad_split(rest[0], rest[2])
        if split is None:
            factors.append(rest)
        else:
            factors += [[F(c) for c in g] for g in split]
    elif len(rest) > 1:
        factors.append(rest)
    return factors


def factor_quartic(F: Field, P) -> FactorReport:
    if isinstance(P, BiquadPoly):
        P = QuarticPoly(0, P.u, 0, P.w)
    f = P.coeffs(F)
    if F.is_finite:
        factors = _finite_factor(F, f)
    elif isinstance(F, Rationals):
        factors = _rational_factor(F, f)
    else:
        raise OracleScopeExceeded(f"no factorization oracle over {F}")
    factors = [poly.trim(g) for g in factors]
    prod_ = [F.one]
    for g in factors:
        prod_ = poly.mul(F, prod_, g)
    assert prod_ == poly.trim(f), "factor product does not reproduce the input"
    collected = _collect(factors)
    return FactorReport(collected, _pattern(collected))


@dataclass(frozen=True)
class FrobeniusReport:
    label: str
    distinct_conjugates: int
    frobenius_order: int
    roots_in_quadratic_subfield: int
    w_square_in_L: bool


def frobenius_report(p: int, P: BiquadPoly) -> FrobeniusReport:
    F = PrimeField(p)
    if not factor_quartic(F, P).irreducible:
        raise ReducibleInput(f"{P.format(F)} is reducible over F{p}")
    R = QuotientRing(F, tuple(P.coeffs(F)), check=False)
    conj = [R.y]
    while True:
        nxt = R.pow(conj[-1], p)
        if nxt == R.y:
            break
        conj.append(nxt)
    in_fp2 = sum(1 for x in conj if R.pow(x, p * p) == x)
    w_sq = R.pow(R.constant(P.w), (p**4 - 1) // 2) == R.one
    label = "C4" if len(set(conj)) == 4 and len(conj) == 4 else f"order-{len(conj)}"
    return FrobeniusReport(label, len(set(conj)), len(conj), in_fp2, w_sq)


def galois_group_finite(p: int, P: BiquadPoly) -> str:
    """Galois group of an irreducible biquadratic over F_p from its Frobenius orbit."""
    return frobenius_report(p, P).label


def _grid(F, P):
    if isinstance(F, PrimeField) or (isinstance(F, QuadExt) and F.is_finite):
        return F.elements()
    if isinstance(F, Rationals):
        u, w = F(P.u), F(P.w)
        den = math.lcm(u.denominator, w.denominator)
        height = math.ceil(abs(u)) + math.isqrt(math.ceil(abs(w))) + 2
        return [Fraction(n, den) for n in range(-height * den, height * den + 1)]
    raise OracleScopeExceeded(f"no subfield grid over {F}")


def subfields_oracle(F: Field, P: BiquadPoly):
    """Square classes of discriminants of quadratic elements ``y^2`` and ``c*y + y^3``."""
    if not factor_quartic(F, P).irreducible:
        raise ReducibleInput(f"{P.format(F)} is reducible over {F}")
    R = QuotientRing(F, tuple(P.coeffs(F)), check=False)
    found = set()
    cands = [(F.zero, F.zero, F.one, F.zero)]
    cands += [(F.zero, F(c), F.zero, F.one) for c in _grid(F, P)]
    for v in cands:
        m = minimal_polynomial(R, v)
        if len(m) == 3:
            found.add(F.square_class(m[1] * m[1] - 4 * m[0]))
    return found
