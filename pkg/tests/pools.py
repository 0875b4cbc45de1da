"""Deterministic polynomial pools shared by the test modules."""

from fractions import Fraction
import random
from itertools import product

from sympy import integer_nthroot

from biquad import C2, V4, BiquadPoly, Rationals, aut_type, is_irreducible_biquadratic
from biquad.elem_abelian import compose_elem_abelian
from biquad.moduli import S3, enumerate_elem_abelian_classes, s3_act

Q = Rationals()
GENS = (-1, 2, 3)


def v4_pool(size=50):
    """Klein-four polynomials whose parameters lie in the group generated by -1, 2, 3.

    Each orbit contributes members obtained from S3 images of its representative,
    square rescalings of the entries and rescalings of the root.
    """
    pool = []
    seen = set()
    orbits = enumerate_elem_abelian_classes(Q, GENS)
    scalings = [(1, 1), (4, 1), (1, 9), (4, 9), (9, 4)]
    for step in range(12):
        for key in orbits:
            g = S3[step % 6]
            pc = s3_act(g, key.canonical_rep)
            ka, kb = scalings[(step // 2) % len(scalings)]
            a, b = pc.a_class.rep * ka, pc.b_class.rep * kb
            if a == b:
                continue
            P = compose_elem_abelian(Q, a, b)
            if step >= 6:
                P = P.rescale(Q, Fraction(1, 2) if step % 2 else 2)
            if (P.u, P.w) in seen:
                continue
            seen.add((P.u, P.w))
            pool.append(P)
            if len(pool) == size:
                return pool
    raise AssertionError("V4 pool too small")


def c2_pool(size=30):
    """Non-Galois polynomials ``X^4 + uX^2 + s d^2`` with square-free ``s`` and ``d`` in {1, 2}."""
    must = [BiquadPoly(Fraction(0), Fraction(-2)), BiquadPoly(Fraction(0), Fraction(-8)), BiquadPoly(Fraction(0), Fraction(-3))]
    pool = list(must)
    for u, s, d in product((0, 1, -1, 2, -2, 3, -3), (2, -2, 3, -3, 5, -5, 6, -6), (1, 2)):
        P = BiquadPoly(Fraction(u), Fraction(s * d * d))
        if P in pool:
            continue
        if is_irreducible_biquadratic(Q, P) and aut_type(Q, P) == C2:
            pool.append(P)
        if len(pool) == size:
            return pool
    raise AssertionError("C2 pool too small")


def rational_fourth_power(x):
    x = Fraction(x)
    if x <= 0:
        return False
    return all(integer_nthroot(n, 4)[1] for n in (x.numerator, x.denominator))


def random_radical_pairs(count, seed=0):
    """Pairs ``(a, a2)`` with both ``X^4 + a`` and ``X^4 + a2`` Klein four."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        t = Fraction(rng.randint(1, 30), rng.randint(1, 4))
        a = t * t
        if not (is_irreducible_biquadratic(Q, BiquadPoly(Fraction(0), a)) and aut_type(Q, BiquadPoly(Fraction(0), a)) == V4):
            continue
        d = Fraction(rng.randint(1, 6), rng.randint(1, 3))
        choice = rng.randrange(3)
        if choice == 0:
            a2 = d**4 * a
        elif choice == 1:
            a2 = d**4 * a**3
        else:
            a2 = a * rng.choice([4, 9, 25, 36, 100])
        P2 = BiquadPoly(Fraction(0), a2)
        if is_irreducible_biquadratic(Q, P2) and aut_type(Q, P2) == V4:
            out.append((a, a2))
    return out


def fourth_power_conditions(a, a2):
    """Fourth-power tests written directly with integer roots."""
    cond3 = rational_fourth_power(a2 / a)
    cond2 = cond3 or rational_fourth_power(a2 / a**3)
    return cond2, cond3
