"""Randomized property suite for the square-class pair algebra."""

from __future__ import annotations

import random
from itertools import product

from .field import Field, Rationals
from .moduli import (
    IDENTITY,
    S3,
    PairClass,
    class_group,
    in_excluded_S,
    orbit,
    s3_act,
    s3_mul,
    sim1_equal,
    sim_equal,
)


class Tally:
    def __init__(self):
        self.counts = {}
        self.failures = {}

    def check(self, name, ok, detail=None):
        self.counts[name] = self.counts.get(name, 0) + 1
        if not ok:
            self.failures.setdefault(name, []).append(detail)

    def summary(self):
        return {
            name: {"checks": n, "failures": len(self.failures.get(name, []))}
            for name, n in sorted(self.counts.items())
        }

    @property
    def ok(self):
        return not self.failures


def _random_pair(F, G, rng):
    """A pair with entries ``rep * k^2`` for random classes and random scalars ``k``."""
    scalars = [k for k in map(F, (1, 2, 3, -1, -2, 5, 7)) if k != 0]

    def entry():
        k = rng.choice(scalars)
        return rng.choice(G).rep * k * k

    return (entry(), entry())


def _near(F, p, rng):
    """A pair related to ``p``: an S3 image with entries rescaled by squares."""
    img = s3_act(rng.choice(S3), PairClass.of(F, *p))
    k = F(rng.choice([1, 2, -1]))
    return (img.a_class.rep * k * k, img.b_class.rep)


def run_moduli_checks(F: Field | None = None, gens=(-1, 2, 3, 5), n=1000, seed=0) -> Tally:
    """Run every law at least ``n`` times on random pairs built from ``gens``."""
    F = F or Rationals()
    rng = random.Random(seed)
    G = class_group(F, None if F.is_finite else gens)
    t = Tally()
    pool = [_random_pair(F, G, rng) for _ in range(60)]

    for _ in range(n):
        p = _random_pair(F, G, rng)
        t.check("sim_reflexive", sim_equal(F, p, p), p)
        t.check("sim1_reflexive", sim1_equal(F, p, p), p)

    for _ in range(n):
        p = rng.choice(pool)
        q = _near(F, p, rng) if rng.random() < 0.5 else rng.choice(pool)
        r = _near(F, q, rng) if rng.random() < 0.5 else rng.choice(pool)
        pq, qr, pr = sim_equal(F, p, q), sim_equal(F, q, r), sim_equal(F, p, r)
        t.check("sim_symmetric", pq == sim_equal(F, q, p), (p, q))
        t.check("sim_transitive", not (pq and qr) or pr, (p, q, r))
        same_orbit = orbit(F, p) == orbit(F, q)
        t.check("sim_iff_same_orbit", pq == same_orbit, (p, q))

        b, b1 = q
        base = sim_equal(F, p, (b, b1))
        for rewrite in ((b1, b), (b, b * b1), (b * b1, b), (b1, b * b1), (b * b1, b1)):
            t.check("rewrite_invariance", sim_equal(F, p, rewrite) == base, (p, q, rewrite))

    for _ in range(n):
        pc = PairClass.of(F, *_random_pair(F, G, rng))
        t.check("action_identity", s3_act(IDENTITY, pc) == pc, pc)
        g, h = rng.choice(S3), rng.choice(S3)
        t.check("action_compatible", s3_act(s3_mul(g, h), pc) == s3_act(g, s3_act(h, pc)), (g, h, pc))
        t.check("orbit_size_divides_6", 6 % len(orbit(F, pc)) == 0, pc)
    # every (g, h) pair at least once on a fixed sample
    pc = PairClass.of(F, *pool[0])
    for g, h in product(S3, S3):
        t.check("action_compatible", s3_act(s3_mul(g, h), pc) == s3_act(g, s3_act(h, pc)), (g, h, pc))

    # N = {(1, k)}: a subgroup mapped bijectively onto the classes by the second entry
    one = F.square_class(1)
    N = [PairClass(one, k) for k in G]
    for _ in range(n):
        x, y = rng.choice(N), rng.choice(N)
        prod_ = PairClass(x.a_class * y.a_class, x.b_class * y.b_class)
        t.check("N_closed", prod_ in N, (x, y))
        t.check("N_projection_bijective", (x.b_class == y.b_class) == (x == y), (x, y))
        t.check("N_orbits_match_classes", (orbit(F, x) == orbit(F, y)) == (x == y), (x, y))
    n_members = set().union(*(orbit(F, x).members for x in N))
    for _ in range(n):
        a, b = _random_pair(F, G, rng)
        pc = PairClass.of(F, a, b)
        t.check("excluded_iff_in_N_orbit", in_excluded_S(F, (a, b)) == (pc in n_members), pc)
    return t
