from fractions import Fraction
from itertools import product

import pytest

from biquad import V4, BiquadPoly, PrimeField, QuarticPoly, Rationals, aut_type, quadratic_subfields
from biquad import poly
from biquad import serialize as ser
from biquad.errors import OracleScopeExceeded, ReducibleInput
from biquad.oracle import factor_quartic, frobenius_report, galois_group_finite, subfields_oracle
from pools import c2_pool, v4_pool

Q = Rationals()
F5 = PrimeField(5)

# factorization patterns of all monic quartics, counted by the oracle
PATTERNS = {
    3: {"1+1+1+1": 15, "2+1+1": 18, "2+2": 6, "3+1": 24, "irreducible-degree-4": 18},
    5: {"1+1+1+1": 70, "2+1+1": 150, "2+2": 55, "3+1": 200, "irreducible-degree-4": 150},
}


def bq(u, w, F=Q):
    return BiquadPoly(F(u), F(w))


class TestFactor:
    def test_examples(self):
        rep = factor_quartic(Q, bq(0, 4))
        assert rep.pattern == "2+2"
        assert sorted(tuple(f) for f, _ in rep.factors) == [(2, -2, 1), (2, 2, 1)]
        assert factor_quartic(F5, bq(0, 2, F5)).irreducible
        assert factor_quartic(Q, bq(-10, 1)).irreducible

    def test_scope(self):
        with pytest.raises(OracleScopeExceeded):
            factor_quartic(Q, QuarticPoly(Fraction(1), Fraction(0), Fraction(0), Fraction(1)))

    @pytest.mark.parametrize("p", sorted(PATTERNS))
    def test_pattern_census(self, p):
        F = PrimeField(p)
        counts = {}
        for u, v, w, z in product(range(p), repeat=4):
            P = QuarticPoly(F(u), F(v), F(w), F(z))
            rep = factor_quartic(F, P)
            counts[rep.pattern] = counts.get(rep.pattern, 0) + 1
            total = [F.one]
            for f, m in rep.factors:
                for _ in range(m):
                    total = poly.mul(F, total, f)
            assert total == P.coeffs(F)
        assert counts == PATTERNS[p]
        assert counts["irreducible-degree-4"] == (p**4 - p**2) // 4

    def test_rational_biquadratics(self):
        for u, w in product(range(-8, 9), range(-8, 9)):
            if w == 0:
                continue
            rep = factor_quartic(Q, bq(u, w))
            total = [Fraction(1)]
            for f, m in rep.factors:
                for _ in range(m):
                    total = poly.mul(Q, total, f)
            assert total == bq(u, w).coeffs(Q)

    def test_json(self):
        for P in (bq(0, 4), bq(-10, 1), bq(-5, 4), bq(0, -1)):
            rep = factor_quartic(Q, P)
            assert ser.factor_report_from_json(Q, ser.factor_report_to_json(Q, rep)) == rep


class TestGaloisFinite:
    def test_examples(self):
        assert galois_group_finite(5, bq(0, 2, F5)) == "C4"
        F7 = PrimeField(7)
        P = bq(1, 3, F7)
        if factor_quartic(F7, P).irreducible:
            assert galois_group_finite(7, P) == "C4"

    def test_reducible(self):
        with pytest.raises(ReducibleInput):
            galois_group_finite(5, bq(0, 1, F5))

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_frobenius_structure(self, p):
        F = PrimeField(p)
        for u, w in product(range(p), range(1, p)):
            P = bq(u, w, F)
            if not factor_quartic(F, P).irreducible:
                continue
            rep = frobenius_report(p, P)
            assert rep.label == "C4" and rep.distinct_conjugates == 4
            assert rep.roots_in_quadratic_subfield == 0
            # w = product of all four roots up to sign, a square in L
            assert rep.w_square_in_L


class TestSubfieldsOracle:
    def test_examples(self):
        assert sorted(k.rep for k in subfields_oracle(Q, bq(-10, 1))) == [2, 3, 6]
        assert [k.rep for k in subfields_oracle(Q, bq(0, -2))] == [2]
        assert [k.rep for k in subfields_oracle(F5, bq(0, 2, F5))] == [F5(2)]

    def test_pools(self):
        for P in v4_pool() + c2_pool() + [bq(-4, 2)]:
            found = subfields_oracle(Q, P)
            lib = quadratic_subfields(Q, P).classes
            assert found == lib
            assert len(found) == (3 if aut_type(Q, P) == V4 else 1)
