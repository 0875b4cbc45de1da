from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biquad import PrimeField, QuarticPoly, Rationals, TaylorData, normalize, taylor_at_quarter
from biquad import serialize as ser
from biquad.normal_forms import (
    BiquadForm,
    ReducibleRootQuarterU,
    ReducibleRootZero,
    RForm,
    reciprocal_identity_holds,
    taylor_identity_holds,
    verify_substitution,
)
from biquad.oracle import factor_quartic

Q = Rationals()


def quartic(*coeffs):
    """From high to low coefficients after the leading 1."""
    return QuarticPoly(*(Fraction(c) for c in coeffs))


def form_irreducible(F, nf):
    if isinstance(nf, (ReducibleRootZero, ReducibleRootQuarterU)):
        return False
    return factor_quartic(F, nf.polynomial(F)).irreducible


class TestTaylor:
    def test_examples(self):
        assert taylor_at_quarter(Q, quartic(0, 0, 0, 0)) == TaylorData(0, 0, 0)
        T = taylor_at_quarter(Q, quartic(4, 6, 4, 2))
        assert (T.P0, T.P1, T.P2) == (1, 0, 0)
        T = taylor_at_quarter(Q, quartic(4, 0, 8, 4))
        assert (T.P0, T.P1, T.P2) == (-7, 16, -12)

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.integers(-9, 9), min_size=4, max_size=4))
    def test_expansion_identity(self, coeffs):
        P = quartic(*coeffs)
        assert taylor_identity_holds(Q, P, taylor_at_quarter(Q, P))


class TestNormalize:
    def test_biquad_example(self):
        nf = normalize(Q, quartic(4, 6, 4, 2))
        assert isinstance(nf, BiquadForm)
        assert (nf.a, nf.b, nf.shift) == (0, 1, 1)
        assert nf.substitution(Q) == "y = x + 1"
        assert verify_substitution(Q, quartic(4, 6, 4, 2), nf)

    def test_root_zero(self):
        assert isinstance(normalize(Q, quartic(0, 0, 1, 0)), ReducibleRootZero)

    def test_root_quarter_u(self):
        # (X + 1)(X^3 + ...) has -u/4 = -1 as a root when u = 4
        assert isinstance(normalize(Q, quartic(4, 6, 4, 1)), ReducibleRootQuarterU)

    def test_rform_example(self):
        nf = normalize(Q, quartic(4, 0, 8, 4))
        assert isinstance(nf, RForm)
        assert nf.a == Fraction(-1536, 49)
        assert nf.b == Fraction(-65536, 343)
        assert nf.tform.c == Fraction(21, 128)
        assert nf.tform.d == Fraction(-343, 65536)
        assert reciprocal_identity_holds(Q, nf)
        assert verify_substitution(Q, quartic(4, 0, 8, 4), nf)

    def test_u_zero_still_rform(self):
        # the dispatch never looks at u
        nf = normalize(Q, quartic(0, 0, 1, 1))
        assert isinstance(nf, RForm)
        assert verify_substitution(Q, quartic(0, 0, 1, 1), nf)

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.integers(-9, 9), min_size=4, max_size=4))
    def test_reciprocal_identity(self, coeffs):
        nf = normalize(Q, quartic(*coeffs))
        if isinstance(nf, RForm):
            assert nf.tform.P0 != 0 and nf.tform.P1 != 0
            assert reciprocal_identity_holds(Q, nf)

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_exhaustive_equivalence(self, p):
        F = PrimeField(p)
        for u, v, w, z in product(range(p), repeat=4):
            P = QuarticPoly(F(u), F(v), F(w), F(z))
            nf = normalize(F, P)
            irr = factor_quartic(F, P).irreducible
            assert form_irreducible(F, nf) == irr, (p, u, v, w, z)
            if isinstance(nf, BiquadForm):
                assert taylor_at_quarter(F, P).P1 == 0
            if irr and not isinstance(nf, (ReducibleRootZero, ReducibleRootQuarterU)):
                assert verify_substitution(F, P, nf)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(-5, 5), min_size=4, max_size=4))
    def test_json_round_trip(self, coeffs):
        nf = normalize(Q, quartic(*coeffs))
        doc = ser.normal_form_to_json(Q, nf)
        assert ser.normal_form_from_json(Q, doc) == nf
        assert ser.dumps(doc) == ser.dumps(ser.normal_form_to_json(Q, ser.normal_form_from_json(Q, doc)))
