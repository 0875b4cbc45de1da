import random
from fractions import Fraction
from itertools import combinations

import pytest
from biquad import (
    V4,
    BiquadPoly,
    ElemAbelianExt,
    QuadExt,
    Rationals,
    aut_type,
    canonical_ab,
    compose_elem_abelian,
    elem_iso,
    is_biquadratic_generator,
    is_irreducible_biquadratic,
    quad_ext_iso,
    quadratic_subfields,
    radical_closure_analysis,
    radical_elem_iso,
    subfield_iso,
)
from biquad import serialize as ser
from biquad.elem_abelian import generator_families
from biquad.errors import DegenerateParameters, NotElementaryAbelian, NotRadicalElementaryAbelian, ZeroInput
from pools import fourth_power_conditions, random_radical_pairs, v4_pool

Q = Rationals()


def bq(u, w):
    return BiquadPoly(Fraction(u), Fraction(w))


class TestParameters:
    def test_canonical_ab(self):
        E = canonical_ab(Q, bq(-10, 1))
        assert (E.a, E.b) == (3, 2)
        E = canonical_ab(Q, bq(0, 36))
        assert (E.a, E.b) == (3, -3)

    def test_compose(self):
        assert compose_elem_abelian(Q, 3, 2) == bq(-10, 1)

    @pytest.mark.parametrize("a,b,which", [(4, 3, "a"), (3, 9, "b"), (2, 2, "ab"), (3, 12, "ab")])
    def test_degenerate(self, a, b, which):
        with pytest.raises(DegenerateParameters) as info:
            compose_elem_abelian(Q, a, b)
        assert info.value.which == which

    def test_zero(self):
        with pytest.raises(ZeroInput):
            compose_elem_abelian(Q, 0, 3)

    def test_round_trip(self):
        rng = random.Random(3)
        done = 0
        while done < 200:
            a = Fraction(rng.randint(-40, 40), rng.randint(1, 5))
            b = Fraction(rng.randint(-40, 40), rng.randint(1, 5))
            try:
                P = compose_elem_abelian(Q, a, b)
            except (DegenerateParameters, ZeroInput):
                continue
            E = canonical_ab(Q, P)
            assert compose_elem_abelian(Q, E.a, E.b) == P
            assert E.subfield_classes() == quadratic_subfields(Q, P).classes
            done += 1

    def test_not_v4(self):
        with pytest.raises(NotElementaryAbelian):
            canonical_ab(Q, bq(0, -2))
        with pytest.raises(NotElementaryAbelian):
            canonical_ab(Q, bq(0, 4))


class TestElemIso:
    def test_examples(self):
        P = bq(-10, 1)
        assert elem_iso(Q, P, bq(-40, 16)).isomorphic
        assert not elem_iso(Q, P, bq(-16, 4)).isomorphic
        v = elem_iso(Q, P, P)
        # unit ratios sit in condition 3, and conditions 1 and 2 fail for this P
        assert v.isomorphic and v.matched_condition == 3

    def test_lowest_matching_condition(self):
        for P in v4_pool(20):
            for R in v4_pool(20):
                v = elem_iso(Q, P, R)
                if v.isomorphic:
                    assert 1 <= v.matched_condition <= 6
                else:
                    assert v.matched_condition is None

    def test_equivalence_relation(self):
        pool = v4_pool()
        n = len(pool)
        M = [[elem_iso(Q, pool[i], pool[j]).isomorphic for j in range(n)] for i in range(n)]
        for i in range(n):
            assert M[i][i]
            for j in range(n):
                assert M[i][j] == M[j][i]
                if M[i][j]:
                    assert M[j] == M[i]

    def test_omega_sign_invariance(self):
        pool = v4_pool(20)
        for P, R in combinations(pool, 2):
            wp, wr = Q.sqrt(P.w), Q.sqrt(R.w)
            base = elem_iso(Q, P, R).isomorphic
            for sp in (wp, -wp):
                for sr in (wr, -wr):
                    assert elem_iso(Q, P, R, sp, sr).isomorphic == base
                    assert subfield_iso(Q, P, R, sp, sr) == base

    def test_json(self):
        v = elem_iso(Q, bq(-10, 1), bq(-40, 16))
        assert ser.verdict_from_json(Q, ser.verdict_to_json(Q, v)) == v


class TestRadical:
    def test_trivial_closure(self):
        rep = radical_closure_analysis(ElemAbelianExt(Q, 3, -3))
        assert rep.kind == "TrivialClosure"
        P = rep.radical_min_poly
        assert P == bq(0, 36)
        assert is_irreducible_biquadratic(Q, P) and aut_type(Q, P) == V4
        assert Q.square_class(-1) in quadratic_subfields(Q, P).classes

    def test_no_closure(self):
        K = QuadExt(Q, -1)
        assert radical_closure_analysis(ElemAbelianExt(K, 3, 2)).kind == "NoClosure"

    def test_three_closures(self):
        rep = radical_closure_analysis(ElemAbelianExt(Q, 3, 2))
        assert rep.kind == "ThreeClosures"
        assert [k.rep for k in rep.closure_classes] == [-2, -3, -6]
        for x, y in combinations(rep.closure_classes, 2):
            assert not quad_ext_iso(Q, x.rep, y.rep)

    def test_closures_make_extension_radical(self):
        for a, b in ((3, 2), (5, 3), (2, 7), (-2, 3)):
            E = ElemAbelianExt(Q, a, b)
            rep = radical_closure_analysis(E)
            if rep.kind != "ThreeClosures":
                continue
            P = E.polynomial()
            for k in rep.closure_classes:
                K = QuadExt(Q, k.rep)
                PK = P.over(K)
                assert aut_type(K, PK) == V4
                assert K.square_class(-1) in quadratic_subfields(K, PK).classes

    def test_json_round_trip(self):
        for a, b in ((3, -3), (3, 2)):
            rep = radical_closure_analysis(ElemAbelianExt(Q, a, b))
            assert ser.radical_from_json(Q, ser.radical_to_json(Q, rep)) == rep

    def test_radical_iso_examples(self):
        assert radical_elem_iso(Q, 36, 576)
        assert radical_elem_iso(Q, 36, 2916)
        assert not radical_elem_iso(Q, 36, 72)

    def test_radical_iso_rejects(self):
        with pytest.raises(NotRadicalElementaryAbelian):
            radical_elem_iso(Q, 2, 3)
        with pytest.raises(NotRadicalElementaryAbelian):
            radical_elem_iso(Q, 4, 36)


def test_radical_conditions_agree():
    for a, a2 in random_radical_pairs(100):
        cond2, cond3 = fourth_power_conditions(a, a2)
        assert cond2 == cond3 == radical_elem_iso(Q, a, a2)


class TestGenerators:
    def test_examples(self):
        E = ElemAbelianExt(Q, 3, 2)
        assert is_biquadratic_generator(E, (0, 1, 0, 0))
        assert not is_biquadratic_generator(E, (1, 0, 0, 0))
        assert not is_biquadratic_generator(E, (0, Fraction(11, 2), 0, Fraction(-1, 2)))

    def test_families(self):
        rng = random.Random(11)
        params = [(3, 2), (5, -1), (-2, 3), (7, 5)]
        for i in range(200):
            E = ElemAbelianExt(Q, *params[i % len(params)])
            r = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 4))
            s = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 4))
            fams = generator_families(E, r, s)
            assert is_biquadratic_generator(E, fams["ab"])
            if i % 10 == 0:
                assert is_biquadratic_generator(E, fams["a"])
                assert is_biquadratic_generator(E, fams["b"])
        E = ElemAbelianExt(Q, 3, 2)
        for r, s in ((0, 1), (1, 0), (0, 5)):
            assert not is_biquadratic_generator(E, generator_families(E, r, s)["ab"])
