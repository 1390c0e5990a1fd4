import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import hirzebruch_negative_coeffs, two_lines_negative_coeffs
from redlab.lattice import (BadParameters, DivisorClass, NotPseudoEffective,
                            PicardLattice, fixture_hirzebruch,
                            fixture_two_lines, is_big, lattice_blow_up,
                            lattice_from_json, lattice_to_json, pull_back,
                            zariski_decompose)


def decompose_fixture(fix):
    lat, mk, curves = fix
    return lat, mk, curves, zariski_decompose(lat, mk, curves)


class TestTwoLinesFixture:
    def test_rank_and_self_intersections(self):
        lat, mk, curves = fixture_two_lines(4, 4)
        assert lat.rank == 9
        l1 = dict(curves)["l1"]
        assert lat.pair(l1, l1) == -3
        assert lat.pair(mk, mk) == 9 - 8

    def test_bad_parameters(self):
        with pytest.raises(BadParameters):
            fixture_two_lines(4, 3)
        with pytest.raises(BadParameters):
            fixture_two_lines(3, 4)
        with pytest.raises(BadParameters):
            fixture_two_lines(4, 5)

    def test_44_negative_part(self):
        lat, mk, curves, dec = decompose_fixture(fixture_two_lines(4, 4))
        assert dict(dec.support) == {"l1": Q(1, 2), "l2": Q(1, 2)}
        assert lat.pair(dec.P, dec.P) == 2
        assert is_big(lat, dec.P)

    def test_54_negative_part(self):
        _, _, _, dec = decompose_fixture(fixture_two_lines(5, 4))
        support = dict(dec.support)
        assert support == {"l1": Q(7, 11), "l2": Q(6, 11)}
        # the intersection point of the two lines is redundant
        assert support["l1"] + support["l2"] >= 1

    def test_closed_form_sweep(self):
        for m in range(4, 9):
            for n in range(4, m + 1):
                lat, mk, curves, dec = decompose_fixture(fixture_two_lines(m, n))
                c1, c2 = two_lines_negative_coeffs(m, n)
                assert dict(dec.support) == {"l1": c1, "l2": c2}, (m, n)
                assert lat.pair(dec.P, dec.P) > 0
                assert lat.pair(dec.P, dec.N) == 0
                # nef against every exceptional basis class as well
                for name in lat.basis_names[1:]:
                    assert lat.pair(dec.P, lat.basis_class(name)) >= 0


class TestHirzebruchFixture:
    def test_237(self):
        lat, mk, curves, dec = decompose_fixture(fixture_hirzebruch(2, 3, [2, 3, 7]))
        support = dict(dec.support)
        assert support["sigma"] == Q(44, 43)
        assert support["F1"] == Q(22, 43)
        assert support["F2"] == Q(29, 43)
        assert support["F3"] == Q(37, 43)
        # every point of the section is redundant
        assert support["sigma"] > 1
        assert is_big(lat, dec.P)

    def test_closed_form_matches_solver(self):
        for n, k, a in ((2, 3, [2, 3, 7]), (3, 4, [2, 2, 5, 9]),
                        (4, 3, [4, 5, 21]), (5, 6, [3, 3, 3, 3, 3, 3])):
            lat, mk, curves, dec = decompose_fixture(fixture_hirzebruch(n, k, a))
            sigma_c, fiber_cs = hirzebruch_negative_coeffs(n, k, a)
            support = dict(dec.support)
            assert support["sigma"] == sigma_c
            for i, c in enumerate(fiber_cs, start=1):
                assert support[f"F{i}"] == c
            assert lat.pair(dec.P, dec.N) == 0

    def test_bad_parameters(self):
        with pytest.raises(BadParameters):
            fixture_hirzebruch(2, 3, [3, 3, 3])  # sum 1/a = 1 = k - 2, not strict
        with pytest.raises(BadParameters):
            fixture_hirzebruch(5, 4, [1, 1, 1, 1])  # sum 1/a = 4 >= 2
        with pytest.raises(BadParameters):
            fixture_hirzebruch(1, 3, [2, 3, 7])
        with pytest.raises(BadParameters):
            fixture_hirzebruch(2, 4, [9, 9, 9, 9])  # k > n + 1
        with pytest.raises(BadParameters):
            fixture_hirzebruch(2, 3, [2, 3])  # wrong count


class TestDecompose:
    def test_nef_input_gives_zero_negative_part(self):
        lat, mk, curves = fixture_two_lines(4, 4)
        # 2l - (1/2) sum e is the nef part itself
        half = Q(1, 2)
        p = DivisorClass.of([2] + [-half] * 8)
        dec = zariski_decompose(lat, p, curves)
        assert dec.N == DivisorClass.zero(9)
        assert dec.P == p
        assert dec.support == ()

    def test_no_candidates(self):
        lat, mk, _ = fixture_two_lines(4, 4)
        dec = zariski_decompose(lat, mk, [])
        assert dec.P == mk

    def test_not_pseudo_effective(self):
        # candidate with positive self-intersection met negatively
        lat = PicardLattice(form=((2,),), basis_names=("c",))
        c = DivisorClass.of([1])
        d = DivisorClass.of([-1])
        with pytest.raises(NotPseudoEffective):
            zariski_decompose(lat, d, [("c", c)])

    def test_unique_under_candidate_reordering(self):
        lat, mk, curves = fixture_hirzebruch(2, 3, [2, 3, 7])
        base = zariski_decompose(lat, mk, curves)
        rng = random.Random(7)
        for _ in range(6):
            shuffled = curves[:]
            rng.shuffle(shuffled)
            dec = zariski_decompose(lat, mk, shuffled)
            assert dec.P == base.P and dec.N == base.N
            assert dict(dec.support) == dict(base.support)

    def test_duplicate_names_rejected(self):
        lat, mk, curves = fixture_two_lines(4, 4)
        with pytest.raises(ValueError):
            zariski_decompose(lat, mk, [curves[0], curves[0]])

    def test_support_grows_beyond_initial_negatives(self):
        # on the n=2 surface D.sigma = 0 and D.F1 = 0, yet both end up in
        # the support with positive coefficients
        lat, mk, curves = fixture_hirzebruch(2, 3, [2, 3, 7])
        assert lat.pair(mk, dict(curves)["sigma"]) == 0
        assert lat.pair(mk, dict(curves)["F1"]) == 0
        dec = zariski_decompose(lat, mk, curves)
        assert dict(dec.support)["sigma"] > 0
        assert dict(dec.support)["F1"] > 0


class TestIsBig:
    def test_positive_square(self):
        lat, mk, curves, dec = decompose_fixture(fixture_two_lines(4, 4))
        assert is_big(lat, dec.P)

    def test_zero_class(self):
        lat, _, _ = fixture_two_lines(4, 4)
        assert not is_big(lat, DivisorClass.zero(9))

    def test_zero_square(self):
        lat = PicardLattice(form=((0,),), basis_names=("f",))
        assert not is_big(lat, DivisorClass.of([1]))


class TestBlowUp:
    def test_redundant_point_pullback(self):
        """Blowing up the intersection of the two lines leaves the nef part
        pulled back and puts mult - 1 on the exceptional curve."""
        for m, n in ((4, 4), (5, 4), (6, 5), (8, 8)):
            lat, mk, curves = fixture_two_lines(m, n)
            dec = zariski_decompose(lat, mk, curves)
            mult = sum(x for _, x in dec.support)
            new_lat, new_curves, e = lattice_blow_up(lat, ["l1", "l2"], curves)
            assert new_lat.rank == m + n + 2
            mk_up = pull_back(mk) - e
            dec_up = zariski_decompose(new_lat, mk_up, new_curves + [("e", e)])
            assert dec_up.P == pull_back(dec.P)
            support = dict(dec_up.support)
            assert support.get("e", Q(0)) == mult - 1
            assert support["l1"] == dict(dec.support)["l1"]
            assert support["l2"] == dict(dec.support)["l2"]

    def test_point_on_no_curve_is_not_redundant(self):
        """Blowing up away from the negative part: multiplicity 0, so the
        exceptional coefficient mult - 1 = -1 is not effective and the
        blow-up does not pull the nef part back."""
        lat, mk, curves = fixture_two_lines(4, 4)
        dec = zariski_decompose(lat, mk, curves)
        new_lat, new_curves, e = lattice_blow_up(lat, [], curves)
        mk_up = pull_back(mk) - e
        dec_up = zariski_decompose(new_lat, mk_up, new_curves + [("e", e)])
        support = dict(dec_up.support)
        assert support.get("e", Q(0)) == 0  # not mult - 1 = -1
        assert dec_up.P == pull_back(dec.P) - e
        assert dec_up.P != pull_back(dec.P)

    def test_too_many_curves(self):
        lat, mk, curves = fixture_two_lines(4, 4)
        with pytest.raises(ValueError):
            lattice_blow_up(lat, ["l1", "l2", "l1"], curves)

    def test_unknown_curve(self):
        lat, mk, curves = fixture_two_lines(4, 4)
        with pytest.raises(ValueError):
            lattice_blow_up(lat, ["nope"], curves)


coords6 = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                   min_size=9, max_size=9)


@given(coords6, coords6)
@settings(max_examples=100, deadline=None)
def test_pullback_preserves_intersections(xs, ys):
    lat, _, curves = fixture_two_lines(4, 4)
    a = DivisorClass.of(xs)
    b = DivisorClass.of(ys)
    new_lat, _, e = lattice_blow_up(lat, [], curves)
    assert new_lat.pair(pull_back(a), pull_back(b)) == lat.pair(a, b)
    assert new_lat.pair(pull_back(a), e) == 0
    assert new_lat.pair(e, e) == -1


def test_json_round_trip():
    lat, mk, curves = fixture_hirzebruch(2, 3, [2, 3, 7])
    doc = lattice_to_json(lat, mk, curves)
    lat2, mk2, curves2 = lattice_from_json(doc)
    assert lat2 == lat and mk2 == mk and curves2 == curves
    dec = zariski_decompose(lat2, mk2, curves2)
    assert dict(dec.support)["sigma"] == Q(44, 43)


def test_json_validation():
    lat, mk, curves = fixture_two_lines(4, 4)
    doc = lattice_to_json(lat, mk, curves)
    doc["rank"] = 5
    with pytest.raises(ValueError):
        lattice_from_json(doc)
