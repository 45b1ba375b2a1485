"""Hilbert functions, Hilbert-Samuel polynomials, psi, n0, lex segments."""

import random

import pytest

from monord import (BudgetExceeded, DataError, IVPoly, WindowExhausted,
                    canonical_decomposition, cmp, cone, complement_count_by_slices,
                    direct_sum, dominance_cmp, height, hilbert_fn,
                    hilbert_profile, hilbert_samuel_fn, hilbert_samuel_poly,
                    is_osequence, lex_segment_ideal, macaulay_next,
                    minimizing_coefficients, normalize, omega_pow,
                    parse_ordinal, phi_poly, poly_from_a_sequence, psi_ideal,
                    psi_poly, realize_poly, stability_index, unit_ideal,
                    zero_ideal)
from monord.ivpoly import binom_poly
from oracles import (naive_hilbert, naive_hilbert_samuel, points_up_to,
                     random_artinian_staircase, random_ideal, slice_count)


def o(text):
    return parse_ordinal(text)


class TestHilbertFn:
    def test_zero_ideal(self):
        assert hilbert_fn(zero_ideal(2), 3) == 4

    def test_unit_ideal(self):
        for n in range(5):
            assert hilbert_fn(unit_ideal(3), n) == 0

    def test_principal(self):
        assert hilbert_fn(normalize(2, [(1, 0)]), 3) == 1

    def test_rejects_negative(self):
        with pytest.raises(DataError):
            hilbert_fn(zero_ideal(2), -1)

    def test_generator_cap(self):
        e = normalize(2, [(3, 0), (2, 1), (1, 2), (0, 3)])
        with pytest.raises(BudgetExceeded):
            hilbert_fn(e, 5, max_gens=3)

    def test_matches_enumeration(self):
        rng = random.Random(41)
        for _ in range(30):
            e = random_ideal(rng, 3, 5, 4, allow_zero=True, allow_unit=True)
            for n in range(8):
                assert hilbert_fn(e, n) == naive_hilbert(e, n)


class TestHilbertSamuelFn:
    def test_zero_ideal_line(self):
        assert hilbert_samuel_fn(zero_ideal(1), 4) == 5

    def test_unit_ideal(self):
        assert hilbert_samuel_fn(unit_ideal(2), 7) == 0

    def test_example(self):
        assert hilbert_samuel_fn(normalize(2, [(2, 1)]), 2) == 6

    def test_matches_enumeration(self):
        rng = random.Random(43)
        for _ in range(30):
            e = random_ideal(rng, 3, 5, 4, allow_zero=True, allow_unit=True)
            for s in range(7):
                assert hilbert_samuel_fn(e, s) == naive_hilbert_samuel(e, s)

    def test_slice_counting_agrees(self):
        rng = random.Random(47)
        for _ in range(20):
            e = random_ideal(rng, 3, 6, 4, allow_zero=True, allow_unit=True)
            for s in range(7):
                got = complement_count_by_slices(e, s)
                assert got == hilbert_samuel_fn(e, s)
                assert got == slice_count(e, s)


class TestHilbertSamuelPoly:
    def test_zero_ideal(self):
        p, t = hilbert_samuel_poly(zero_ideal(2))
        assert p == binom_poly(0, 2)
        assert t == 0

    def test_principal_dim_one(self):
        for k in (1, 4):
            p, t = hilbert_samuel_poly(normalize(1, [(k,)]))
            assert p == IVPoly([k])
            assert t == k

    def test_agreement_window(self):
        rng = random.Random(53)
        for _ in range(25):
            e = random_ideal(rng, 3, 5, 4, allow_zero=True, allow_unit=True)
            p, t = hilbert_samuel_poly(e)
            assert p.degree <= e.dim
            for s in range(t, t + 2 * e.dim + 1):
                assert p(s) == hilbert_samuel_fn(e, s)

    def test_sampling_fallback_matches(self):
        rng = random.Random(59)
        for _ in range(15):
            e = random_ideal(rng, 3, 6, 4)
            if len(e.gens) < 2:
                continue
            assert hilbert_samuel_poly(e, max_gens=1) == hilbert_samuel_poly(e)


class TestMinimizingCoefficients:
    def test_linear_family(self):
        for a in range(1, 5):
            for b in range(0, 4):
                p = IVPoly([b, a])
                mc = minimizing_coefficients(p, 2)
                assert mc.c == (a, b + a * (a - 1) // 2)
                assert mc.valid

    def test_constant_dim_one(self):
        mc = minimizing_coefficients(IVPoly([3]), 1)
        assert mc.c == (3,) and mc.valid

    def test_invalid_detected(self):
        mc = minimizing_coefficients(IVPoly([-1, 1]), 2)
        assert mc.c == (1, -1)
        assert not mc.valid
        assert mc.first_negative == 0

    def test_rejects_bad_input(self):
        with pytest.raises(DataError):
            minimizing_coefficients(IVPoly(), 2)
        with pytest.raises(DataError):
            minimizing_coefficients(binom_poly(0, 2), 2)


class TestPsi:
    def test_zero_ideal_polynomial(self):
        assert psi_poly(binom_poly(0, 3), 3) == o("w^3")

    def test_linear(self):
        assert psi_poly(IVPoly([0, 2]), 2) == o("w*2 + 1")

    def test_constant(self):
        assert psi_poly(IVPoly([5]), 2) == o("5")

    def test_rejects_unrealizable(self):
        with pytest.raises(DataError):
            psi_poly(IVPoly([-1, 1]), 2)

    def test_order_isomorphism(self):
        rng = random.Random(61)
        pool = [random_ideal(rng, 2, 4, 4) for _ in range(15)]
        data = [(hilbert_samuel_poly(e)[0], psi_ideal(e)) for e in pool]
        for p, a in data:
            for q, b in data:
                assert dominance_cmp(p, q) == cmp(a, b)


class TestCanonicalDecomposition:
    def test_linear(self):
        assert canonical_decomposition(IVPoly([0, 2]), 2) == (1, 1, 0)

    def test_constant_one(self):
        assert canonical_decomposition(IVPoly([1]), 1) == (0,)

    def test_pure_linear(self):
        assert canonical_decomposition(IVPoly([0, 1]), 2) == (1,)

    def test_phi_examples(self):
        assert phi_poly(IVPoly([4]), 1) == 4
        assert phi_poly(IVPoly([0, 2]), 2) == 3

    def test_phi_rejects_zero_ideal_poly(self):
        with pytest.raises(DataError):
            phi_poly(binom_poly(0, 2), 2)

    def test_reconstruction(self):
        rng = random.Random(67)
        for _ in range(25):
            e = random_ideal(rng, 3, 5, 4)
            p, _ = hilbert_samuel_poly(e)
            seq = canonical_decomposition(p, 3)
            assert all(x >= y for x, y in zip(seq, seq[1:]))
            assert poly_from_a_sequence(seq) == p


class TestRealize:
    def test_round_trip_from_ideals(self):
        rng = random.Random(71)
        for _ in range(25):
            e = random_ideal(rng, 3, 5, 4)
            p, _ = hilbert_samuel_poly(e)
            f = realize_poly(p, 3)
            assert hilbert_samuel_poly(f)[0] == p

    def test_constant(self):
        f = realize_poly(IVPoly([3]), 2)
        assert hilbert_samuel_poly(f)[0] == IVPoly([3])

    def test_rejects_unrealizable(self):
        with pytest.raises(DataError):
            realize_poly(IVPoly([-1, 1]), 2)


class TestStabilityIndex:
    def test_rejects_trivial(self):
        with pytest.raises(DataError):
            stability_index(zero_ideal(2))
        with pytest.raises(DataError):
            stability_index(unit_ideal(2))

    def test_lex_segment_rule(self):
        rng = random.Random(73)
        for _ in range(15):
            e = random_artinian_staircase(rng, rng.randint(2, 12))
            seg = lex_segment_ideal(e, max(sum(g) for g in e.gens))
            expect = max(sum(g) for g in seg.gens)
            assert stability_index(seg).n0 == expect

    def test_scan_oracle(self):
        rng = random.Random(79)
        pool = [normalize(2, [(2, 1)])]
        pool += [random_ideal(rng, 2, 4, 4) for _ in range(15)]
        for e in pool:
            res = stability_index(e)
            hv = [naive_hilbert(e, n) for n in range(res.window + 2)]
            for n in range(res.n0, res.window):
                assert hv[n + 1] == macaulay_next(hv[n], n)
            if res.n0 > 1:
                n = res.n0 - 1
                assert hv[n + 1] != macaulay_next(hv[n], n)

    def test_window_exhausted(self):
        with pytest.raises(WindowExhausted):
            stability_index(normalize(2, [(2, 1)]), max_window=2)


class TestLexSegment:
    def test_fixed_point(self):
        e = normalize(2, [(1, 0)])
        assert lex_segment_ideal(e, 4) == e

    def test_example(self):
        assert lex_segment_ideal(normalize(2, [(0, 2)]), 3).gens == ((2, 0),)

    def test_zero_ideal(self):
        assert lex_segment_ideal(zero_ideal(2), 3).is_zero()

    def test_bound_below_generators(self):
        with pytest.raises(DataError):
            lex_segment_ideal(normalize(2, [(0, 3)]), 2)

    def test_preserves_hilbert_function(self):
        rng = random.Random(83)
        for _ in range(15):
            e = random_artinian_staircase(rng, rng.randint(2, 10))
            bound = max(sum(g) for g in e.gens)
            seg = lex_segment_ideal(e, bound)
            # agreement is promised only up to the supplied bound
            for n in range(bound + 1):
                assert hilbert_fn(seg, n) == hilbert_fn(e, n)


class TestHeight:
    def test_unit(self):
        assert height(unit_ideal(2)).is_zero()

    def test_zero(self):
        assert height(zero_ideal(3)) == o("w^3")

    def test_artinian_colength(self):
        rng = random.Random(89)
        for _ in range(15):
            c = rng.randint(1, 12)
            e = random_artinian_staircase(rng, c)
            assert height(e).to_int() == c
            outside = [v for v in points_up_to(2, c + 1)
                       if not e.contains(v)]
            assert len(outside) == c


class TestInvariants:
    def test_hilbert_values_are_osequence(self):
        rng = random.Random(97)
        for _ in range(20):
            e = random_ideal(rng, 3, 5, 4, allow_zero=True)
            values = [hilbert_fn(e, n) for n in range(10)]
            if values[0] == 0:
                continue
            assert is_osequence(values, e.dim).ok

    def test_strict_superset_drops_dominance(self):
        rng = random.Random(101)
        for _ in range(30):
            e = random_ideal(rng, 2, 4, 4)
            f = random_ideal(rng, 2, 4, 4)
            if e >= f and e != f:
                pe, _ = hilbert_samuel_poly(e)
                pf, _ = hilbert_samuel_poly(f)
                assert dominance_cmp(pe, pf) == -1

    def test_cone_identity(self):
        rng = random.Random(103)
        for _ in range(15):
            e = random_ideal(rng, 2, 4, 4, allow_zero=True, allow_unit=True)
            for s in range(7):
                assert hilbert_fn(cone(e), s) == hilbert_samuel_fn(e, s)

    def test_direct_sum_additivity(self):
        rng = random.Random(107)
        for _ in range(15):
            e = random_ideal(rng, 2, 3, 3)
            f = random_ideal(rng, 2, 3, 3)
            g = direct_sum(e, f)
            for s in range(1, 7):
                assert hilbert_fn(g, s) == hilbert_fn(e, s) + hilbert_fn(f, s)

    def test_profile_is_consistent(self):
        e = normalize(2, [(2, 0), (1, 1), (0, 2)])
        prof = hilbert_profile(e)
        assert prof.dim == 2
        assert sum(prof.c) == prof.phi == len(prof.a_seq)
        assert prof.psi == psi_ideal(e)
        assert prof.n0 == stability_index(e).n0
        assert prof.p(prof.threshold) == hilbert_samuel_fn(e, prof.threshold)
