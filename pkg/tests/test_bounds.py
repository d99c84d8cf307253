import itertools
from fractions import Fraction

import numpy as np
import pytest

from oracles import gaussian_fraction
from subspace_codes.bounds import (
    asymptotic_curves,
    bound_report,
    covering_bound,
    delta_grid,
    gaussian_coefficient,
    greedy_gv_code,
    normalized_params,
    packing_bound,
    singleton_bound,
    sphere_size,
)
from subspace_codes.code import min_distance, puncture
from subspace_codes.errors import ParameterError, ResourceError
from subspace_codes.subspace import enumerate_grassmannian


def test_gaussian_examples():
    assert gaussian_coefficient(7, 0, 3) == 1
    assert gaussian_coefficient(4, 2, 2) == 35
    assert gaussian_coefficient(6, 3, 2) == 1395
    assert gaussian_coefficient(5, 3, 2) == 155
    with pytest.raises(ParameterError):
        gaussian_coefficient(3, 4, 2)
    with pytest.raises(ParameterError):
        gaussian_coefficient(3, 1, 1)


def test_gaussian_matches_rational_oracle_and_symmetry():
    for q in (2, 3, 4, 5, 7):
        for n in range(0, 16):
            for l in range(n + 1):
                g = gaussian_coefficient(n, l, q)
                assert g == gaussian_fraction(n, l, q)
                assert g == gaussian_coefficient(n, n - l, q)


def test_gaussian_big_values_are_exact():
    g = gaussian_coefficient(40, 20, 5)
    assert g.bit_length() > 64
    assert g == gaussian_fraction(40, 20, 5)


def test_sphere_examples():
    assert sphere_size(6, 3, 0, 2) == 1
    assert sphere_size(4, 2, 1, 2) == 19
    assert sphere_size(6, 3, 1, 2) == 99
    assert sphere_size(6, 3, 2, 2) == 883
    with pytest.raises(ParameterError):
        sphere_size(6, 2, 3, 2)


def test_sphere_symmetry():
    for q in (2, 3):
        for n in range(1, 10):
            for l in range(n + 1):
                for t in range(min(l, n - l) + 1):
                    assert sphere_size(n, l, t, q) == sphere_size(n, n - l, t, q)


@pytest.mark.parametrize("q,n,l", [(2, 6, 3), (2, 5, 2), (3, 4, 2)])
def test_sphere_size_center_independent(q, n, l):
    spaces = enumerate_grassmannian(q, n, l)
    rng = np.random.default_rng(n * l + q)
    for idx in rng.choice(len(spaces), size=20, replace=False):
        center = spaces[idx]
        dists = [center.distance(s) for s in spaces]
        for t in range(l + 1):
            assert sum(d <= 2 * t for d in dists) == sphere_size(n, l, t, q)


def test_packing_examples():
    assert packing_bound(6, 3, 1, 2).exact == 1395
    assert packing_bound(6, 3, 3, 2).exact == 14
    with pytest.raises(ParameterError):
        packing_bound(6, 3, 0, 2)


def test_covering_examples():
    assert covering_bound(6, 3, 1, 2).exact == 1395
    assert covering_bound(6, 3, 2, 2).exact == 15
    assert covering_bound(6, 3, 3, 2).exact == 2


def test_bound_ordering_and_envelopes():
    for q in (2, 3):
        for n in range(2, 11):
            for l in range(1, n // 2 + 1):
                for t in range(1, l + 1):
                    pack, cover = packing_bound(n, l, t, q), covering_bound(n, l, t, q)
                    assert cover.exact <= pack.exact
                    assert pack.exact < pack.envelope
                    assert cover.exact >= cover.envelope
                    report = bound_report(n, l, 2 * t, q)
                    assert report.singleton >= 1
                    assert report.covering.exact <= report.singleton


def test_singleton_examples():
    assert singleton_bound(6, 3, 2, 2) == gaussian_coefficient(6, 3, 2)
    assert singleton_bound(6, 3, 4, 2) == 155
    assert singleton_bound(6, 3, 6, 2) == 15
    assert singleton_bound(7, 2, 2, 3) == gaussian_coefficient(7, 5, 3)
    for bad in (3, 0, 8):
        with pytest.raises(ParameterError):
            singleton_bound(6, 3, bad, 2)


def test_kk_codes_within_four_times_singleton():
    for q in (2, 3, 5):
        for m in range(1, 13):
            for k in range(1, m + 1):
                bound = singleton_bound(2 * m, m, 2 * (m - k + 1), q)
                assert bound == gaussian_coefficient(m + k, k, q)
                assert q ** (m * k) <= bound < 4 * q ** (m * k)


def test_repeated_puncturing_fits_final_grassmannian(kk331):
    words = kk331.codewords()
    rng = np.random.default_rng(21)
    for _ in range((kk331.min_distance - 2) // 2):
        n = words[0].n
        hyper = enumerate_grassmannian(2, n, n - 1)[int(rng.integers(0, 2**n - 1))]
        words = puncture(words, hyper, rng)
    assert len(set(words)) == 8
    assert (words[0].n, words[0].dim) == (4, 1)
    assert len(words) <= gaussian_coefficient(4, 1, 2) == singleton_bound(6, 3, 6, 2)


def test_bound_report_row():
    row = bound_report(6, 3, 4, 2).row()
    assert row == {"N": 6, "l": 3, "q": 2, "D": 4, "packing": 1395, "covering": 15, "singleton": 155}
    with pytest.raises(ParameterError):
        bound_report(6, 3, 5, 2)


def test_asymptotic_examples():
    (p0, p1) = asymptotic_curves(0.25, [0.0, 1.0])
    assert p0.packing == p0.covering == p0.singleton == 0.75
    assert p1.covering == 0 and p1.singleton == 0
    assert p1.packing == pytest.approx(0.3125, abs=1e-15)
    with pytest.raises(ParameterError):
        asymptotic_curves(0.6, [0.5])
    with pytest.raises(ParameterError):
        asymptotic_curves(0.0, [0.5])
    with pytest.raises(ParameterError):
        asymptotic_curves(0.25, [1.5])


@pytest.mark.parametrize("lam", [0.05, 0.25, 1 / 3, 0.5])
def test_asymptotic_shape(lam):
    pts = asymptotic_curves(lam, delta_grid(201))
    assert pts[0].packing == pts[0].covering == pts[0].singleton == pytest.approx(1 - lam, abs=0)
    for a, b in itertools.pairwise(pts):
        assert b.packing <= a.packing and b.covering <= a.covering and b.singleton <= a.singleton
    for p in pts[1:]:
        assert p.covering <= p.singleton <= p.packing


def test_delta_grid():
    g = delta_grid(5)
    assert g == [0.0, 0.25, 0.5, 0.75, 1.0]
    with pytest.raises(ParameterError):
        delta_grid(1)


def test_greedy_gv_examples():
    assert len(greedy_gv_code(4, 2, 1, 2, rng=1)) == 35
    for seed in range(5):
        code = greedy_gv_code(6, 3, 2, 2, rng=seed)
        assert len(code) >= covering_bound(6, 3, 2, 2).exact == 15
        assert len(code) <= packing_bound(6, 3, 2, 2).exact
        assert min_distance(code) >= 4
    assert greedy_gv_code(6, 3, 2, 2, rng=3) == greedy_gv_code(6, 3, 2, 2, rng=3)


@pytest.mark.parametrize("q,n,l,t", [(2, 5, 2, 2), (3, 4, 2, 2), (2, 6, 2, 2), (2, 6, 3, 3)])
def test_greedy_gv_meets_covering(q, n, l, t):
    code = greedy_gv_code(n, l, t, q, rng=0)
    assert covering_bound(n, l, t, q).exact <= len(code) <= packing_bound(n, l, t, q).exact
    if len(code) > 1:
        assert min_distance(code) >= 2 * t


def test_greedy_gv_respects_cap():
    with pytest.raises(ResourceError):
        greedy_gv_code(6, 3, 2, 2, cap=100)


def test_normalized_params():
    for n in range(2, 10):
        for l in range(1, n):
            lam, rate, delta = normalized_params(n, l, l * (n - l), 2)
            assert rate == 1 - lam
            assert delta == 1 / (lam * n) == Fraction(1, l)
    assert normalized_params(6, 3, 3, 6) == (Fraction(1, 2), Fraction(1, 6), Fraction(1))
    _, rate, _ = normalized_params(6, 3, 2.5, 2)
    assert isinstance(rate, float)
    with pytest.raises(ParameterError):
        normalized_params(3, 0, 1, 2)
