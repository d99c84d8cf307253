"""End-to-end acceptance checks.

Each test records one PASS/FAIL line, printed in the terminal summary, and
then asserts. Runtime limits are part of the criterion where one is stated.
"""

import csv
import io
import itertools
import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import record_criterion
from subspace_codes.bounds import gaussian_coefficient, singleton_bound, sphere_size
from subspace_codes.channel import ChannelConfig, apply_channel
from subspace_codes.cli import main
from subspace_codes.code import KKCode, brute_force_md_decode, interpolate, min_distance, puncture
from subspace_codes.field import get_field
from subspace_codes.linearized import LinearizedPoly
from subspace_codes.rng import DEFAULT_SEED, as_generator, derive_seed
from subspace_codes.simulation import grid
from subspace_codes.subspace import enumerate_grassmannian, random_subspace

pytestmark = pytest.mark.acceptance


def test_code_type_reproduction():
    start = time.perf_counter()
    found = {}
    for k in (1, 2, 3):
        code = KKCode.create(2, 3, 3, k)
        words = code.codewords()
        assert len(set(words)) == 2 ** (3 * k)
        found[k] = (code.params().type_tuple, min_distance(words))
    elapsed = time.perf_counter() - start
    ok = all(d == 2 * (3 - k + 1) and t == (6, 3, 3 * k, d) for k, (t, d) in found.items()) and elapsed < 10
    record_criterion("1 code type [l+m, l, mk, 2(l-k+1)]", ok, f"{found} in {elapsed:.1f}s (< 10s)")
    assert ok


def test_decoding_guarantee_monte_carlo():
    start = time.perf_counter()
    code = KKCode.create(2, 3, 3, 1)
    words = code.codewords()
    cells = grid(2)
    trials, successes, disagreements = 0, 0, 0
    for rho, t in cells:
        for i in range(1000):
            seed = derive_seed(DEFAULT_SEED, rho, t, i)
            rng = as_generator(seed)
            msg = (int(rng.integers(0, 8)),)
            sent = code.encode(msg)
            received = apply_channel(sent, ChannelConfig(rho, t, seed), rng).received
            decoded = code.decode(received)
            trials += 1
            successes += decoded == msg
            nearest = brute_force_md_decode(words, received)
            disagreements += decoded is None or code.encode(decoded) != nearest
    elapsed = time.perf_counter() - start
    ok = successes == trials == 6000 and disagreements == 0 and elapsed < 60
    record_criterion(
        "2 decoding guarantee rho+t <= 2",
        ok,
        f"{successes}/{trials} over cells {cells}, {disagreements} MD disagreements, {elapsed:.1f}s (< 60s)",
    )
    assert ok


def test_gaussian_and_sphere_counts_by_enumeration():
    start = time.perf_counter()
    mismatches = []
    checked = 0
    for q in (2, 3):
        for n in range(0, 7):
            for l in range(n + 1):
                spaces = enumerate_grassmannian(q, n, l)
                if len(spaces) != gaussian_coefficient(n, l, q):
                    mismatches.append(("gauss", q, n, l))
                center = spaces[len(spaces) // 2]
                dists = [center.distance(s) for s in spaces]
                for t in range(l + 1):
                    checked += 1
                    if sum(d <= 2 * t for d in dists) != sphere_size(n, l, t, q):
                        mismatches.append(("sphere", q, n, l, t))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 120
    record_criterion(
        "3 Gaussian coefficients and sphere sizes vs enumeration",
        ok,
        f"{checked} sphere cases, mismatches={mismatches}, {elapsed:.1f}s (< 120s)",
    )
    assert ok


def test_gaussian_envelope_lemma():
    violations = []
    cases = 0
    for q in (2, 3, 5):
        for n in range(2, 13):
            for l in range(1, n):
                cases += 1
                ratio = Fraction(gaussian_coefficient(n, l, q), q ** (l * (n - l)))
                if not 1 < ratio < 4:
                    violations.append((q, n, l, ratio))
    ok = not violations
    record_criterion("4 envelope 1 < q^-l(n-l) [n l] < 4", ok, f"{cases} cases, violations={violations}")
    assert ok


def test_asymptotic_curve_csv(capsys):
    assert main(["bounds", "--asymptotic", "--lambda", "0.25"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    lam = Fraction(1, 4)
    zero_row = [float(rows[0][c]) for c in ("delta", "packing", "covering", "singleton")]
    at_zero = zero_row == [0.0, 0.75, 0.75, 0.75]
    interior = rows[1:]
    ordered = all(float(r["covering"]) <= float(r["singleton"]) <= float(r["packing"]) for r in interior)
    worst = 0.0
    for r in rows:
        d = Fraction(r["delta"])
        exact = {
            "packing": (1 - d / 2) * (1 - lam * (1 + d / 2)),
            "covering": (1 - d) * (1 - lam * (d + 1)),
            "singleton": (1 - d) * (1 - lam),
        }
        worst = max(worst, *(abs(float(Fraction(r[c]) - v)) for c, v in exact.items()))
    ok = at_zero and ordered and len(interior) == 100 and worst < 1e-12
    record_criterion(
        "5 asymptotic rate curves at lambda=1/4",
        ok,
        f"delta=0 row {zero_row[1:]}, ordering on {len(interior)} points: {ordered}, max error {worst:.1e}",
    )
    assert ok


def test_puncturing_keeps_distance():
    code = KKCode.create(2, 3, 3, 1)
    words = code.codewords()
    rng = np.random.default_rng(derive_seed(DEFAULT_SEED, 6))
    results = []
    for _ in range(20):
        hyper = random_subspace(2, 6, 5, rng)
        out = puncture(words, hyper, rng)
        results.append((len(set(out)), min_distance(out)))
    ok = all(size == 8 and d >= 4 for size, d in results)
    sizes = sorted({s for s, _ in results})
    dists = sorted({d for _, d in results})
    record_criterion("6 puncturing D' >= D-2", ok, f"20 hyperplanes: sizes {sizes}, min distances {dists}")
    assert ok


def test_singleton_bound_and_gap():
    code = KKCode.create(2, 3, 3, 2)
    size = len(set(code.codewords()))
    bound = singleton_bound(6, 3, 4, 2)
    first = size == 64 and bound == gaussian_coefficient(5, 3, 2) == 155 and size <= bound
    gaps = []
    for q in (2, 3, 5):
        for m in range(1, 9):
            for l in range(1, m + 1):
                for k in range(1, l + 1):
                    s = singleton_bound(l + m, l, 2 * (l - k + 1), q)
                    gaps.append((q, m, l, k, q ** (m * k), s))
    # build the small codes explicitly and count their distinct codewords
    built = [(q, m, l, k) for q, m, l, k, c, _ in gaps if c <= 512]
    for q, m, l, k in built:
        assert len(set(KKCode.create(q, m, l, k).codewords())) == q ** (m * k)
    bad = [g for g in gaps if not g[4] <= g[5] <= 4 * g[4]]
    ok = first and not bad
    record_criterion(
        "7 Singleton bound and 4x gap",
        ok,
        f"|C|={size} <= {bound}; {len(gaps)} (q,m,l,k) cases ({len(built)} built), gap violations={bad}",
    )
    assert ok


def test_metric_and_complement_identities():
    rng = np.random.default_rng(derive_seed(DEFAULT_SEED, 8))
    violations = []
    for i in range(1000):
        q = (2, 3)[i % 2]
        n = int(rng.integers(1, 8 if q == 2 else 6))
        u, v, w = (random_subspace(q, n, int(rng.integers(0, n + 1)), rng) for _ in range(3))
        duv, dvw, duw = u.distance(v), v.distance(w), u.distance(w)
        checks = {
            "identity": u.distance(u) == 0,
            "positive": (duv == 0) == (u == v) and duv >= 0,
            "symmetric": duv == v.distance(u),
            "triangle": duw <= duv + dvw,
            "definition": duv == (u + v).dim - (u & v).dim,
            "complement": u.orthogonal_complement().distance(v.orthogonal_complement()) == duv,
        }
        violations += [(i, name) for name, good in checks.items() if not good]
    ok = not violations
    record_criterion("8 metric axioms and complement identity", ok, f"1000 samples, violations={violations[:5]}")
    assert ok


def test_interpolate_minimality_exhaustive():
    start = time.perf_counter()
    F = get_field(2, 3)
    rng = np.random.default_rng(derive_seed(DEFAULT_SEED, 9))
    k = 1
    counterexamples = 0
    degrees = []
    for _ in range(50):
        space = random_subspace(2, 6, 2, rng)
        pts = [(F.from_coords(v[:3]), F.from_coords(v[3:])) for v in space.basis]
        Q = interpolate(pts, k, F)
        w = Q.weighted_degree(k)
        degrees.append(w)
        vanishes = all(Q(x, y) == 0 for x, y in pts)
        # all pairs with d_x < w and k-1+d_y < w
        nx, ny = w, w - k + 1
        for coeffs in itertools.product(range(F.order), repeat=nx + ny):
            if not any(coeffs):
                continue
            qx, qy = LinearizedPoly(F, coeffs[:nx]), LinearizedPoly(F, coeffs[nx:])
            if all(F.add(qx(x), qy(y)) == 0 for x, y in pts):
                counterexamples += 1
        counterexamples += not vanishes
    elapsed = time.perf_counter() - start
    ok = counterexamples == 0 and elapsed < 30
    record_criterion(
        "9 Interpolate minimality",
        ok,
        f"50 instances, weighted degrees {sorted(set(degrees))}, {counterexamples} smaller solutions, {elapsed:.1f}s (< 30s)",
    )
    assert ok
