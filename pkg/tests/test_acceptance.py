"""Acceptance criteria 1-11.

Each test records one line "criterion N: PASS|FAIL ..." which is printed
immediately and again in the terminal summary. Equality is exact throughout.
"""

import io
import random
import shutil
import subprocess
import sys
import time
from contextlib import contextmanager
from math import comb, factorial
from pathlib import Path

import conftest
import sympy as sp
from cli_fuzz import cases
from oracles import dirac_kernel_dim, from_sym, shift, symbols, to_sym

from umbral.cli import run
from umbral.dirac_almansi import (
    almansi_decompose,
    almansi_reconstruct,
    dirac,
    harmonic_split,
    laplacian,
    monogenic_basis,
    power,
    q_k_prime,
    vector_var,
)
from umbral.oscillator import (
    GaugeContext,
    gauge_monogenic_basis,
    hamiltonian_gauge,
    hermite_basic,
    oscillator_almansi,
    oscillator_reconstruct,
)
from umbral.poly import CliffPoly, multi_indices, random_poly
from umbral.rational import rational
from umbral.textform import parse_poly
from umbral.umbral_core import (
    DELTA_KINDS,
    VARIANTS,
    UmbralContext,
    basic_polynomial,
    generating_check,
)
from umbral.verify import comm, ladder_operators, scaled, square, verify_relations

GOLDEN = Path(__file__).parent / "golden"
HALF = rational(1, 2)


@contextmanager
def criterion(number, summary, budget=None):
    """Time the block and record a PASS/FAIL line; a failure is re-raised."""
    start = time.perf_counter()
    try:
        yield
    except Exception as exc:
        _record(number, False, f"{summary} ({type(exc).__name__}: {str(exc)[:200]})", start)
        raise
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed >= budget:
        _record(number, False, f"{summary} (took {elapsed:.1f}s, budget {budget}s)", start)
        raise AssertionError(f"criterion {number} exceeded its {budget}s budget: {elapsed:.1f}s")
    _record(number, True, summary, start)


def _record(number, passed, text, start):
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'} {text} [{time.perf_counter() - start:.2f}s]"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)


def all_contexts(ns, h=1):
    return [UmbralContext(n, d, h, v) for n in ns for d in DELTA_KINDS for v in VARIANTS]


def random_monogenic(basis, rng):
    out = CliffPoly.zero(basis[0].n) if basis else None
    for b in basis:
        if rng.random() < 0.6:
            out = out + b.scale(rational(rng.randint(-5, 5), rng.randint(1, 3)))
    return out


def linear(n, j, c):
    """x_j - c as a polynomial."""
    return CliffPoly.monomial(n, tuple(int(i == j - 1) for i in range(n))) - CliffPoly.constant(n, c)


def test_criterion_01_closed_forms():
    checked = 0
    with criterion(1, "forward V_alpha closed forms, n<=3, |alpha|<=6, h in {1, 1/2, 2/3}", budget=5):
        for h in (rational(1), HALF, rational(2, 3)):
            for n in (1, 2, 3):
                plain = UmbralContext(n, "forward", h, "plain")
                sym = UmbralContext(n, "forward", h, "symmetric")
                for d in range(7):
                    for alpha in multi_indices(n, d):
                        fall = CliffPoly.constant(n, 1)
                        mid = CliffPoly.constant(n, 1)
                        for j, a in enumerate(alpha, start=1):
                            for i in range(a):
                                fall = fall * linear(n, j, i * h)
                                mid = mid * linear(n, j, (2 * i + 1) * h / 2)
                        assert basic_polynomial(plain, alpha) == fall, (h, alpha)
                        assert basic_polynomial(sym, alpha) == mid, (h, alpha)
                        checked += 2
    assert checked == 2 * 3 * (7 + 28 + 84)


def test_criterion_02_heisenberg():
    with criterion(2, "Heisenberg-Weyl brackets, 4 deltas x 2 variants x n=1..4, 100 polys of degree <= 6",
                   budget=30):
        for ctx in all_contexts((1, 2, 3, 4), h=HALF):
            report = verify_relations(ctx, "heisenberg", degree=6, trials=100, seed=2)
            assert report.all_passed, report.to_table()


def test_criterion_03_almansi_roundtrip():
    rng = random.Random(3)
    with criterion(3, "Almansi round trips for k <= 5, both directions", budget=30):
        for ctx in all_contexts((2, 3), h=HALF):
            bases = {d: monogenic_basis(ctx, d) for d in range(3)}
            for k in range(1, 6):
                parts = [random_monogenic(bases[rng.randint(0, 2 if ctx.n == 2 else 1)], rng) for _ in range(k)]
                f = almansi_reconstruct(ctx, parts)
                r = almansi_decompose(ctx, f, k)
                assert list(r.components) == parts, (ctx.describe(), k)
                # k-polymonogenic input: degree < k guarantees (D')^k f = 0
                f = random_poly(rng, ctx.n, k - 1)
                r = almansi_decompose(ctx, f, k)
                assert r.monogenic_ok
                assert almansi_reconstruct(ctx, r.components) == f


def test_criterion_04_qk_inverts_dk_xk():
    count = 0
    with criterion(4, "(D')^k (x')^k Q'_k g = g on monogenic_basis(d), d <= 4, k <= 5, derivative and central"):
        for ctx in [UmbralContext(n, d, h) for n in (2, 3) for d in ("derivative", "central") for h in (1, HALF)]:
            D = lambda f, c=ctx: dirac(c, f)
            X = lambda f, c=ctx: vector_var(c, f)
            for d in range(5):
                for g in monogenic_basis(ctx, d):
                    for k in range(1, 6):
                        assert power(D, k, power(X, k, q_k_prime(ctx, k, g))) == g, (ctx.describe(), d, k)
                        count += 1
    assert count


def test_criterion_05_operator_identities():
    with criterion(5, "Dirac/Euler/I' identities, 4 deltas x 2 variants x n=1..3, 50 polys"):
        for ctx in all_contexts((1, 2, 3), h=rational(2, 3)):
            report = verify_relations(ctx, "dirac_euler", degree=5, trials=50, seed=5)
            assert report.all_passed, report.to_table()


def test_criterion_06_star_laplacian():
    with criterion(6, "central laplacian equals the star Laplacian by direct shifts, h in {1, 1/3}, 50 polys"):
        for h in (rational(1), rational(1, 3)):
            ctx = UmbralContext(2, "central", h)
            hs = sp.Rational(int(h.numerator), int(h.denominator))
            xs = symbols(2)
            rng = random.Random(6)

            def star(e, xs=xs, hs=hs):
                # sum_j d+_{2h} d-_{2h}: forward then backward difference with step 2h
                out = 0
                for x in xs:
                    back = (e - shift(e, x, -2 * hs)) / (2 * hs)
                    out += (shift(back, x, 2 * hs) - back) / (2 * hs)
                return sp.expand(out)

            for _ in range(50):
                p = random_poly(rng, 2, 6)
                assert laplacian(ctx, p) == from_sym({b: star(e) for b, e in to_sym(p).items()}, 2)


def test_criterion_07_generating_function():
    t = sp.Symbol("t")
    with criterion(7, "exp(x . O^<-1>(t)) coefficients equal V_alpha / alpha!, |alpha| <= 6, forward and central"):
        for delta in ("forward", "central"):
            for h in (1, HALF):
                hs = sp.Rational(int(rational(h).numerator), int(rational(h).denominator))
                inverse = sp.log(1 + hs * t) / hs if delta == "forward" else sp.asinh(hs * t) / hs
                for n in (1, 2):
                    for variant in VARIANTS:
                        generating_check(UmbralContext(n, delta, h, variant), 6)
                    # independent sympy expansion of the plain exponential, one coordinate at a time
                    ctx = UmbralContext(n, delta, h)
                    xs = symbols(n)
                    series = [sp.series(sp.exp(x * inverse), t, 0, 7).removeO() for x in xs]
                    for d in range(7):
                        for alpha in multi_indices(n, d):
                            expected = sp.Integer(1)
                            for s, a in zip(series, alpha):
                                expected *= sp.expand(s).coeff(t, a)
                            scale = 1
                            for a in alpha:
                                scale *= factorial(a)
                            got = basic_polynomial(ctx, alpha).scale(rational(1, scale))
                            assert got == from_sym({(): expected}, n), (delta, h, alpha)


def test_criterion_08_oscillator():
    rng = random.Random(8)
    summary = ("oscillator: nine ladder identities in direct and gauge models, H^g eigenvalues,"
               " Almansi round trip k <= 4 (sign-corrected: [d+^2, d-^2] = -16 H and [d-^2, d+] = -4 d-;"
               " the +16 H / +4 d- forms give lhs = -rhs)")
    with criterion(8, summary):
        for model in ("direct", "gauge"):
            for ctx in all_contexts((1, 2, 3)):
                report = verify_relations(ctx, "osp", degree=5, trials=50, seed=8, model=model)
                assert report.all_passed, report.to_table()
                assert len(report.results) == 9
        # the opposite-sign readings fail with lhs = -rhs on every nonzero input
        for model in ("direct", "gauge"):
            for ctx in all_contexts((2,)):
                H, dp, dm = ladder_operators(ctx, model)
                dp2, dm2 = square(dp), square(dm)
                for _ in range(5):
                    f = random_poly(rng, 2, 4)
                    lhs, rhs = comm(dp2, dm2)(f), scaled(H, 16)(f)
                    assert lhs == -rhs and lhs != rhs
                    lhs, rhs = comm(dm2, dp)(f), scaled(dm, 4)(f)
                    assert lhs == -rhs
        for ctx in all_contexts((1, 2, 3)):
            g = GaugeContext(ctx)
            for d in range(5):
                for alpha in multi_indices(ctx.n, d):
                    w = hermite_basic(g, alpha)
                    assert hamiltonian_gauge(g, w) == w.scale(d + rational(ctx.n, 2)), (ctx.describe(), alpha)
        for ctx in all_contexts((2, 3), h=HALF):
            g = GaugeContext(ctx)
            bases = {d: gauge_monogenic_basis(g, d) for d in range(2)}
            for k in range(1, 5):
                parts = [random_monogenic(bases[rng.randint(0, 1)], rng) for _ in range(k)]
                f = oscillator_reconstruct(g, parts)
                assert list(oscillator_almansi(g, f, k).components) == parts
                f = random_poly(rng, ctx.n, k - 1)
                r = oscillator_almansi(g, f, k)
                assert r.monogenic_ok and oscillator_reconstruct(g, r.components) == f


def expected_dim(n, d):
    return 2 ** n * (comb(d + n - 1, n - 1) - (comb(d + n - 2, n - 1) if d else 0))


def test_criterion_09_monogenic_dimensions():
    with criterion(9, "dim monogenic_basis(d) = 2^n [C(d+n-1,n-1) - C(d+n-2,n-1)], n in {2,3}, d <= 5, rank oracle"):
        for ctx in all_contexts((2, 3), h=HALF):
            for d in range(6):
                basis = monogenic_basis(ctx, d)
                assert len(basis) == expected_dim(ctx.n, d) == dirac_kernel_dim(ctx, d, dirac), (ctx.describe(), d)
                assert all(dirac(ctx, b).is_zero() for b in basis)


def test_criterion_10_worked_examples():
    with criterion(10, "worked examples: Almansi parts of x1 and harmonic split of x1^2 - x2^2"):
        ctx = UmbralContext(2)
        r = almansi_decompose(ctx, parse_poly("x1", 2))
        assert r.components == (parse_poly("x1 - x2 e[1] e[2]", 2).scale(HALF),
                                parse_poly("-1/2 e[1]", 2))
        f1, f0 = harmonic_split(ctx, parse_poly("x1^2 - x2^2", 2))
        assert f1 == parse_poly("1/2 x1^2 - 1/2 x2^2 - x1 x2 e[1] e[2]", 2)
        assert f0 == parse_poly("x1 e[1] - x2 e[2]", 2).scale(-HALF)


def test_criterion_11_cli():
    invocations = [
        (["basic-poly", "--n", "1", "--delta", "forward", "--h", "1", "--variant", "plain", "--alpha", "3"],
         "basic_poly_forward_alpha3.txt"),
        (["decompose", "--n", "2", "--delta", "derivative", "--expr", "x1"], "decompose_x1.json"),
        (["verify", "--suite", "heisenberg", "--n", "2", "--delta", "central", "--h", "1/2", "--variant",
          "symmetric", "--degree", "5", "--trials", "50", "--seed", "7"], "verify_heisenberg_central.txt"),
    ]
    codes = {}
    with criterion(11, "CLI golden files byte-identical; 10k-case grammar fuzz exits only 0/1/2"):
        exe = shutil.which("umbral")
        cmd = [exe] if exe else [sys.executable, "-m", "umbral.cli"]
        for argv, name in invocations:
            proc = subprocess.run(cmd + argv, capture_output=True, check=False)
            assert proc.returncode == 0
            assert proc.stdout == (GOLDEN / name).read_bytes(), name
        for argv in cases(11, 10_000):
            out, err = io.StringIO(), io.StringIO()
            code = run(argv, out, err)
            assert code in (0, 1, 2), argv
            assert code == 0 or err.getvalue().strip(), argv
            codes[code] = codes.get(code, 0) + 1
    assert sum(codes.values()) == 10_000
