"""Identity suites checked exactly on seeded random polynomials.

Suites:

* ``heisenberg``: ``[O_j, O_k] = 0``, ``[x_j', x_k'] = 0``, ``[O_j, x_k'] = delta_jk``;
* ``dirac_euler``: the Dirac/vector-variable/Euler relations;
* ``sl2``: the even brackets among ``H``, ``d+^2`` and ``d-^2``;
* ``osp``: all nine scaled ladder identities.

``sl2`` and ``osp`` run in the ``direct`` or the ``gauge`` model. The osp
report also carries informational candidates that never affect the verdict:
``[H, D_+^2] = 2 D_+``, which after clearing square roots reads
``[H, d+^2] = 2 sqrt(2) d+`` and over the rationals can only hold where both
sides vanish, and the opposite-sign forms of two brackets.
"""

import random
from dataclasses import dataclass, field

from .dirac_almansi import dirac, half_dim, i_s_prime, vector_var
from .oscillator import (
    GaugeContext,
    dirac_pm,
    gauge_dirac_minus,
    gauge_dirac_plus,
    hamiltonian_direct,
    hamiltonian_gauge,
)
from .poly import CliffPoly, random_poly
from .rational import rational
from .textform import print_poly
from .umbral_core import euler_s

SUITES = ("heisenberg", "dirac_euler", "sl2", "osp")
MODELS = ("direct", "gauge")
LADDER_SUITES = ("sl2", "osp")


@dataclass
class IdentityResult:
    name: str
    passed: bool
    checked: int
    witness: dict = None

    def to_json(self):
        doc = {"identity": self.name, "passed": self.passed, "checked": self.checked}
        if self.witness is not None:
            doc["witness"] = self.witness
        return doc


@dataclass
class VerifyReport:
    suite: str
    model: str
    context: dict
    degree: int
    trials: int
    seed: int
    results: list = field(default_factory=list)
    candidates: list = field(default_factory=list)

    @property
    def all_passed(self):
        return all(r.passed for r in self.results)

    def to_json(self):
        doc = dict(self.context)
        doc["suite"] = self.suite
        if self.suite in LADDER_SUITES:
            doc["model"] = self.model
        doc.update({
            "degree": self.degree,
            "trials": self.trials,
            "seed": self.seed,
            "all_passed": self.all_passed,
            "identities": [r.to_json() for r in self.results],
        })
        if self.candidates:
            doc["candidates"] = [r.to_json() for r in self.candidates]
        return doc

    def to_table(self):
        ctx = self.context
        model = f"  model {self.model}" if self.suite in LADDER_SUITES else ""
        lines = [(
            f"suite {self.suite}{model}  n={ctx['n']}  delta={ctx['delta']}  "
            f"h={ctx['h']}  variant={ctx['variant']}  degree<={self.degree}  trials={self.trials}  seed={self.seed}"
        )]
        width = max([len(r.name) for r in self.results + self.candidates] + [8])
        for r in self.results:
            lines.append(f"  {r.name:<{width}}  {'pass' if r.passed else 'FAIL'}")
            lines.extend(_witness_lines(r))
        for r in self.candidates:
            lines.append(f"  {r.name:<{width}}  {'holds' if r.passed else 'fails'} (candidate, informational)")
            lines.extend(_witness_lines(r))
        lines.append("all identities pass" if self.all_passed else "some identities FAIL")
        return "\n".join(lines)


def _witness_lines(r):
    if r.witness is None:
        return []
    w = r.witness
    out = [f"    witness (trial {w['trial']}): f = {w['input']}"]
    if "detail" in w:
        out.append(f"    {w['detail']}")
    out.append(f"    lhs = {w['lhs']}")
    out.append(f"    rhs = {w['rhs']}")
    return out


def comm(a, b):
    return lambda f: a(b(f)) - b(a(f))


def anticomm(a, b):
    return lambda f: a(b(f)) + b(a(f))


def square(a):
    return lambda f: a(a(f))


def scaled(a, c):
    c = rational(c)
    return lambda f: a(f).scale(c)


def zero(f):
    return CliffPoly.zero(f.n)


def _pairs(n):
    return [(j, k) for j in range(1, n + 1) for k in range(1, n + 1)]


def heisenberg_identities(ctx):
    n = ctx.n
    low = ctx.lower
    up = ctx.raise_

    def family(op_a, op_b, delta):
        def check(f, _s):
            for j, k in _pairs(n):
                lhs = op_a.apply(j, op_b.apply(k, f)) - op_b.apply(k, op_a.apply(j, f))
                rhs = f if (delta and j == k) else CliffPoly.zero(n)
                if lhs != rhs:
                    return lhs, rhs, f"j={j}, k={k}"
            return None

        return check

    return [
        ("[O_j, O_k] = 0", family(low, low, False)),
        ("[x_j', x_k'] = 0", family(up, up, False)),
        ("[O_j, x_k'] = delta_jk id", family(low, up, True)),
    ]


def _simple(lhs_op, rhs_op):
    def check(f, s):
        lhs, rhs = lhs_op(f, s), rhs_op(f, s)
        return None if lhs == rhs else (lhs, rhs, None)

    return check


def dirac_euler_identities(ctx):
    n = ctx.n
    D = lambda f: dirac(ctx, f)
    X = lambda f: vector_var(ctx, f)
    E = lambda s, f: euler_s(ctx, s, f)
    Id = lambda s, f: i_s_prime(ctx, s, f)
    o_sq = ctx.lower @ ctx.lower
    x_sq = ctx.raise_ @ ctx.raise_

    def sum_coord(op, f):
        out = CliffPoly.zero(n)
        for j in range(1, n + 1):
            out = out + op.apply(j, f)
        return out

    half = half_dim(ctx)
    return [
        ("(D')^2 = -sum_j O_j^2", _simple(lambda f, s: D(D(f)), lambda f, s: -sum_coord(o_sq, f))),
        ("(x')^2 = -sum_j (x_j')^2", _simple(lambda f, s: X(X(f)), lambda f, s: -sum_coord(x_sq, f))),
        ("{x', D'} = -2 E'_{n/2}", _simple(lambda f, s: X(D(f)) + D(X(f)), lambda f, s: E(half, f).scale(-2))),
        ("D' E'_s = E'_{s+1} D'", _simple(lambda f, s: D(E(s, f)), lambda f, s: E(s + 1, D(f)))),
        ("E'_s x' = x' E'_{s+1}", _simple(lambda f, s: E(s, X(f)), lambda f, s: X(E(s + 1, f)))),
        ("D' I'_s = I'_{s+1} D'", _simple(lambda f, s: D(Id(s, f)), lambda f, s: Id(s + 1, D(f)))),
        ("I'_s E'_s = id", _simple(lambda f, s: Id(s, E(s, f)), lambda f, s: f)),
        ("E'_s I'_s = id", _simple(lambda f, s: E(s, Id(s, f)), lambda f, s: f)),
    ]


def memoized(op, limit=512):
    """Cache results by input identity; the identity suites reuse many subterms."""
    cache = {}

    def call(f):
        hit = cache.get(id(f))
        if hit is not None and hit[0] is f:
            return hit[1]
        if len(cache) >= limit:
            cache.clear()
        out = op(f)
        cache[id(f)] = (f, out)
        return out

    return call


def ladder_operators(ctx, model):
    """(H, d+, d-) as callables for the chosen model."""
    if model == "direct":
        ops = (lambda f: hamiltonian_direct(ctx, f),
               lambda f: dirac_pm(ctx, "+", f),
               lambda f: dirac_pm(ctx, "-", f))
    elif model == "gauge":
        g = GaugeContext(ctx)
        ops = (lambda f: hamiltonian_gauge(g, f),
               lambda f: gauge_dirac_plus(g, f),
               lambda f: gauge_dirac_minus(g, f))
    else:
        raise ValueError(f"model must be one of {MODELS}, got {model!r}")
    return tuple(memoized(op) for op in ops)


def ladder_identities(ctx, model, even_only=False, ops=None):
    H, dp, dm = ops or ladder_operators(ctx, model)
    dp2, dm2 = memoized(square(dp)), memoized(square(dm))
    lift = lambda op: (lambda f, s: op(f))
    table = [
        ("{d+, d-} = -4 H", anticomm(dp, dm), scaled(H, -4), False),
        ("[H, d-] = -d-", comm(H, dm), scaled(dm, -1), False),
        ("[H, d+] = d+", comm(H, dp), dp, False),
        ("[d+^2, d-^2] = -16 H", comm(dp2, dm2), scaled(H, -16), True),
        ("[H, d-^2] = -2 d-^2", comm(H, dm2), scaled(dm2, -2), True),
        ("[H, d+^2] = 2 d+^2", comm(H, dp2), scaled(dp2, 2), True),
        ("[d+^2, d+] = 0", comm(dp2, dp), zero, False),
        ("[d-^2, d+] = -4 d-", comm(dm2, dp), scaled(dm, -4), False),
        ("[d-, d+^2] = -4 d+", comm(dm, dp2), scaled(dp, -4), False),
    ]
    return [(name, _simple(lift(lhs), lift(rhs))) for name, lhs, rhs, even in table if even or not even_only]


def ladder_candidates(ctx, model, ops=None):
    """Alternative readings that are reported but never counted.

    ``[d+^2, d-^2] = 16 H`` and ``[d-^2, d+] = 4 d-`` carry the opposite sign
    to what ``{d+, d-} = -4 H`` and ``[H, d-] = -d-`` force; ``[H, d+^2] =
    2 sqrt(2) d+`` is checked as: both sides vanish.
    """
    H, dp, dm = ops or ladder_operators(ctx, model)
    dp2, dm2 = memoized(square(dp)), memoized(square(dm))
    lift = lambda op: (lambda f, s: op(f))
    br = comm(H, dp2)

    def irrational(f, _s):
        lhs, rhs = br(f), dp(f)
        if lhs or rhs:
            return lhs, rhs, "rhs shows d+ f; the candidate needs [H, d+^2] f = 2 sqrt(2) d+ f"
        return None

    return [
        ("[d+^2, d-^2] = 16 H", _simple(lift(comm(dp2, dm2)), lift(scaled(H, 16)))),
        ("[d-^2, d+] = 4 d-", _simple(lift(comm(dm2, dp)), lift(scaled(dm, 4)))),
        ("[H, d+^2] = 2 sqrt(2) d+", irrational),
    ]


def _run(identities, inputs):
    results = []
    for name, check in identities:
        witness = None
        for trial, (f, s) in enumerate(inputs):
            bad = check(f, s)
            if bad is not None:
                lhs, rhs, detail = bad
                witness = {"trial": trial, "input": print_poly(f), "lhs": print_poly(lhs), "rhs": print_poly(rhs)}
                if detail:
                    witness["detail"] = detail
                break
        results.append(IdentityResult(name, witness is None, len(inputs), witness))
    return results


def random_inputs(ctx, degree, trials, seed):
    """Seeded (polynomial, s) pairs; s is a positive half-integer used by the Euler checks."""
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        f = random_poly(rng, ctx.n, degree)
        s = rational(rng.randint(1, 8), 2)
        out.append((f, s))
    return out


def verify_relations(ctx, suite, degree=5, trials=50, seed=0, model="direct"):
    """Check a suite on ``trials`` seeded random polynomials of degree <= ``degree``."""
    if suite not in SUITES:
        raise ValueError(f"suite must be one of {SUITES}, got {suite!r}")
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}, got {model!r}")
    if not isinstance(trials, int) or trials < 1:
        raise ValueError("trials must be a positive integer")
    if not isinstance(degree, int) or degree < 0:
        raise ValueError("degree must be a non-negative integer")
    inputs = random_inputs(ctx, degree, trials, seed)
    if suite == "heisenberg":
        identities = heisenberg_identities(ctx)
    elif suite == "dirac_euler":
        identities = dirac_euler_identities(ctx)
    else:
        ops = ladder_operators(ctx, model)
        identities = ladder_identities(ctx, model, even_only=(suite == "sl2"), ops=ops)
    report = VerifyReport(suite, model, ctx.describe(), degree, trials, seed, _run(identities, inputs))
    if suite == "osp":
        report.candidates = _run(ladder_candidates(ctx, model, ops=ops), inputs)
    return report
