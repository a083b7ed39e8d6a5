"""Harmonic oscillator ladder algebra on polynomials.

Two realisations are provided, both free of square roots: the operators
``d_pm = sqrt(2) D'_pm`` are used in place of the normalised ones.

* direct model: ``d_pm = x' -+ D'`` and ``H' = ((D')^2 - (x')^2) / 2``;
* gauge model: a function ``p * G`` with ``G`` the Gaussian ground state
  ``exp(-|x|^2 / 2)`` is represented by its polynomial part ``p``. The
  conjugated operators are ``L_j = O_j``, ``R_j = x_j' - O_j / 2``,
  ``d- = D'``, ``d+ = 2 x' - D'`` and ``H^g = E'_{n/2} - (1/2) sum_j O_j^2``.

In the gauge model ``W_alpha = R^alpha 1`` are eigenvectors of ``H^g`` with
eigenvalue ``|alpha| + n/2``, which yields an exact resolvent and an
Almansi-type decomposition in powers of ``d+``.
"""

import threading
from math import factorial

from .dirac_almansi import (
    AlmansiResult,
    _check_order,
    clifford_sum,
    decompose_with,
    dirac,
    half_dim,
    kernel_basis,
    q_k_factor,
    reconstruct_with,
    vector_var,
)
from .operator_calculus import CoordinateOperator, graded_inverse
from .poly import CliffPoly, multi_indices
from .rational import ONE, rational
from .umbral_core import (
    GeneratingFunctionMismatch,
    UmbralContext,
    euler_s,
    generating_coefficients,
)


class GaugeContext:
    """Gauge-model operators built over an :class:`UmbralContext`."""

    def __init__(self, base):
        if not isinstance(base, UmbralContext):
            raise TypeError("GaugeContext needs an UmbralContext")
        self.base = base
        self.n = base.n
        self.lower = base.lower
        self.raise_ = base.raise_ - base.lower * rational(1, 2)
        self.lower_sq = base.lower @ base.lower
        self._univariate = [{0: ONE}]
        self._lock = threading.Lock()
        self.hermite_map = CoordinateOperator(self.univariate_hermite, name="W")
        self.hermite_inv = CoordinateOperator(graded_inverse(self.univariate_hermite), name="W^-1")
        self._cache = {}

    def univariate_hermite(self, m):
        """w_m = R^m 1 in one variable, as ``{power: coeff}``."""
        table = self._univariate
        if m < len(table):
            return table[m]
        with self._lock:
            while len(table) <= m:
                table.append(self.raise_.apply_univariate(table[-1]))
        return table[m]

    def describe(self):
        doc = self.base.describe()
        doc["model"] = "gauge"
        return doc

    def __repr__(self):
        return f"GaugeContext({self.base!r})"


def hamiltonian_direct(ctx, f):
    """H' f = ((D')^2 f - (x')^2 f) / 2."""
    dd = dirac(ctx, dirac(ctx, f))
    xx = vector_var(ctx, vector_var(ctx, f))
    return (dd - xx).scale(rational(1, 2))


def dirac_pm(ctx, sign, f):
    """d_pm f = x' f -+ D' f, i.e. sqrt(2) D'_pm without the square root."""
    if sign in ("+", 1):
        return vector_var(ctx, f) - dirac(ctx, f)
    if sign in ("-", -1):
        return vector_var(ctx, f) + dirac(ctx, f)
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def gauge_lower(gctx, j, f):
    return gctx.lower.apply(j, f)


def gauge_raise(gctx, j, f):
    return gctx.raise_.apply(j, f)


def gauge_dirac_minus(gctx, f):
    """d- = D'."""
    return dirac(gctx.base, f)


def gauge_dirac_plus(gctx, f):
    """d+ = 2 x' - D' = 2 sum_j e_j R_j."""
    return clifford_sum(gctx.raise_, f).scale(2)


def hamiltonian_gauge(gctx, f):
    """H^g f = E'_{n/2} f - (1/2) sum_j O_j^2 f."""
    base = gctx.base
    out = euler_s(base, half_dim(base), f)
    lap = CliffPoly.zero(gctx.n)
    for j in range(1, gctx.n + 1):
        lap = lap + gctx.lower_sq.apply(j, f)
    return out - lap.scale(rational(1, 2))


def hermite_basic(gctx, alpha):
    """W_alpha = R^alpha 1, an eigenvector of H^g for |alpha| + n/2."""
    alpha = tuple(alpha)
    if len(alpha) != gctx.n or any(a < 0 for a in alpha):
        raise ValueError(f"bad multi-index {alpha} for n={gctx.n}")
    cached = gctx._cache.get(alpha)
    if cached is not None:
        return cached
    flat = {((), 0): ONE}
    for a in alpha:
        col = gctx.univariate_hermite(a)
        flat = {(key + (i,), 0): c * w for (key, _), c in flat.items() for i, w in col.items()}
    result = CliffPoly._raw(gctx.n, {k: v for k, v in flat.items() if v})
    gctx._cache[alpha] = result
    return result


def hermite_eigenvalue(gctx, alpha):
    return sum(alpha) + half_dim(gctx.base)


def scale_by_hermite_degree(gctx, f, factor):
    """Multiply the |alpha| = m part of f in the W basis by factor(m)."""
    g = gctx.hermite_inv.apply_all(f)
    cache = {}
    flat = {}
    for key, c in g._c.items():
        m = sum(key[0])
        w = cache.get(m)
        if w is None:
            w = cache[m] = rational(factor(m))
        if w:
            flat[key] = c * w
    return gctx.hermite_map.apply_all(CliffPoly._raw(gctx.n, flat))


def oscillator_resolvent(gctx, s, f):
    """Inverse of (s - n/2) id + H^g, diagonal on the W basis."""
    s = rational(s)
    if s <= 0:
        raise ValueError(f"resolvent needs s > 0, got {s}")
    return scale_by_hermite_degree(gctx, f, lambda m: 1 / (s + m))


def oscillator_q(gctx, k, f):
    """Projector coefficient for the d+ expansion.

    Same shape as Q'_k with the resolvents of H^g in place of I'_s, and an
    extra 1/2^k because d+ carries the factor sqrt(2) of D'_+ twice over.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    base = q_k_factor(half_dim(gctx.base), k)
    return scale_by_hermite_degree(gctx, f, lambda m: base(m) / 2 ** k)


def oscillator_almansi(gctx, f, k=None):
    """Split f with (D')^k f = 0 as g_1 + d+ g_2 + ... + (d+)^{k-1} g_k, D' g_i = 0."""
    lower = lambda g: gauge_dirac_minus(gctx, g)
    raise_ = lambda g: gauge_dirac_plus(gctx, g)
    k = _check_order(lower, f, k)
    comps = decompose_with(f, k, lower, raise_, lambda j, g: oscillator_q(gctx, j, g))
    return AlmansiResult(
        k=k,
        components=tuple(comps),
        context=gctx.base,
        source=f,
        monogenic_ok=all(not lower(c) for c in comps),
        reconstruction_ok=reconstruct_with(comps, raise_, gctx.n) == f,
        model="gauge",
    )


def oscillator_reconstruct(gctx, parts):
    """sum_i (d+)^{i-1} g_i."""
    return reconstruct_with(list(parts), lambda g: gauge_dirac_plus(gctx, g), gctx.n)


def gauge_monogenic_basis(gctx, degree):
    """Basis of span{W_alpha e_A : |alpha| = degree} intersected with ker D'."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return kernel_basis(gctx.n, degree, lambda a: hermite_basic(gctx, a), lambda g: dirac(gctx.base, g))


def hermite_generating_check(gctx, order):
    """Check sum_alpha W_alpha t^alpha / alpha! = prod_j exp(-t_j^2 / 4) A(t_j) exp(x_j G(t_j)).

    This is the polynomial part of the oscillator generating function in the
    gauge; A and G are as in :func:`umbral.umbral_core.generating_coefficients`.
    Returns ``{alpha: coefficient}`` or raises GeneratingFunctionMismatch.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    sheffer = generating_coefficients(gctx.base, order)
    gauss = [rational((-1) ** (k // 2), 4 ** (k // 2) * factorial(k // 2)) if k % 2 == 0 else 0
             for k in range(order + 1)]
    uni = []
    for k in range(order + 1):
        acc = {}
        for i in range(0, k + 1, 2):
            for m, c in sheffer[k - i].items():
                acc[m] = acc.get(m, 0) + gauss[i] * c
        uni.append({m: c for m, c in acc.items() if c})
    table = {}
    for d in range(order + 1):
        for alpha in multi_indices(gctx.n, d):
            flat = {((), 0): ONE}
            for a in alpha:
                flat = {(key + (i,), 0): c * w for (key, _), c in flat.items() for i, w in uni[a].items()}
            coeff = CliffPoly._raw(gctx.n, {k: v for k, v in flat.items() if v})
            denom = 1
            for a in alpha:
                denom *= factorial(a)
            expected = hermite_basic(gctx, alpha).scale(rational(1, denom))
            if coeff != expected:
                raise GeneratingFunctionMismatch(alpha, expected, coeff)
            table[alpha] = coeff
    return table


def verify_relations(ctx, suite, degree=5, trials=50, seed=0, model="direct"):
    """Run an identity suite; see :func:`umbral.verify.verify_relations`."""
    from .verify import verify_relations as run

    return run(ctx, suite, degree=degree, trials=trials, seed=seed, model=model)
