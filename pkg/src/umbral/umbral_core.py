"""Umbral pairs, basic polynomial sequences and the Sheffer map.

An :class:`UmbralContext` fixes a delta operator ``O`` (the same univariate
indicator in every coordinate), its Pincherle derivative ``O'`` and the
raising operator ``x_j'``:

* ``plain``:     ``x_j' = x_j (O_j')^{-1}``
* ``symmetric``: ``x_j' = (x_j (O_j')^{-1} + (O_j')^{-1} x_j) / 2``

Both satisfy ``[O_j, x_k'] = delta_jk``. Because every operator acts on one
coordinate only, the basic polynomials factor as
``V_alpha(x) = prod_j v_{alpha_j}(x_j)`` and the Sheffer map
``x^alpha -> V_alpha`` is the tensor power of its univariate version.
"""

import threading
from math import factorial

from .operator_calculus import (
    MUL_X,
    CoordinateOperator,
    DeltaSeries,
    PowerSeries,
    catalog_series,
    graded_inverse,
    series_compose,
    series_mult_inverse,
    series_pincherle,
    series_reversion,
    series_sqrt,
)
from .poly import CliffPoly, multi_indices
from .rational import ONE, ZERO, rational

DELTA_KINDS = ("derivative", "forward", "backward", "central")
VARIANTS = ("plain", "symmetric")


class UmbralContext:
    """Dimension, delta operator and raising variant; fixes all operator semantics.

    ``delta`` is a catalog name or a :class:`DeltaSeries` (custom operators).
    ``h`` is ignored for the derivative.
    """

    def __init__(self, n, delta="derivative", h=1, variant="plain"):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"dimension must be a positive integer, got {n!r}")
        if variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
        self.n = n
        self.h = rational(h)
        if self.h <= 0:
            raise ValueError(f"step h must be positive, got {self.h}")
        self.variant = variant
        if isinstance(delta, str):
            if delta not in DELTA_KINDS:
                raise ValueError(f"delta must be one of {DELTA_KINDS} or a power series, got {delta!r}")
            self.delta_name = delta
            self.delta = catalog_series(delta, self.h)
        elif isinstance(delta, PowerSeries):
            self.delta = delta if isinstance(delta, DeltaSeries) else DeltaSeries.from_series(delta)
            self.delta_name = delta.name or "custom"
        else:
            raise TypeError("delta must be a catalog name or a power series")

        self.pincherle = series_pincherle(self.delta)
        self.pincherle_inverse = series_mult_inverse(self.pincherle)

        self.lower = CoordinateOperator.from_series(self.delta, name="O")
        inv = CoordinateOperator.from_series(self.pincherle_inverse, name="(O')^-1")
        plain = MUL_X @ inv
        if variant == "plain":
            self.raise_ = plain
        else:
            self.raise_ = (plain + inv @ MUL_X) * rational(1, 2)

        self._univariate_basic = [{0: ONE}]
        self._basic_lock = threading.Lock()
        self.sheffer = CoordinateOperator(self.univariate_basic, name="Psi")
        self.sheffer_inv = CoordinateOperator(graded_inverse(self.univariate_basic), name="Psi^-1")
        self._basic_cache = {}

    def univariate_basic(self, m):
        """v_m = (x')^m 1 in one variable, as ``{power: coeff}``."""
        table = self._univariate_basic
        if m < len(table):
            return table[m]
        with self._basic_lock:
            while len(table) <= m:
                table.append(self.raise_.apply_univariate(table[-1]))
        return table[m]

    def describe(self):
        return {"delta": self.delta_name, "h": str(self.h), "variant": self.variant, "n": self.n}

    def __repr__(self):
        return (f"UmbralContext(n={self.n}, delta={self.delta_name!r}, h={self.h}, "
                f"variant={self.variant!r})")


def apply_O(ctx, j, p):
    """The delta operator O_{x_j}."""
    return ctx.lower.apply(j, p)


def apply_raise(ctx, j, p):
    """The raising operator x_j'."""
    return ctx.raise_.apply(j, p)


def basic_polynomial(ctx, alpha):
    """V_alpha = (x')^alpha 1 (Rodrigues' formula)."""
    alpha = tuple(alpha)
    if len(alpha) != ctx.n or any(a < 0 for a in alpha):
        raise ValueError(f"bad multi-index {alpha} for n={ctx.n}")
    cached = ctx._basic_cache.get(alpha)
    if cached is not None:
        return cached
    flat = {((), 0): ONE}
    for a in alpha:
        col = ctx.univariate_basic(a)
        flat = {(key + (i,), 0): c * w for (key, _), c in flat.items() for i, w in col.items()}
    result = CliffPoly._raw(ctx.n, {k: v for k, v in flat.items() if v})
    ctx._basic_cache[alpha] = result
    return result


def euler_s(ctx, s, p):
    """E'_s p = s p + sum_j x_j' O_j p."""
    out = p.scale(s)
    for j in range(1, ctx.n + 1):
        out = out + ctx.raise_.apply(j, ctx.lower.apply(j, p))
    return out


def sheffer_map(ctx, p):
    """Linear extension of x^alpha -> V_alpha, coefficients kept on the left."""
    return ctx.sheffer.apply_all(p)


def sheffer_inverse(ctx, p):
    """Inverse Sheffer map: rewrites p in the V basis and returns sum c_alpha x^alpha."""
    return ctx.sheffer_inv.apply_all(p)


class GeneratingFunctionMismatch(AssertionError):
    def __init__(self, alpha, expected, found):
        self.alpha = alpha
        super().__init__(f"generating function mismatch at alpha={alpha}: expected {expected}, found {found}")


def generating_series_prefactor(ctx):
    """Factor A(t) with sum_k v_k t^k / k! = A(t) exp(x G(t)), G the reversion of O.

    Plain raising gives the basic sequence (A = 1). The symmetric variant
    gives a Sheffer sequence with A(t) = O'(G(t))^{-1/2}.
    """
    if ctx.variant == "plain":
        return PowerSeries.constant(1)
    g = series_reversion(ctx.delta)
    return series_mult_inverse(series_sqrt(series_compose(ctx.pincherle, g)))


def generating_coefficients(ctx, order):
    """Univariate coefficients u_k(x) = [t^k] A(t) exp(x G(t)) for k <= order."""
    g = series_reversion(ctx.delta)
    a = generating_series_prefactor(ctx)
    gcoef = g.coeffs(order)
    # powers[m][i] = [t^i] G(t)^m
    powers = [[ONE] + [ZERO] * order]
    for m in range(1, order + 1):
        prev = powers[-1]
        powers.append([sum((gcoef[j] * prev[i - j] for j in range(1, i + 1)), ZERO) for i in range(order + 1)])
    exp_part = []
    for k in range(order + 1):
        exp_part.append({m: powers[m][k] / factorial(m) for m in range(k + 1) if powers[m][k]})
    out = []
    for k in range(order + 1):
        acc = {}
        for i in range(k + 1):
            ai = a.coeff(i)
            if ai:
                for m, c in exp_part[k - i].items():
                    acc[m] = acc.get(m, ZERO) + ai * c
        out.append({m: c for m, c in acc.items() if c})
    return out


def generating_check(ctx, order):
    """Expand the exponential generating function to total order ``order`` in t.

    Returns ``{alpha: coefficient of t^alpha}`` and raises
    :class:`GeneratingFunctionMismatch` at the first alpha where the
    coefficient differs from ``V_alpha / alpha!``.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    uni = generating_coefficients(ctx, order)
    table = {}
    for d in range(order + 1):
        for alpha in multi_indices(ctx.n, d):
            flat = {((), 0): ONE}
            for a in alpha:
                flat = {(key + (i,), 0): c * w for (key, _), c in flat.items() for i, w in uni[a].items()}
            coeff = CliffPoly._raw(ctx.n, {k: v for k, v in flat.items() if v})
            denom = 1
            for a in alpha:
                denom *= factorial(a)
            expected = basic_polynomial(ctx, alpha).scale(rational(1, denom))
            if coeff != expected:
                raise GeneratingFunctionMismatch(alpha, expected, coeff)
            table[alpha] = coeff
    return table


def lower_index(alpha, j):
    alpha = list(alpha)
    alpha[j - 1] -= 1
    return tuple(alpha)


def raise_index(alpha, j):
    alpha = list(alpha)
    alpha[j - 1] += 1
    return tuple(alpha)
