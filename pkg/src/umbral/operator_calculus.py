"""Formal power series as shift-invariant operators.

A univariate shift-invariant operator ``Q = sum_k a_k d^k`` is identified
with its indicator series ``sum_k a_k t^k``. :class:`PowerSeries` holds the
indicator as a lazily evaluated, memoised coefficient oracle; acting on a
polynomial only ever needs coefficients up to the polynomial's degree.

:class:`CoordinateOperator` is the workhorse used by the umbral modules: a
linear map on univariate polynomials, described by its columns
``x^m -> sum_i c_i x^i`` and applied to a single coordinate of a
:class:`~umbral.poly.CliffPoly`.
"""

import threading
from math import isqrt

from .poly import CliffPoly, _check_coordinate
from .rational import ONE, ZERO, falling, inverse_factorial, rational


class PowerSeries:
    """Formal power series given by a coefficient oracle ``k -> a_k``.

    Coefficients are produced in order and cached, so an oracle may refer to
    earlier coefficients of the series being defined (recurrences).
    """

    def __init__(self, fn, name=None):
        self._fn = fn
        self._cache = []
        self._lock = threading.RLock()
        self.name = name

    @classmethod
    def from_coefficients(cls, coeffs, name=None):
        coeffs = [rational(c) for c in coeffs]
        return cls(lambda k: coeffs[k] if k < len(coeffs) else ZERO, name=name)

    @classmethod
    def constant(cls, c):
        return cls.from_coefficients([c], name=f"constant({c})")

    def coeff(self, k):
        if k < 0:
            return ZERO
        cache = self._cache
        if k < len(cache):
            return cache[k]
        with self._lock:
            while len(cache) <= k:
                cache.append(rational(self._fn(len(cache))))
            return cache[k]

    __getitem__ = coeff

    def coeffs(self, order):
        """Coefficients a_0..a_order."""
        self.coeff(order)
        return self._cache[: order + 1]

    def agrees_with(self, other, order):
        return all(self.coeff(k) == other.coeff(k) for k in range(order + 1))

    def __add__(self, other):
        other = _as_series(other)
        return PowerSeries(lambda k: self.coeff(k) + other.coeff(k))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(lambda k: -self.coeff(k))

    def __sub__(self, other):
        return self + (-_as_series(other))

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = rational(other)
            return PowerSeries(lambda k: c * self.coeff(k))
        return PowerSeries(lambda k: sum((self.coeff(i) * other.coeff(k - i) for i in range(k + 1)), ZERO))

    __rmul__ = __mul__

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs(5))
        label = f"{self.name}: " if self.name else ""
        return f"PowerSeries({label}{head}, ...)"


def _as_series(x):
    return x if isinstance(x, PowerSeries) else PowerSeries.constant(x)


class DeltaSeries(PowerSeries):
    """Indicator of a delta operator: ``a_0 = 0`` and ``a_1 != 0``."""

    def __init__(self, fn, name=None):
        super().__init__(fn, name=name)
        if self.coeff(0) != 0:
            raise ValueError(f"delta series needs a_0 = 0, got {self.coeff(0)}")
        if self.coeff(1) == 0:
            raise ValueError("delta series needs a_1 != 0")

    @classmethod
    def from_series(cls, s):
        return cls(s.coeff, name=s.name)


def _positive_step(h):
    h = rational(h)
    if h <= 0:
        raise ValueError(f"step h must be positive, got {h}")
    return h


def catalog_series(kind, h=1, c=None):
    """Indicator series of the standard operators.

    ``derivative``: t; ``forward``: (e^{ht} - 1)/h; ``backward``:
    (1 - e^{-ht})/h; ``central``: sinh(ht)/h; ``shift``: e^{ct}.
    """
    if kind == "derivative":
        return DeltaSeries(lambda k: ONE if k == 1 else ZERO, name="derivative")
    if kind == "shift":
        if c is None:
            raise ValueError("shift needs a displacement c")
        c = rational(c)
        return PowerSeries(lambda k: c ** k * inverse_factorial(k), name=f"shift({c})")
    h = _positive_step(h)
    if kind == "forward":
        return DeltaSeries(lambda k: h ** (k - 1) * inverse_factorial(k) if k else ZERO, name="forward")
    if kind == "backward":
        return DeltaSeries(lambda k: (-1) ** (k + 1) * h ** (k - 1) * inverse_factorial(k) if k else ZERO,
                           name="backward")
    if kind == "central":
        return DeltaSeries(lambda k: h ** (k - 1) * inverse_factorial(k) if k % 2 else ZERO, name="central")
    raise ValueError(f"unknown operator kind {kind!r}")


def series_pincherle(s):
    """Pincherle derivative [Q, x]: the formal derivative of the indicator."""
    return PowerSeries(lambda k: (k + 1) * s.coeff(k + 1))


def series_mult_inverse(s):
    """Multiplicative inverse; requires a nonzero constant term."""
    a0 = s.coeff(0)
    if a0 == 0:
        raise ValueError("series with zero constant term has no multiplicative inverse")

    def fn(k):
        if k == 0:
            return 1 / a0
        return -sum((s.coeff(i) * inv.coeff(k - i) for i in range(1, k + 1)), ZERO) / a0

    inv = PowerSeries(fn)
    return inv


class _Powers:
    """Incrementally grown table of [t^i] G^m for a series with g_0 = 0."""

    def __init__(self, g):
        self.g = g
        self.rows = [[ONE]]   # rows[m][i] = [t^i] G^m, filled for i <= self.order
        self.order = 0
        self.lock = threading.Lock()

    def upto(self, order):
        with self.lock:
            g = self.g
            while self.order < order:
                k = self.order + 1
                self.rows[0].append(ZERO)
                self.rows.append([ZERO] * k)
                for m in range(1, k + 1):
                    prev = self.rows[m - 1]
                    self.rows[m].append(sum((g.coeff(j) * prev[k - j] for j in range(1, k + 1)), ZERO))
                self.order = k
            return self.rows


def series_compose(f, g):
    """F(G(t)) for an inner series with zero constant term."""
    if g.coeff(0) != 0:
        raise ValueError("inner series of a composition must have zero constant term")
    powers = _Powers(g)

    def fn(k):
        rows = powers.upto(k)
        return sum((f.coeff(m) * rows[m][k] for m in range(k + 1)), ZERO)

    return PowerSeries(fn)


def series_reversion(f):
    """Compositional inverse G with F(G(t)) = t, solved order by order."""
    if f.coeff(0) != 0 or f.coeff(1) == 0:
        raise ValueError("reversion needs f_0 = 0 and f_1 != 0")
    f1 = f.coeff(1)

    def fn(k):
        if k == 0:
            return ZERO
        if k == 1:
            return 1 / f1
        # [t^k] F(G_<k) with g_k = 0; the missing f_1 g_k term must cancel it
        known = [rev.coeff(i) for i in range(k)] + [ZERO]
        power = known
        total = ZERO
        for m in range(2, k + 1):
            power = _truncated_product(power, known, k)
            total += f.coeff(m) * power[k]
        return -total / f1

    rev = DeltaSeries(fn)
    return rev


def _truncated_product(a, b, order):
    return [sum((a[i] * b[k - i] for i in range(k + 1)), ZERO) for k in range(order + 1)]


def series_sqrt(s):
    """Square root with constant term the positive rational root of s_0."""
    s0 = s.coeff(0)
    if s0 <= 0:
        raise ValueError("square root needs a positive constant term")
    num, den = s0.numerator, s0.denominator
    rn, rd = _isqrt_exact(num), _isqrt_exact(den)
    if rn is None or rd is None:
        raise ValueError(f"constant term {s0} is not a rational square")
    r0 = rational(rn) / rd

    def fn(k):
        if k == 0:
            return r0
        cross = sum((root.coeff(i) * root.coeff(k - i) for i in range(1, k)), ZERO)
        return (s.coeff(k) - cross) / (2 * r0)

    root = PowerSeries(fn)
    return root


def _isqrt_exact(v):
    r = isqrt(int(v))
    return r if r * r == v else None


def series_from_text(text):
    """Parse a coefficient list ``[a0, a1, ...]``; zeros beyond the list."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"series must look like [a0,a1,...], got {text!r}")
    items = [x for x in body[1:-1].split(",") if x.strip()]
    if not items:
        raise ValueError("empty coefficient list")
    return PowerSeries.from_coefficients([rational(x.strip()) for x in items], name=f"custom{body}")


class CoordinateOperator:
    """Linear operator on univariate polynomials, applied along one coordinate.

    ``column_fn(m)`` returns the image of ``x^m`` as ``{i: coefficient}``.
    Columns are cached. Operators compose with ``@`` (``A @ B`` applies B
    first) and combine linearly with ``+``, ``-`` and scalar ``*``.
    """

    def __init__(self, column_fn, name=None):
        self._column_fn = column_fn
        self._cols = {}
        self._lock = threading.Lock()
        self.name = name

    def column(self, m):
        col = self._cols.get(m)
        if col is None:
            raw = self._column_fn(m)
            col = tuple((i, rational(c)) for i, c in sorted(raw.items()) if c)
            with self._lock:
                self._cols.setdefault(m, col)
        return col

    @classmethod
    def from_series(cls, s, name=None):
        def col(m):
            return {m - k: s.coeff(k) * falling(m, k) for k in range(m + 1)}

        return cls(col, name=name or s.name)

    def apply_univariate(self, coeffs):
        """Act on ``{power: coefficient}``."""
        out = {}
        for m, c in coeffs.items():
            for i, w in self.column(m):
                out[i] = out.get(i, ZERO) + c * w
        return {i: v for i, v in out.items() if v}

    def apply(self, j, p):
        """Act on coordinate ``x_j`` of ``p``."""
        _check_coordinate(j, p.n)
        idx = j - 1
        cols = self._cols
        out = {}
        get = out.get
        for (alpha, mask), c in p._c.items():
            m = alpha[idx]
            col = cols.get(m)
            if col is None:
                col = self.column(m)
            head = alpha[:idx]
            tail = alpha[idx + 1:]
            for i, w in col:
                key = (head + (i,) + tail, mask)
                out[key] = get(key, ZERO) + c * w
        return CliffPoly._raw(p.n, {k: v for k, v in out.items() if v})

    def apply_all(self, p):
        """Tensor action: the operator on every coordinate in turn."""
        for j in range(1, p.n + 1):
            p = self.apply(j, p)
        return p

    def __matmul__(self, other):
        def col(m):
            return self.apply_univariate(dict(other.column(m)))

        return CoordinateOperator(col)

    def __add__(self, other):
        def col(m):
            out = dict(self.column(m))
            for i, c in other.column(m):
                out[i] = out.get(i, ZERO) + c
            return out

        return CoordinateOperator(col)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = rational(c)
        return CoordinateOperator(lambda m: {i: c * w for i, w in self.column(m)})

    __rmul__ = __mul__


MUL_X = CoordinateOperator(lambda m: {m + 1: ONE}, name="x")
IDENTITY = CoordinateOperator(lambda m: {m: ONE}, name="id")


def apply_series(s, j, p):
    """``sum_k a_k d_j^k p``, exact and finite on polynomials."""
    return CoordinateOperator.from_series(s).apply(j, p)


def graded_inverse(basis_column):
    """Columns of the change of basis back to monomials.

    ``basis_column(m)`` gives the basis polynomial b_m as ``{power: coeff}``,
    of degree exactly m. The returned column function expresses ``x^m`` as
    ``{i: c_i}`` with ``x^m = sum_i c_i b_i``, found by repeatedly removing
    the top-degree term.
    """

    def col(m):
        rest = {m: ONE}
        out = {}
        while rest:
            top = max(rest)
            b = basis_column(top)
            lead = b.get(top, ZERO)
            if not lead:
                raise ValueError(f"basis polynomial of degree {top} has zero leading coefficient")
            c = rest[top] / lead
            out[top] = c
            for i, w in b.items():
                v = rest.get(i, ZERO) - c * w
                if v:
                    rest[i] = v
                else:
                    rest.pop(i, None)
        return out

    return col
