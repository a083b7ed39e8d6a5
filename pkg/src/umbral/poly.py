"""Clifford-valued polynomials in commuting variables x_1..x_n.

A :class:`CliffPoly` is a finite sum of terms ``c * x^alpha * e_A`` where the
multivector coefficient sits on the left of the monomial. Internally the
terms are flattened to ``{(alpha, blade mask): rational}``, which keeps the
scalar operators of the later modules cheap; :attr:`CliffPoly.terms` gives
the ``{alpha: Multivector}`` view.
"""

import math
import random as _random

from .clifford import Multivector, blade_indices, blade_mask, blade_sort_key, mul_masks
from .rational import ZERO, Rational, rational

NEG_INF = -math.inf


def _check_coordinate(j, n):
    if not isinstance(j, int) or j < 1 or j > n:
        raise ValueError(f"coordinate {j!r} out of range 1..{n}")


def _alpha_key(alpha):
    # descending graded lexicographic order, used for printing
    return (-sum(alpha), tuple(-a for a in alpha))


def term_sort_key(key):
    alpha, mask = key
    return _alpha_key(alpha) + blade_sort_key(mask)


class CliffPoly:
    """Polynomial with coefficients in Cl(0, n). Immutable."""

    __slots__ = ("_c", "_hash", "n")

    def __init__(self, n, terms=None):
        """``terms`` maps multi-index tuples to multivectors or rationals."""
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"dimension must be a positive integer, got {n!r}")
        self.n = n
        self._hash = None
        flat = {}
        for alpha, coeff in (terms or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != n or any((not isinstance(a, int)) or a < 0 for a in alpha):
                raise ValueError(f"bad multi-index {alpha} for n={n}")
            if isinstance(coeff, Multivector):
                if coeff.n != n:
                    raise ValueError(f"dimension mismatch: coefficient in Cl(0,{coeff.n}), poly n={n}")
                items = coeff.items()
            else:
                items = ((0, rational(coeff)),)
            for mask, c in items:
                key = (alpha, mask)
                flat[key] = flat.get(key, ZERO) + c
        self._c = {k: v for k, v in flat.items() if v}

    @classmethod
    def _raw(cls, n, flat):
        obj = cls.__new__(cls)
        obj.n = n
        obj._c = flat
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n, c=1, blade=()):
        c = rational(c)
        return cls._raw(n, {((0,) * n, blade_mask(blade, n)): c} if c else {})

    @classmethod
    def monomial(cls, n, alpha, c=1, blade=()):
        alpha = tuple(alpha)
        if len(alpha) != n:
            raise ValueError(f"multi-index {alpha} has wrong length for n={n}")
        if isinstance(c, Multivector):
            return cls(n, {alpha: c})
        c = rational(c)
        return cls._raw(n, {(alpha, blade_mask(blade, n)): c} if c else {})

    @classmethod
    def variable(cls, n, j):
        _check_coordinate(j, n)
        alpha = [0] * n
        alpha[j - 1] = 1
        return cls._raw(n, {(tuple(alpha), 0): rational(1)})

    # -- views ----------------------------------------------------------

    @property
    def terms(self):
        """``{alpha: Multivector}`` in descending graded-lex order."""
        grouped = {}
        for (alpha, mask), c in self._c.items():
            grouped.setdefault(alpha, {})[mask] = c
        return {a: Multivector._raw(self.n, grouped[a]) for a in sorted(grouped, key=_alpha_key)}

    def items(self):
        """Flat ``((alpha, blade indices), coefficient)`` pairs in canonical order."""
        for key in sorted(self._c, key=term_sort_key):
            yield (key[0], blade_indices(key[1])), self._c[key]

    def coefficient(self, alpha, blade=()):
        return self._c.get((tuple(alpha), blade_mask(blade, self.n)), ZERO)

    @property
    def degree(self):
        """Total degree; ``-inf`` for the zero polynomial."""
        if not self._c:
            return NEG_INF
        return max(sum(alpha) for alpha, _ in self._c)

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def is_scalar_valued(self):
        return all(mask == 0 for _, mask in self._c)

    def grades(self):
        return {mask.bit_count() for _, mask in self._c}

    def grade_part(self, g):
        return CliffPoly._raw(self.n, {k: c for k, c in self._c.items() if k[1].bit_count() == g})

    def homogeneous_part(self, m):
        return CliffPoly._raw(self.n, {k: c for k, c in self._c.items() if sum(k[0]) == m})

    def evaluate_at_zero(self):
        zero = (0,) * self.n
        return Multivector._raw(self.n, {mask: c for (alpha, mask), c in self._c.items() if alpha == zero})

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CliffPoly):
            if other.n != self.n:
                raise ValueError(f"dimension mismatch: n={self.n} vs n={other.n}")
            return other
        if isinstance(other, Multivector):
            if other.n != self.n:
                raise ValueError(f"dimension mismatch: n={self.n} vs Cl(0,{other.n})")
            return CliffPoly(self.n, {(0,) * self.n: other})
        return CliffPoly.constant(self.n, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._c)
        for k, c in other._c.items():
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return CliffPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return CliffPoly._raw(self.n, {k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = rational(c)
        if not c:
            return CliffPoly._raw(self.n, {})
        return CliffPoly._raw(self.n, {k: v * c for k, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) or not isinstance(other, (CliffPoly, Multivector)):
            return self.scale(other)
        other = self._coerce(other)
        out = {}
        for (a, ma), ca in self._c.items():
            for (b, mb), cb in other._c.items():
                sign, m = mul_masks(ma, mb)
                key = (tuple(x + y for x, y in zip(a, b)), m)
                v = ca * cb
                out[key] = out.get(key, ZERO) + (v if sign > 0 else -v)
        return CliffPoly._raw(self.n, {k: c for k, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, Multivector):
            return self._coerce(other) * self
        return self.scale(other)

    def left_mul_generator(self, j):
        """``e_j * self``."""
        _check_coordinate(j, self.n)
        g = 1 << (j - 1)
        out = {}
        for (alpha, mask), c in self._c.items():
            sign, m = mul_masks(g, mask)
            out[(alpha, m)] = c if sign > 0 else -c
        return CliffPoly._raw(self.n, out)

    def __eq__(self, other):
        if isinstance(other, CliffPoly):
            return self.n == other.n and self._c == other._c
        if isinstance(other, (int, Rational)):
            return self == CliffPoly.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._c.items())))
        return self._hash

    def __str__(self):
        from .textform import print_poly

        return print_poly(self)

    def __repr__(self):
        return f"CliffPoly({self.n}, {str(self)!r})"


def poly_arith(op, p, q=None):
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scalar_mul":
        return p.scale(q)
    raise ValueError(f"unknown polynomial operation {op!r}")


def partial(j, p):
    """Partial derivative in x_j, applied coefficient-wise."""
    _check_coordinate(j, p.n)
    i = j - 1
    out = {}
    for (alpha, mask), c in p._c.items():
        a = alpha[i]
        if a:
            out[(alpha[:i] + (a - 1,) + alpha[i + 1:], mask)] = c * a
    return CliffPoly._raw(p.n, out)


def mul_var(j, p):
    """Multiplication by x_j."""
    _check_coordinate(j, p.n)
    i = j - 1
    return CliffPoly._raw(p.n, {(alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:], mask): c
                                for (alpha, mask), c in p._c.items()})


def homogeneous_parts(p):
    """``[(m, part)]`` for every degree m present, ascending."""
    parts = {}
    for key, c in p._c.items():
        parts.setdefault(sum(key[0]), {})[key] = c
    return [(m, CliffPoly._raw(p.n, parts[m])) for m in sorted(parts)]


def multi_indices(n, degree):
    """All multi-indices of length n with |alpha| == degree, descending lex."""
    if n == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in multi_indices(n - 1, degree - first):
            yield (first,) + rest


def random_rational(rng):
    num = rng.choice([i for i in range(-9, 10) if i])
    return rational(num) / rng.choice((1, 2, 3))


def random_poly(rng, n, degree, max_terms=8, blades=True):
    """Seeded random polynomial: at most ``max_terms`` terms of degree <= ``degree``.

    Coefficient numerators are uniform in [-9, 9] without 0 and denominators
    uniform in {1, 2, 3}; blades are uniform over all 2^n basis blades.
    """
    if isinstance(rng, int):
        rng = _random.Random(rng)
    flat = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, degree)
        alpha = [0] * n
        for _ in range(d):
            alpha[rng.randrange(n)] += 1
        mask = rng.randrange(1 << n) if blades else 0
        key = (tuple(alpha), mask)
        flat[key] = flat.get(key, ZERO) + random_rational(rng)
    return CliffPoly._raw(n, {k: c for k, c in flat.items() if c})
