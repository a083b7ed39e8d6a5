"""Exact arithmetic in the Clifford algebra Cl(0, n).

Generators satisfy ``e_j e_k + e_k e_j = -2 delta_jk``. A basis blade
``e_{i1} e_{i2} ... e_{ik}`` with ``i1 < i2 < ... < ik`` is stored as a bitmask
with bit ``i - 1`` set for each index ``i``; the public API speaks sorted index
tuples.
"""

from functools import cache

from .rational import ZERO, Rational, rational


def _check_dim(n):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")


def blade_mask(indices, n):
    """Bitmask of a blade given as a strictly increasing index sequence."""
    mask = 0
    prev = 0
    for i in indices:
        if not isinstance(i, int) or i < 1 or i > n:
            raise ValueError(f"blade index {i!r} out of range 1..{n}")
        if i <= prev:
            raise ValueError(f"blade indices must be strictly increasing: {tuple(indices)}")
        prev = i
        mask |= 1 << (i - 1)
    return mask


def blade_indices(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def blade_grade(mask):
    return mask.bit_count()


@cache
def mul_masks(a, b):
    """Product of two basis blades given as bitmasks: ``(sign, mask)``.

    The sign counts the transpositions needed to sort the concatenated
    index sequence, times ``(-1)`` for every repeated generator.
    """
    swaps = 0
    x = a >> 1
    while x:
        swaps += (x & b).bit_count()
        x >>= 1
    swaps += (a & b).bit_count()
    return (-1 if swaps & 1 else 1), a ^ b


def blade_mul(a, b, n):
    """Clifford product of two basis blades given as index sequences.

    >>> blade_mul([1, 2], [1], 2)
    (1, (2,))
    """
    sign, mask = mul_masks(blade_mask(a, n), blade_mask(b, n))
    return sign, blade_indices(mask)


def blade_sort_key(mask):
    return (blade_grade(mask), blade_indices(mask))


def format_blade(mask):
    return "e[" + ",".join(str(i) for i in blade_indices(mask)) + "]"


class Multivector:
    """An element of Cl(0, n) with exact rational coefficients.

    Stored sparsely as ``{blade mask: coefficient}`` with no zero entries.
    Instances are immutable.
    """

    __slots__ = ("_hash", "_terms", "n")

    def __init__(self, n, terms=None):
        _check_dim(n)
        self.n = n
        clean = {}
        if terms:
            limit = 1 << n
            for key, c in terms.items():
                mask = key if isinstance(key, int) else blade_mask(key, n)
                if mask < 0 or mask >= limit:
                    raise ValueError(f"blade {blade_indices(mask)} exceeds dimension {n}")
                c = rational(c)
                if c:
                    clean[mask] = clean.get(mask, ZERO) + c
            clean = {k: v for k, v in clean.items() if v}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n, terms):
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def scalar(cls, n, c=1):
        return cls(n, {0: c})

    @classmethod
    def blade(cls, n, indices, c=1):
        return cls(n, {blade_mask(indices, n): c})

    @classmethod
    def generator(cls, n, j):
        return cls.blade(n, (j,))

    @property
    def terms(self):
        """``{index tuple: coefficient}`` in canonical order."""
        return {blade_indices(m): self._terms[m] for m in sorted(self._terms, key=blade_sort_key)}

    def items(self):
        return self._terms.items()

    def coefficient(self, indices=()):
        return self._terms.get(blade_mask(indices, self.n), ZERO)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other):
        if isinstance(other, Multivector):
            if other.n != self.n:
                raise ValueError(f"dimension mismatch: Cl(0,{self.n}) vs Cl(0,{other.n})")
            return other
        return Multivector.scalar(self.n, rational(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, ZERO) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Multivector._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Multivector):
            try:
                c = rational(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Multivector._raw(self.n, {})
            return Multivector._raw(self.n, {m: v * c for m, v in self._terms.items()})
        other = self._coerce(other)
        out = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                sign, m = mul_masks(a, b)
                v = ca * cb
                out[m] = out.get(m, ZERO) + (v if sign > 0 else -v)
        return Multivector._raw(self.n, {m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        # scalars commute with everything
        return self * other

    def grade_part(self, g):
        return Multivector._raw(self.n, {m: c for m, c in self._terms.items() if blade_grade(m) == g})

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == ({0: rational(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m in sorted(self._terms, key=blade_sort_key):
            c = self._terms[m]
            body = str(abs(c)) if m == 0 else f"{abs(c)}*{format_blade(m)}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Multivector({self.n}, {str(self)!r})"


def mv_arith(op, a, b=None):
    """Dispatch ``add``, ``sub``, ``neg``, ``mul`` or ``scalar_mul``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "neg":
        return -a
    if op == "mul":
        if not isinstance(b, Multivector):
            raise TypeError("mul expects two multivectors; use scalar_mul for scalars")
        return a * b
    if op == "scalar_mul":
        return a * rational(b)
    raise ValueError(f"unknown multivector operation {op!r}")


def grade_part(a, g):
    return a.grade_part(g)
