"""Monogenics, Fischer decomposition and discrete harmonics.

The monogenic polynomials of degree d form a space of dimension
2^n [C(d+n-1, n-1) - C(d+n-2, n-1)] whatever the delta operator. A
harmonic polynomial f (Laplacian zero) splits as f1 + x' f0 with both
parts monogenic.
"""

from math import comb

from umbral import UmbralContext, fischer_decompose, harmonic_split, laplacian, monogenic_basis, parse_poly, print_poly

for delta in ("derivative", "forward", "central"):
    ctx = UmbralContext(3, delta)
    dims = [len(monogenic_basis(ctx, d)) for d in range(4)]
    print(f"{delta:>10}: dim M_d for d=0..3 -> {dims}")
print("formula       ->", [8 * (comb(d + 2, 2) - (comb(d + 1, 2) if d else 0)) for d in range(4)])

ctx = UmbralContext(2, "central", 1)
print("\nmonogenic basis of degree 1, central difference:")
for b in monogenic_basis(ctx, 1):
    print("  ", print_poly(b))

p = parse_poly("x1^2", 2)
print("\nFischer parts of x1^2 (derivative):")
for j, m in enumerate(fischer_decompose(UmbralContext(2), p)):
    print(f"  (x')^{j} * [{print_poly(m)}]")

f = parse_poly("x1^2 - x2^2", 2)
print("\nlaplacian(x1^2 - x2^2) == 0:", laplacian(ctx, f).is_zero())
f1, f0 = harmonic_split(ctx, f)
print("f1 =", print_poly(f1))
print("f0 =", print_poly(f0))
