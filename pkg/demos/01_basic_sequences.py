"""Basic polynomial sequences of the catalog delta operators.

Each delta operator O has a basic sequence v_m with O v_m = m v_{m-1}.
For the forward difference with step h this is the falling factorial
x(x - h)...(x - (m-1)h); for the central difference it is x^3 - h^2 x at
degree three. The symmetric variant shifts the roots by h/2.
"""

from umbral import UmbralContext, basic_polynomial, print_poly, rational
from umbral.umbral_core import apply_O

h = rational(1, 2)
for delta in ("derivative", "forward", "backward", "central"):
    for variant in ("plain", "symmetric"):
        ctx = UmbralContext(1, delta, h, variant)
        polys = [print_poly(basic_polynomial(ctx, (m,))) for m in range(4)]
        print(f"{delta:>10} {variant:<9} " + " | ".join(polys))

# the lowering property holds exactly
ctx = UmbralContext(2, "forward", h)
v = basic_polynomial(ctx, (3, 2))
print("\nV_(3,2) =", print_poly(v))
print("O_1 V_(3,2) == 3 V_(2,2):", apply_O(ctx, 1, v) == basic_polynomial(ctx, (2, 2)).scale(3))
