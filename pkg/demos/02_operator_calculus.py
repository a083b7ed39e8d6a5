"""Formal power series behind the delta operators.

A delta operator is a series O(t) = a_1 t + a_2 t^2 + ... in d/dx. Its
compositional inverse gives the generating function of the basic sequence
and its formal derivative (the Pincherle derivative) gives the raising
operator x' = x (O')^{-1}.
"""

from umbral import catalog_series, series_mult_inverse, series_pincherle, series_reversion
from umbral.operator_calculus import series_from_text


def show(series, order):
    return "[" + ", ".join(str(c) for c in series.coeffs(order)) + "]"


central = catalog_series("central", 1)
print("central  O(t)          =", show(central, 7))
print("reversion O^<-1>(t)    =", show(series_reversion(central), 7))
print("(O')^{-1} = sech(t)    =", show(series_mult_inverse(series_pincherle(central)), 7))

forward = catalog_series("forward", 1)
print("\nforward  O(t)          =", show(forward, 6))
print("reversion = log(1+t)   =", show(series_reversion(forward), 6))

# a user-supplied delta series, t + t^3/6
custom = series_from_text("[0, 1, 0, 1/6]")
print("\ncustom reversion       =", show(series_reversion(custom), 7))
