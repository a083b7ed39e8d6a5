"""Exact umbral Clifford analysis on polynomials with rational coefficients."""

from .clifford import Multivector, blade_mul
from .dirac_almansi import (
    AlmansiResult,
    almansi_decompose,
    almansi_reconstruct,
    dirac,
    fischer_decompose,
    harmonic_split,
    i_s_prime,
    laplacian,
    monogenic_basis,
    q_k_prime,
    vector_var,
)
from .errors import PreconditionError
from .operator_calculus import (
    CoordinateOperator,
    DeltaSeries,
    PowerSeries,
    apply_series,
    catalog_series,
    series_compose,
    series_mult_inverse,
    series_pincherle,
    series_reversion,
)
from .oscillator import (
    GaugeContext,
    dirac_pm,
    hamiltonian_direct,
    hamiltonian_gauge,
    hermite_basic,
    oscillator_almansi,
    oscillator_reconstruct,
    oscillator_resolvent,
    verify_relations,
)
from .poly import CliffPoly, mul_var, partial, random_poly
from .rational import rational
from .textform import PolyParseError, parse_poly, print_poly
from .umbral_core import (
    UmbralContext,
    apply_O,
    apply_raise,
    basic_polynomial,
    euler_s,
    generating_check,
    sheffer_inverse,
    sheffer_map,
)

__all__ = [
    "AlmansiResult",
    "CliffPoly",
    "CoordinateOperator",
    "DeltaSeries",
    "GaugeContext",
    "Multivector",
    "PolyParseError",
    "PowerSeries",
    "PreconditionError",
    "UmbralContext",
    "almansi_decompose",
    "almansi_reconstruct",
    "apply_O",
    "apply_raise",
    "apply_series",
    "basic_polynomial",
    "blade_mul",
    "catalog_series",
    "dirac",
    "dirac_pm",
    "euler_s",
    "fischer_decompose",
    "generating_check",
    "hamiltonian_direct",
    "hamiltonian_gauge",
    "harmonic_split",
    "hermite_basic",
    "i_s_prime",
    "laplacian",
    "monogenic_basis",
    "mul_var",
    "oscillator_almansi",
    "oscillator_reconstruct",
    "oscillator_resolvent",
    "parse_poly",
    "partial",
    "print_poly",
    "q_k_prime",
    "random_poly",
    "rational",
    "series_compose",
    "series_mult_inverse",
    "series_pincherle",
    "series_reversion",
    "sheffer_inverse",
    "sheffer_map",
    "vector_var",
    "verify_relations",
]
