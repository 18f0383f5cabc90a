"""Legendre elliptic curves over small finite fields.

Point counting, isogeny-class classification, supersingular parameter
tables, average-count identities and the characteristic-2 analogue,
all verified exhaustively at desk scale.
"""

from .curve import (
    INFINITY,
    Curve,
    Point,
    count_four_torsion,
    full_four_torsion_rational,
    is_isomorphic,
    is_legendre_isomorphic,
    isomorphism_classes,
    j_of_lambda,
    legendre,
    legendre_count_table,
    orbit,
    twist,
)
from .field import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapError,
    Fe,
    Field,
    field_of_order,
    is_nth_power,
    make_field,
    odd_prime_powers,
    quadratic_character,
    sqrt,
    trace2,
)

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "EnumerationCapError",
    "Curve",
    "Fe",
    "Field",
    "INFINITY",
    "Point",
    "count_four_torsion",
    "field_of_order",
    "full_four_torsion_rational",
    "is_isomorphic",
    "is_legendre_isomorphic",
    "is_nth_power",
    "isomorphism_classes",
    "j_of_lambda",
    "legendre",
    "legendre_count_table",
    "make_field",
    "odd_prime_powers",
    "orbit",
    "quadratic_character",
    "sqrt",
    "trace2",
    "twist",
]

__version__ = "0.1.0"
