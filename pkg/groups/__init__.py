from groups.word import AbVector, Word, exponent_sums, free_reduce, invert, multiply
from groups.ordering import OrderVerdict, Sign, Verdict
from groups.magnus import MagnusSeries, magnus_compare, magnus_expand, series_compare
from groups.reduced_magnus import (
    SquareFreePoly,
    reduced_compare,
    reduced_equal,
    reduced_expand,
)
from groups.automorphism import EndoTable, apply, compose, is_IA, verify_inverse_pair

__all__ = [
    "AbVector", "Word", "exponent_sums", "free_reduce", "invert", "multiply",
    "OrderVerdict", "Sign", "Verdict",
    "MagnusSeries", "magnus_compare", "magnus_expand", "series_compare",
    "SquareFreePoly", "reduced_compare", "reduced_equal", "reduced_expand",
    "EndoTable", "apply", "compose", "is_IA", "verify_inverse_pair",
]
