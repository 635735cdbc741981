"""Tropical polytope of nearest ultrametrics.

Exact (rational) construction of the polytope of ultrametrics nearest to a
dissimilarity map in the sup norm, with extremality certificates, candidate
generation by node sliding, extreme-ray enumeration and one-node extensions.

All matrix entries are returned as :class:`fractions.Fraction`; inputs accept
ints, floats, strings like ``"3/4"`` and Fractions.
"""

from ._core import (
    check,
    counterexample,
    dataset,
    extend,
    extremes,
    is_ultrametric,
    nearest,
    newick,
    validate,
)

__all__ = [
    "check",
    "counterexample",
    "dataset",
    "extend",
    "extremes",
    "is_ultrametric",
    "nearest",
    "newick",
    "validate",
]
