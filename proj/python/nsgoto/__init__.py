"""Goto numbers and Gorenstein classification of numerical semigroup rings."""

from ._core import (
    InvalidSpecError,
    NotAMemberError,
    NotNumericalError,
    RequiresProperSemigroupError,
    Semigroup,
    UnknownPropertyError,
    __version__,
    enumerate_semigroups,
    properties,
    verify,
)

__all__ = [
    "Semigroup",
    "enumerate_semigroups",
    "verify",
    "properties",
    "NotNumericalError",
    "NotAMemberError",
    "RequiresProperSemigroupError",
    "InvalidSpecError",
    "UnknownPropertyError",
    "__version__",
]
