"""Exception types shared across the package."""

from __future__ import annotations


class BadParameter(ValueError):
    """A precondition on user-supplied parameters was violated."""


class NotPrime(BadParameter):
    """A parameter that must be prime is not."""


class OddGenus(BadParameter):
    """A quantity defined only for even genus was requested for odd genus."""


class FieldTooLarge(ValueError):
    """A field order or search space exceeds the configured enumeration limit."""


class MixedFields(ValueError):
    """Arithmetic attempted between elements of distinct fields."""


class NotQuadraticExtension(ValueError):
    """Conjugation requested on a field of odd degree over its prime field."""


class DimensionMismatch(ValueError):
    """Vector or subspace dimensions do not match the ambient space."""


class NonIntegral(ValueError):
    """An exact rational that was required to be an integer is not one.

    Carries the offending reduced fraction in ``value``.
    """

    def __init__(self, value):
        self.value = value
        super().__init__(f"expected an integer, got {value}")


class IdentityViolation(ArithmeticError):
    """An exact identity between two independently computed values failed.

    Carries the list of failed checks in ``failures``; each entry exposes
    ``name``, ``lhs`` and ``rhs``.
    """

    def __init__(self, failures):
        self.failures = tuple(failures)
        detail = "; ".join(
            f"{c.name}: {c.lhs} != {c.rhs}" for c in self.failures
        )
        super().__init__(f"identity violation: {detail}")
