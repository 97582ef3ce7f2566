"""Exception types shared across the package."""


class SievedJacobiError(Exception):
    """Base class for all package errors."""


class DomainError(SievedJacobiError, ValueError):
    """Evaluation requested outside the mathematical domain (e.g. z=0 with negative exponents)."""


class ValidityError(SievedJacobiError, ValueError):
    """Parameter set produces an invalid object (e.g. a Verblunsky parameter with |a| >= 1)."""


class SymmetryError(SievedJacobiError, ValueError):
    """An operation requiring a symmetric Laurent polynomial received a non-symmetric one."""


class PlanError(SievedJacobiError, ValueError):
    """A sample plan puts a point too close to a pole of the operator coefficients."""


class ConsistencyError(SievedJacobiError, RuntimeError):
    """Two construction routes that must agree failed to do so (signals an internal bug)."""


class CompositionError(SievedJacobiError, ValueError):
    """Operator composition would exceed the supported derivative order."""
