"""Exception hierarchy shared by all calculator modules."""


class NsdegError(Exception):
    """Base class for every domain error raised by this package."""


class EmptyGenerators(NsdegError):
    """A generator list was empty or contained a non-positive entry."""


class NonCoprime(NsdegError):
    """gcd of the generators is not 1; the value set has infinite genus."""


class NotMember(NsdegError):
    """An operation required an element of the semigroup and got a gap."""


class AmbientMismatch(NsdegError):
    """Two relative ideals over different ambient semigroups were combined."""


class NotContained(NsdegError):
    """length_between(I, J) was called with I not contained in J."""


class NotMPrimary(NsdegError):
    """The ideal is not a proper ideal of the semigroup ring."""


class IsDVR(NsdegError):
    """The m:m construction needs a ring that is not a discrete valuation ring."""


class NotThreeGenerated(NsdegError):
    """Herzog exponents require a minimally 3-generated semigroup."""


class SymmetricSemigroup(NsdegError):
    """Herzog exponents are not defined in the complete-intersection case."""


class GorensteinInput(NsdegError):
    """A formula whose hypothesis excludes Gorenstein rings got bideg = 0."""


class InternalInvariantViolation(NsdegError):
    """Two independent routes to the same value disagreed, or a theorem
    failed on concrete data.  Always a bug, never a math discovery."""


class BudgetExceeded(NsdegError):
    """Base class for configurable resource limits."""


class SieveCapExceeded(BudgetExceeded):
    """The membership sieve hit its scan cap before finding the conductor."""


class LimitExceeded(BudgetExceeded):
    """An enumeration produced more values than the caller's limit."""


class SearchBudgetExceeded(BudgetExceeded):
    """The rootset search exhausted its node budget."""
