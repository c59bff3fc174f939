"""Exception types shared across the package."""


class NsgError(Exception):
    """Base class for all errors raised by this package."""


class InvalidModulus(NsgError):
    """Modulus outside the valid range (must be a positive integer)."""


class BothZero(NsgError):
    """gcd(0, 0) requested."""


class NotCoprime(NsgError):
    """An operation required two coprime integers and got gcd > 1."""


class Overflow(NsgError):
    """A value left the configured 64-bit signed integer window."""


class NotCoprimeOverall(NsgError):
    """The generators share a common factor, so they generate no numerical semigroup."""


class DegenerateGenerators(NsgError):
    """Duplicate generators, or a generator equal to 1 (use the one/two-generator path)."""


class NotMinimal(NsgError):
    """A formula that assumes a minimal generating triple was called on a redundant one."""


class NotPairwiseCoprime(NsgError):
    """A formula that assumes pairwise coprime generators was called without them."""


class PreconditionViolated(NsgError):
    """Caller broke a documented precondition."""


class IdentityViolation(NsgError):
    """An internally derived exact identity failed to hold; indicates a bug."""


class ConsistencyError(NsgError):
    """Two independent computation paths disagreed; indicates a bug."""
