"""Exception types shared across the package."""


class PolyadError(Exception):
    """Base class for all library errors."""


class LengthError(PolyadError):
    """Word length is not compatible with the arity (must be 1 mod n-1)."""


class BudgetExceeded(PolyadError):
    """An exhaustive check would exceed the configured evaluation budget."""


class NotAssociative(PolyadError):
    """Operation failed the associativity precondition.

    Carries the first violating tuple as `witness` when known.
    """

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotGroup(PolyadError):
    """Solvability failed; carries the first unsolvable equation."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NoSolution(PolyadError):
    """No carrier element solves the equation (corrupted input)."""


class NotCentral(PolyadError):
    """Derived construction requires a central element."""


class NotAutomorphism(PolyadError):
    pass


class FixedPointViolation(PolyadError):
    """Gluskin construction requires beta(d) = d."""


class TwistViolation(PolyadError):
    """Gluskin construction requires d*x = beta^(n-1)(x)*d."""


class NotNormal(PolyadError):
    pass


class NotCyclicQuotient(PolyadError):
    pass


class OrderMismatch(PolyadError):
    pass


class ArityMismatch(PolyadError):
    pass


class NotSplitting(PolyadError):
    """Splitting-automorphism condition failed; carries the witness element."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class UnknownName(PolyadError):
    pass


class NotSubgroup(PolyadError):
    pass


class BadM(PolyadError):
    """Window parameter m must satisfy (m-1) | (n-1)."""


class NotSemiInvariant(PolyadError):
    pass


class NotInvariant(PolyadError):
    pass


class NotIdempotentAnchor(PolyadError):
    pass


class NotSemiabelian(PolyadError):
    pass


class NoIdempotent(PolyadError):
    pass


class ArityTooSmall(PolyadError):
    pass


class SizeMismatch(PolyadError):
    pass


class SigmaNotIdempotentPower(PolyadError):
    """sigma**k must equal sigma for the requested arity k."""


class PGFError(PolyadError):
    """Malformed PGF document."""
