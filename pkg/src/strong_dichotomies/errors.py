"""Exception types shared across the package."""


class ModulusError(ValueError):
    """Invalid modulus, or operands living over different moduli."""


class NotAQuasipolarity(ValueError):
    """The given map is not an involutive derangement."""


class NotInGroup(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured size cap."""


class VerificationFailure(AssertionError):
    """A paper formula disagreed with its brute-force oracle."""

    def __init__(self, prop, witness):
        super().__init__(f"{prop} violated at {witness!r}")
        self.prop = prop
        self.witness = witness
