"""Exception types shared across the package."""


class KindMismatch(TypeError):
    """Line and circle objects were mixed in one operation."""


class ModulusMismatch(ValueError):
    """Circle objects with different circumferences were combined."""


class UnboundGenerator(KeyError):
    """A word references a generator name with no bound map."""

    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unbound generator {self.name!r}"


class ChainViolation(ValueError):
    """A generator sequence fails one of the interval-chain axioms."""

    def __init__(self, axiom, message):
        super().__init__(f"{axiom}: {message}")
        self.axiom = axiom
        self.witness = message


class NonIntervalSupport(ChainViolation):
    """A line generator's support is not a single open interval."""

    def __init__(self, message):
        super().__init__("C2", message)


class NotATwoChain(ChainViolation):
    """An ordered pair of line maps is not a valid two-link chain."""

    def __init__(self, message):
        super().__init__("TWO_CHAIN", message)


class RingViolation(ValueError):
    """A generator sequence fails one of the arc-ring axioms."""

    def __init__(self, axiom, message):
        super().__init__(f"{axiom}: {message}")
        self.axiom = axiom
        self.witness = message


class NonArcSupport(RingViolation):
    """A circle generator's support is not a single open arc."""

    def __init__(self, message):
        super().__init__("R2", message)


class CannotUnroll(ValueError):
    """The selected generators have no common fixed point to cut at."""
