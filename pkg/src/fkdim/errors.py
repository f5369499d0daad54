"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed textual input (edge lists, rationals, family strings)."""


class DomainError(ValueError):
    """Input is well formed but outside the domain where a quantity is defined."""


class DisconnectedGraphError(DomainError):
    pass


class GuardError(DomainError):
    """An exhaustive search was refused because the instance is too large."""


class LPStructureError(ValueError):
    """A linear program is malformed (bad index, negative bound, ...)."""


class FamilySpecError(ValueError):
    """A graph family description violates its parameter constraints."""
