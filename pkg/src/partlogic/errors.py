"""Exception types shared across the toolkit."""


class LogicError(Exception):
    """Base class for all toolkit errors."""


class StructureError(LogicError):
    """A structure is malformed: bad labels, non-total maps, broken invariants."""


class ParseError(LogicError):
    """Text input could not be parsed. Carries a 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class PastingError(StructureError):
    """Gluing blocks produced an inconsistent structure."""


class AxiomViolationError(LogicError):
    """An operation's input violates an axiom it depends on."""

    def __init__(self, axiom, message):
        super().__init__("%s: %s" % (axiom, message))
        self.axiom = axiom


class PrimenessError(LogicError):
    """An operation needed a prime logic. Carries an inseparable element pair."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class AlgebraicityError(LogicError):
    """A test space had to be algebraic but is not. Carries the witness triple."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SeparationError(LogicError):
    """Two-valued weights fail to separate outcomes. Carries an inseparable pair."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair
