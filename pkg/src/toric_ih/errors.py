"""Exception types shared across the library."""


class ToricError(Exception):
    """Base class for all library errors."""


class DimensionMismatchError(ToricError):
    """Vectors of unequal length were combined."""


class NonIntegralSpanError(ToricError):
    """An affine span contains no lattice point."""


class NotUnimodularError(ToricError):
    """An integer matrix with |det| != 1 was used as a lattice change of basis."""


class EmptyPolyhedronError(ToricError):
    """An inequality system has no solution."""


class NotPointedError(ToricError):
    """A polyhedron contains a line."""


class NotFullDimensionalError(ToricError):
    """A polytope is lower-dimensional than its ambient space."""


class UnboundedError(ToricError):
    """A counting or support query hit an unbounded direction."""


class UnsupportedShapeError(ToricError):
    """The stalk machinery needs a compact polytope or a cone with a vertex."""


class EpsilonUnstableError(ToricError):
    """The prime-cut stability protocol failed to converge."""


class PoincareDualityError(ToricError):
    """A class that must be palindromic is not."""


class InvariantViolation(ToricError):
    """An internal consistency check failed; indicates an implementation bug."""


class ParseError(ToricError):
    """Malformed input file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
