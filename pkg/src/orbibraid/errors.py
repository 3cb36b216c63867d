"""Exception hierarchy shared by all subpackages."""


class OrbibraidError(Exception):
    """Base class for all errors raised by this package."""


class MalformedWordError(OrbibraidError):
    """A braid word refers to a generator that does not exist at this strand count."""


class ArityError(OrbibraidError):
    """Two operands live on different strand counts / arities."""


class ParseError(OrbibraidError):
    """Syntax error in a DSL text, with position information."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class TypingError(OrbibraidError):
    """An expression is not well typed; the message names the offending subterm."""


class FlavorError(OrbibraidError):
    """A diagram mentions structure its declared flavor does not have."""


class GeometryError(OrbibraidError):
    """An interval configuration is not a valid equivariant embedding."""


class DimensionError(OrbibraidError):
    """Matrix dimensions do not match the operation."""


class SingularMatrixError(OrbibraidError):
    """A matrix required to be invertible has zero determinant."""


class RelationError(OrbibraidError):
    """Candidate representation data violates a defining relation."""

    def __init__(self, relation: str):
        super().__init__(f"relation violated: {relation}")
        self.relation = relation


class UnsupportedGeneratorError(OrbibraidError):
    """A morphism uses a generator the matrix semantics cannot interpret."""
