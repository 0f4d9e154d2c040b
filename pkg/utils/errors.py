class WordRepError(Exception):
    """Base class for all toolkit errors."""
    pass

class ValidationError(WordRepError):
    """Raised when input validation fails."""
    pass

class GraphError(ValidationError):
    """Raised when a graph cannot be built or transformed."""
    pass

class UnknownVertexError(GraphError):
    """Raised when a vertex label is not part of the graph."""
    pass

class GraphFormatError(ValidationError):
    """Raised when a graph, orientation or certificate file is malformed."""
    pass

class WordError(ValidationError):
    """Base class for word-related errors."""
    pass

class StatementError(WordError):
    """Raised when a cyclic statement cannot be evaluated."""
    pass

class OrientationError(ValidationError):
    """Raised when an orientation does not match its base graph."""
    pass

class CyclicOrientationError(OrientationError):
    """Raised when an acyclic orientation is required."""
    pass

class ScaleGuardError(WordRepError):
    """Raised when a desk-scale guard is exceeded."""
    pass

class UsageError(WordRepError):
    """Raised when the command line is malformed."""
    pass

class CertificateError(WordRepError):
    """Raised when a certificate fails re-verification."""
    pass
