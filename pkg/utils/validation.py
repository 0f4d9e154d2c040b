import re
from typing import Optional
import logging
from .errors import ValidationError, GraphError, ScaleGuardError

logger = logging.getLogger(__name__)

class InputValidator:
    # Common patterns for validation
    PATTERNS = {
        "label": r"^[^\s]+$",
        "statement_kind": r"^(exists|forall|E|A)$",
    }

    # Prime marks accepted on input, normalised to ASCII
    PRIME_MARKS = ("′", "’", "´")

    @staticmethod
    def validate_pattern(text: str, pattern_name: str) -> bool:
        """Validate text against a named pattern."""
        if pattern_name not in InputValidator.PATTERNS:
            raise ValidationError(f"Unknown pattern: {pattern_name}")
        return bool(re.match(InputValidator.PATTERNS[pattern_name], text))

    @staticmethod
    def canonical_label(label) -> str:
        """Return the canonical form of a vertex label."""
        if not isinstance(label, (str, int)):
            raise GraphError(f"Vertex label must be a string, got {type(label).__name__}")
        text = str(label)
        for mark in InputValidator.PRIME_MARKS:
            text = text.replace(mark, "'")
        if not text:
            raise GraphError("Vertex label must be non-empty")
        if not InputValidator.validate_pattern(text, "label"):
            raise GraphError(f"Vertex label {text!r} contains whitespace")
        return text

    @staticmethod
    def validate_range(name: str, value: int, minimum: int, maximum: Optional[int] = None) -> int:
        """Validate an integer parameter against inclusive bounds."""
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValidationError(f"{name} must be an integer, got {value!r}")
        if value < minimum:
            raise ValidationError(f"{name}={value} is below minimum {minimum}")
        if maximum is not None and value > maximum:
            raise ValidationError(f"{name}={value} exceeds maximum {maximum}")
        return value

    @staticmethod
    def sanitize_input(text: str) -> str:
        """Sanitize input text."""
        # Remove null bytes
        text = text.replace('\0', '')
        # Remove control characters except newlines and tabs
        text = ''.join(char for char in text if char == '\n' or char == '\t' or (ord(char) >= 32 and ord(char) != 127))
        return text

def validate_label(label) -> str:
    """Validate and canonicalise a vertex label."""
    return InputValidator.canonical_label(label)

def check_scale(what: str, value: int, limit: int, override: Optional[bool] = None) -> None:
    """
    Enforce a desk-scale guard.

    Args:
        what: Human readable name of the guarded quantity
        value: Actual size of the input
        limit: Largest accepted size
        override: Lift the guard; None reads WORDREP_GUARD_OVERRIDE

    Raises:
        ScaleGuardError: value exceeds limit and the guard is not lifted
    """
    if value <= limit:
        return
    if override is None:
        from .config import guard_override_enabled
        override = guard_override_enabled()
    if override:
        logger.warning(f"Scale guard lifted: {what}={value} exceeds {limit}; this may be very slow")
        return
    logger.error(f"Scale guard exceeded: {what}={value} > {limit}")
    raise ScaleGuardError(f"{what}={value} exceeds the guard of {limit} (set WORDREP_GUARD_OVERRIDE=1 to lift)")
