"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument is outside its documented range or inconsistent with others."""


class DomainError(ValueError):
    """A value violates a mathematical precondition (e.g. not in the stated subfield)."""


class ResourceError(RuntimeError):
    """A computation would exceed the configured desk-scale budget."""


class ConstructionError(RuntimeError):
    """An internal consistency check failed during a construction that should
    always succeed for valid parameters."""
