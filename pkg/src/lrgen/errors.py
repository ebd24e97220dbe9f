"""Exception hierarchy shared by the whole package."""


class LRGenError(ValueError):
    """Base class for all input and validation errors raised by lrgen."""


class ParseError(LRGenError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (at position {position} in {text!r})"
        super().__init__(message)


class InvalidPartition(LRGenError):
    pass


class NotContained(LRGenError):
    """The inner shape gamma is not contained in the outer shape beta."""


class NotHorizontalStrip(LRGenError):
    """Some row has beta_i > gamma_i + 1."""


class InvalidPicket(LRGenError):
    pass


class IncomparableInvariants(LRGenError):
    """Hom-order comparison of objects with different (a, b)."""


class NotInS1(LRGenError):
    """An argument has a P1^0 summand where none is allowed."""


class NotNilpotent(LRGenError):
    pass


class InvalidField(LRGenError):
    pass


class SearchSpaceTooLarge(LRGenError):
    """An exhaustive search would exceed a configured guard."""


class NonUniqueMinimum(RuntimeError):
    """Two non-isomorphic extensions share the minimal endomorphism dimension.

    This is never expected and indicates a bug in the extension search.
    """
