# -*- coding: utf-8 -*-
import attr as _attr


class InfoCloneException(Exception):
    """Base class used by all infoclone exceptions."""


@_attr.s(frozen=True, auto_exc=True, auto_attribs=True, str=False)
class NonFiniteValueError(ValueError, InfoCloneException):
    """A label, weight or parameter was NaN or infinite."""

    what: str
    value: str

    def __str__(self) -> str:
        return f"{self.what} must be finite: {self.value}"


class DomainError(ValueError, InfoCloneException):
    """A count or parameter lies outside of its permitted range."""


@_attr.s(frozen=True, auto_exc=True, auto_attribs=True, str=False)
class DimensionMismatchError(ValueError, InfoCloneException):
    """Two objects that must share a dimension do not."""

    what: str
    expected: int
    actual: int

    def __str__(self) -> str:
        return (f"dimension mismatch for {self.what}: "
                f"expected {self.expected}, got {self.actual}")


@_attr.s(frozen=True, auto_exc=True, auto_attribs=True, str=False)
class ModeIndexError(IndexError, InfoCloneException):
    """A mode index does not exist within a given Fock space."""

    mode: int
    n_modes: int

    def __str__(self) -> str:
        return f"mode {self.mode} out of range for {self.n_modes} modes"


@_attr.s(frozen=True, auto_exc=True, auto_attribs=True, str=False)
class ResourceLimitExceeded(MemoryError, InfoCloneException):
    """A requested Fock-space object would exceed a configured guard."""

    what: str
    dimension: int
    limit: int

    def __str__(self) -> str:
        return (f"{self.what} has dimension {self.dimension}, "
                f"which exceeds the limit of {self.limit}")


@_attr.s(frozen=True, auto_exc=True, auto_attribs=True, str=False)
class LabelParseError(ValueError, InfoCloneException):
    """A complex literal could not be parsed."""

    text: str

    def __str__(self) -> str:
        return f"could not parse complex label (expected a+bi): {self.text!r}"


class UsageError(InfoCloneException):
    """The command-line configuration is invalid."""
