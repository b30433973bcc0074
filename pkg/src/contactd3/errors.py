class ContactD3Error(Exception):
    """Base class for errors raised by contactd3."""


class DomainError(ContactD3Error, ValueError):
    """Argument outside the domain of an operation."""


class UnsupportedCoefficient(ContactD3Error, ValueError):
    """Contact surgery coefficient that the reduction does not handle."""


class NonTorsion(ContactD3Error, ValueError):
    """The first Chern class is not torsion on the boundary."""


class PreconditionError(ContactD3Error, ValueError):
    """A Kirby move was requested on a form that does not admit it."""


class ReductionIncomplete(ContactD3Error):
    """No further move applies; carries the partial form and its script."""

    def __init__(self, message, form, script):
        super().__init__(message)
        self.form = form
        self.script = script


class DiagramFormatError(ContactD3Error, ValueError):
    """Malformed diagram or form document."""
