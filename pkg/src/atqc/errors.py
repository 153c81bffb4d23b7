"""Exception hierarchy shared across the toolkit."""


class AtqcError(Exception):
    """Base class for all toolkit errors."""


class InputError(AtqcError, ValueError):
    """Malformed or out-of-domain user input (CLI exit code 2)."""


class ComplexError(AtqcError, ValueError):
    """A surface complex violates one of its structural invariants."""


class IntegrityError(AtqcError):
    """A derived quantity contradicts the complex itself (e.g. betti1 != 2g)."""


class DiscrepancyError(AtqcError):
    """Search and oracle disagree; a finding, never silenced (CLI exit 3)."""
