"""Exception types raised across the package."""


class ConformalSystemsError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedAlgebra(ConformalSystemsError):
    """Raised for non-simply-laced labels or ranks below the minimum."""


class StructureTableError(ConformalSystemsError):
    """A bracket table failed an internal consistency check."""


class CacheCorrupted(StructureTableError):
    """A structure-constant cache file could not be validated."""


class NotInLevi(ConformalSystemsError):
    pass


class NotInVplus(ConformalSystemsError):
    pass


class NotInVminus(ConformalSystemsError):
    pass


class LetterNotInNbar(ConformalSystemsError):
    pass


class MalformedElement(ConformalSystemsError):
    pass


class DegenerateCharacterEquation(ConformalSystemsError):
    """The infinitesimal-character equation has no unique solution in s."""


class NotInvariant(ConformalSystemsError):
    """An operator span is not stable under the requested action."""
