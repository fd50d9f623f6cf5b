"""Exception types shared across the package."""


class DatumError(Exception):
    """Base class for everything raised on bad or unusable input data."""


class SchemaError(DatumError):
    """A document could not be parsed or bound (malformed JSON, unknown
    names, duplicate colors, dependent spherical roots, ...)."""


class InsufficientDataError(DatumError):
    """An optional field (spherical roots, chi, presentation, lattice)
    is required by the requested computation but absent."""


class InconsistencyError(DatumError):
    """The datum contradicts itself (conflicting type sources, unequal
    type-b pairings, impossible sl2 image, non-normalizing witness)."""


class UnresolvedTypeError(InsufficientDataError):
    """A torus-like sl2 image could not be pinned to a or 2a with the
    available witness / chi / spherical-root data."""
