class ConicFloorsError(Exception):
    """Base exception for all conic-floors errors"""


class DomainError(ConicFloorsError):
    """A query lies outside the domain where the requested formula applies"""


class NonEnumerativeClassError(DomainError):
    """Raised for multiples l*E_i (l >= 2) of an exceptional class"""


class TypeMismatchError(DomainError):
    """Raised when the contact orders do not add up to d.E"""


class UnsupportedScopeError(DomainError):
    """Raised for positive genus real counts and for X8 real counts with s > 0"""


class ParseError(ConicFloorsError):
    """Malformed class, sequence or structure literal"""


class MissingProviderKeysError(ConicFloorsError):
    """The provider table lacks invariants needed by an X8 evaluation"""

    def __init__(self, keys):
        self.keys = sorted(set(keys))
        super().__init__(
            f"{len(self.keys)} provider key(s) missing: " + "; ".join(self.keys)
        )


class WitnessMismatchError(ConicFloorsError):
    """Two witnesses of the same reality gave different real data"""


class CacheError(ConicFloorsError):
    """The persistent invariant cache could not be read or written"""
