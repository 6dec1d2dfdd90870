"""Exception types shared across the package."""

from __future__ import annotations


class DoctrinaError(Exception):
    """Base class for all structured errors raised by this package."""


class DuplicateName(DoctrinaError):
    """An object or morphism name occurs more than once."""


class BadIdentity(DoctrinaError):
    """An identity assignment is missing, ill-typed, or not neutral."""


class MissingComposite(DoctrinaError):
    """A composable pair has no assigned composite."""


class IllTypedComposite(DoctrinaError):
    """A composite is assigned to a non-composable pair or has wrong endpoints."""


class NonAssociative(DoctrinaError):
    """A composable triple violates associativity; reports the triple."""


class InvalidFunctor(DoctrinaError):
    """A functor description does not preserve sources, targets, identities or composites."""


class NotAPoset(DoctrinaError):
    """A relation is not reflexive, transitive and antisymmetric."""


class NotMonotone(DoctrinaError):
    """A map between posets does not preserve the order."""


class InvalidPart(DoctrinaError):
    """A part mentions elements or objects outside its base."""


class NotClosed(DoctrinaError):
    """A part claimed closed is not down-closed / up-closed as required."""


class InvalidPresheaf(DoctrinaError):
    """Value sets or actions violate functoriality."""


class NotNatural(DoctrinaError):
    """A transformation's components fail some naturality square."""


class BaseMismatch(DoctrinaError):
    """Two arguments live over different bases."""


class UnknownObject(DoctrinaError):
    """A referenced object or element does not exist in the base."""


class NotADiscreteFibration(DoctrinaError):
    """The projection lacks unique lifts, so no presheaf presents it."""


class BudgetExceeded(DoctrinaError):
    """A brute-force search would exceed the configured enumeration budget."""


class InvalidDocument(DoctrinaError):
    """A JSON document does not match the expected file format."""
