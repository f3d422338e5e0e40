"""Exception hierarchy shared by every catmod module.

All exceptions raised on malformed or mathematically inadmissible input
derive from :class:`CatmodError`, so callers can catch one type at the
boundary.  Validators normally *report* failures instead of raising; the
exceptions below are reserved for inputs that make an operation
undefined (missing table cells, elements outside a carrier, lifts that
do not exist, and so on).
"""

from __future__ import annotations


class CatmodError(Exception):
    """Base class for all catmod errors."""


class MalformedTable(CatmodError):
    """A carrier, operation table or relation is structurally broken."""


class NotAGroup(CatmodError):
    """Input expected to be a plain finite group fails the group axioms."""


class NotAbelian(CatmodError):
    """Input expected to be abelian has a non-commuting pair."""


class NotAGroupoid(CatmodError):
    """An arrow of a category has no two-sided inverse."""


class InvalidAction(CatmodError):
    """An action table violates one of the action axioms."""


class ElementOutsideParent(CatmodError):
    """A subset member or map value lies outside the carrier it must live in."""


class SourceTargetMismatch(CatmodError):
    """Morphisms were combined whose endpoints do not agree."""


class ChoiceOutsideFiber(CatmodError):
    """A choice table for a lift leaves the fiber it must stay in."""


class NotPerfectOrNormal(CatmodError):
    """A subset expected to be a perfect or normal c-subgroup is not."""


class NoLift(CatmodError):
    """No element satisfies the lifting condition."""


class NonUniqueLift(CatmodError):
    """More than one element satisfies a lifting condition that demands uniqueness."""


class NotCssc(CatmodError):
    """A crossed module expected to be connected, strict and special is not."""


class NotComposable(CatmodError):
    """Two arrows were composed whose endpoints do not match."""


class NotSpecialPair(CatmodError):
    """A pair of elements is not in the special part of a congruence."""


class NotSpecialLeg(CatmodError):
    """An arrow candidate fails the special-pair constraint on its legs."""


class TooManyArrows(CatmodError):
    """A construction would enumerate more arrows than the configured cap."""


class ParseError(CatmodError):
    """A structure document does not match the expected shape."""


class VersionMismatch(ParseError):
    """A structure document declares an unsupported format version."""
