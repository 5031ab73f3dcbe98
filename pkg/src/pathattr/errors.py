"""Exception hierarchy.

The CLI maps each family onto an exit code, so library callers can rely on
the same grouping: malformed input, unresolved names, and size limits.
"""

from __future__ import annotations


class PathAttrError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PathAttrError, ValueError):
    """Malformed graph, path, hypergraph or document input."""


class GraphError(InputError):
    pass


class PathError(InputError):
    pass


class DocumentError(InputError):
    pass


class UnknownNameError(PathAttrError, KeyError):
    """A referenced edge, property, path set or attribute does not exist."""

    def __str__(self) -> str:
        # KeyError.__str__ wraps the message in quotes
        return str(self.args[0]) if self.args else ""


class LimitExceededError(PathAttrError):
    """An enumeration would exceed its configured size limit."""


class AttributeSpecError(PathAttrError, ValueError):
    """An attribute definition is invalid or conflicts with the registry."""


class DomainError(PathAttrError, ValueError):
    """A property's value domain does not suit the requested attribute."""
