"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes (input 2, parameter 3,
domain 4, size 5); library callers catch them like any other exception.
"""


class MapperPathsError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MapperPathsError):
    """Malformed or inconsistent input data (files, graphs, clouds)."""


class ParameterError(MapperPathsError):
    """A parameter value outside its documented range."""


class DomainError(MapperPathsError):
    """Operation applied to an input outside its domain (e.g. a cyclic
    graph passed to a DAG-only solver)."""


class SizeError(MapperPathsError):
    """Instance too large for an enumeration-based solver's guard."""
