"""Exact projective root locus of rational transfer functions."""

try:
    from ._pjrl import (  # noqa: F401
        NonCoprimeError,
        PlantParseError,
        closure_system,
        lift,
        parse,
        report,
        run,
    )
except ImportError:  # build-tree layout keeps _pjrl next to the package
    from _pjrl import (  # noqa: F401
        NonCoprimeError,
        PlantParseError,
        closure_system,
        lift,
        parse,
        report,
        run,
    )

__all__ = [
    "NonCoprimeError",
    "PlantParseError",
    "closure_system",
    "lift",
    "parse",
    "report",
    "run",
]
