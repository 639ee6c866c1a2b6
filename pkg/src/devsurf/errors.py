"""Error types shared across the analyzers."""

from __future__ import annotations


class DevsurfError(Exception):
    """Base class for analysis failures."""


class DegenerateInputError(DevsurfError):
    """The input does not describe a genuine surface (for example a map
    whose image is a curve or a point)."""


class UnsupportedCurveError(DevsurfError):
    """The plane curve falls outside the supported parametrization
    families (line, conic with a rational point, curve with a rational
    (d-1)-fold point, quartic with three double points)."""


class PointSearchExhaustedError(DevsurfError):
    """A rational point probably exists but was not found within the
    configured search budget.  Distinct from provable non-rationality."""


class NotRationalError(DevsurfError):
    """No rational parametrization over the rationals exists (for example
    a conic with no real point)."""
