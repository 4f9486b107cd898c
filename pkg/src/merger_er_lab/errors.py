"""Semantic errors shared across the package.

Every error carries enough structure for a machine-readable report:
``code`` (stable identifier), ``path`` (offending input field, dotted), and
``message``.  The CLI and the HTTP service serialize them verbatim.
"""

from __future__ import annotations


class RegionError(Exception):
    """Base class for all domain errors."""

    code = "region_error"

    def __init__(self, message: str, *, path: str = "") -> None:
        super().__init__(message)
        self.message = message
        self.path = path

    def to_dict(self) -> dict:
        return {"code": self.code, "path": self.path, "message": self.message}


class InvalidProfile(RegionError):
    """A company profile field is non-positive or non-finite."""

    code = "invalid_profile"


class Inadmissible(RegionError):
    """A post-merger parameter violates the feasibility preconditions."""

    code = "inadmissible"


class NegativeSynergy(Inadmissible):
    """Combined value below the sum of the parts (mu_m < mu_a + mu_b)."""

    code = "negative_synergy"


class InvalidRiskReduction(Inadmissible):
    """Risk reduction v outside its valid range."""

    code = "invalid_risk_reduction"


class NotAnInterval(RegionError):
    """A diagram point below the axis has no interval preimage."""

    code = "not_an_interval"


class InvalidCase(RegionError):
    """Requested case has no locus here (empty label or unattainable range)."""

    code = "invalid_case"


class ParseError(RegionError):
    """Scenario bytes are not valid JSON or miss required structure."""

    code = "parse_error"

    def __init__(self, message: str, *, path: str = "", reason: str = "") -> None:
        super().__init__(message, path=path)
        self.reason = reason or message


class ValidationError(RegionError):
    """A scenario field is present but violates its constraint."""

    code = "validation_error"

    def __init__(self, message: str, *, path: str = "", constraint: str = "") -> None:
        super().__init__(message, path=path)
        self.constraint = constraint or message


class EncodingFailure(RegionError):
    """Output could not be rendered in the requested format."""

    code = "encoding_failure"
