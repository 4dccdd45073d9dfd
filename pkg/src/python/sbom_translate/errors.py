"""
Exception hierarchy for sbom-translate.

Every error raised on bad input derives from SbomTranslateError, which is a
ValueError so callers that only care about "bad data" can catch that.
"""


class SbomTranslateError(ValueError):
    """Base class for all input errors raised by this package."""


class MalformedPurl(SbomTranslateError):
    """Raised when a Package URL string cannot be parsed."""


class ConflictingEpoch(SbomTranslateError):
    """Raised when a pURL carries two different epochs (version prefix and qualifier)."""


class UnknownEcosystem(SbomTranslateError):
    """Raised when neither the pURL nor its sidecar data name a supported OS."""


class InvalidSpdxDocument(SbomTranslateError):
    """Raised when an SPDX document is structurally invalid."""


class MalformedJson(InvalidSpdxDocument):
    """Raised when an SPDX document is not valid JSON."""


class MissingRequiredField(InvalidSpdxDocument):
    """Raised when a required SPDX field is missing or a reference dangles."""


class MissingSourceInfo(SbomTranslateError):
    """Raised when a Trivy-style package has no usable sourceInfo field."""


class MalformedStanza(SbomTranslateError):
    """Raised for an invalid stanza in a dpkg status file."""


class MalformedRecord(SbomTranslateError):
    """Raised for an invalid record in an apk installed database."""


class UnparsableVersion(SbomTranslateError):
    """Raised when a Debian or Alpine version string cannot be parsed."""


class MalformedTrackerData(SbomTranslateError):
    """Raised when a security tracker snapshot has an unexpected shape."""


class NormalizationFailed(SbomTranslateError):
    """Raised when no package in an SBOM yields a usable identity."""
