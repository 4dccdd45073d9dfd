"""Enumerations shared across sbom-translate modules."""

from enum import Enum, IntEnum


class Dialect(Enum):
    """
    The tool whose conventions shaped an SPDX document.

    Each producer writes pURLs and SPDX fields its own way:
    - AMAZON: `pkg:dpkg` type, uppercase arch, epoch/upstream qualifiers
    - ANCHORE: Syft output, `distro=debian-N`, upstream qualifier
    - DOCKER: Docker Scout, `os_name`/`os_version`/`os_distro` qualifiers
    - GOOGLE: Artifact Analysis, `%3A`-encoded epoch separator
    - MICROSOFT: sbom-tool, bare pURL without arch or distro
    - TRIVY: epoch qualifier, `debian-N.M` distro, `sourceInfo` identity
    - REFERENCE: pURL-specification compliant output of this tool
    - UNKNOWN: nothing matched
    """
    AMAZON = "amazon"
    ANCHORE = "anchore"
    DOCKER = "docker"
    GOOGLE = "google"
    MICROSOFT = "microsoft"
    TRIVY = "trivy"
    REFERENCE = "reference"
    UNKNOWN = "unknown"

    @classmethod
    def from_string(cls, value: str) -> "Dialect":
        """
        Get a Dialect from its name, accepting a few common aliases.

        Args:
            value: Dialect name such as "trivy", "Scout" or "gcloud"

        Returns:
            The matching Dialect

        Raises:
            ValueError: If the name is not recognized
        """
        key = value.strip().lower()
        aliases = {
            "syft": cls.ANCHORE,
            "grype": cls.ANCHORE,
            "scout": cls.DOCKER,
            "gcloud": cls.GOOGLE,
            "sbom-tool": cls.MICROSOFT,
            "inspector": cls.AMAZON,
        }
        if key in aliases:
            return aliases[key]
        for dialect in cls:
            if dialect.value == key:
                return dialect
        raise ValueError(f"Unknown dialect: {value!r}")

    @classmethod
    def targets(cls) -> tuple:
        """Dialects an SBOM can be emitted for."""
        return tuple(d for d in cls if d is not cls.UNKNOWN)


class Ecosystem(Enum):
    """OS package ecosystems with ecosystem-specific pURL rules."""
    DEBIAN = "debian"
    ALPINE = "alpine"

    @property
    def purl_type(self) -> str:
        """The pURL type registered for this ecosystem."""
        return "deb" if self is Ecosystem.DEBIAN else "apk"

    @property
    def namespace(self) -> str:
        """The pURL namespace used for the distribution's own packages."""
        return self.value

    @classmethod
    def from_string(cls, value: str) -> "Ecosystem":
        """Get an Ecosystem from "debian"/"alpine" (case-insensitive)."""
        key = value.strip().lower()
        for eco in cls:
            if eco.value == key:
                return eco
        raise ValueError(f"Unknown ecosystem: {value!r}")


class IssueCategory(Enum):
    """
    Categories of SBOM compliance problems.

    - INVALID_FORMAT: the pURL breaks the pURL specification (type, encoding, qualifiers)
    - INCOMPLETE_DATA: information needed to identify the package is missing
    - INCORRECT_INFORMATION: a field is present but holds a wrong value
    - FORMAT_RELIANCE: a consumer depends on non-pURL or optional SPDX fields
    """
    INVALID_FORMAT = "invalid-format"
    INCOMPLETE_DATA = "incomplete-data"
    INCORRECT_INFORMATION = "incorrect-information"
    FORMAT_RELIANCE = "format-reliance"


class CveStatus(Enum):
    """Status of a CVE for one source package in one release."""
    OPEN = "open"
    RESOLVED = "resolved"
    UNIMPORTANT = "unimportant"
    NOT_AFFECTED = "not_affected"


class MatchVia(Enum):
    """How a finding was attached to a package."""
    SOURCE = "source"
    BINARY = "binary"


class DedupeMode(Enum):
    """
    How CVEs of a source package are reported.

    - PER_BINARY: every binary built from the source gets the source's CVEs
    - PER_SOURCE: each CVE is reported once per source package
    """
    PER_BINARY = "per-binary"
    PER_SOURCE = "per-source"


class OutputFormat(Enum):
    """Rendering formats for reports and metrics."""
    JSON = "json"
    TABLE = "table"
    CSV = "csv"

    @classmethod
    def from_string(cls, value: str) -> "OutputFormat":
        """Get an OutputFormat from its name (case-insensitive)."""
        key = value.strip().lower()
        for fmt in cls:
            if fmt.value == key:
                return fmt
        raise ValueError(f"Unknown output format: {value!r}")


class PackagePurpose(Enum):
    """Values of the SPDX 2.3 `primaryPackagePurpose` field used here."""
    APPLICATION = "APPLICATION"
    LIBRARY = "LIBRARY"
    OPERATING_SYSTEM = "OPERATING-SYSTEM"
    SOURCE = "SOURCE"
    OTHER = "OTHER"


class Ordering(IntEnum):
    """Result of a version comparison."""
    LT = -1
    EQ = 0
    GT = 1

    @classmethod
    def of(cls, value: int) -> "Ordering":
        """Map any integer to LT/EQ/GT by its sign."""
        if value < 0:
            return cls.LT
        if value > 0:
            return cls.GT
        return cls.EQ
