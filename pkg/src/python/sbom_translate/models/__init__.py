"""Data models shared by the sbom-translate modules."""

from sbom_translate.models.distro import DEBIAN_CODENAMES, DistroInfo
from sbom_translate.models.enums import (
    CveStatus,
    DedupeMode,
    Dialect,
    Ecosystem,
    IssueCategory,
    MatchVia,
    Ordering,
    OutputFormat,
    PackagePurpose,
)
from sbom_translate.models.issues import ComplianceIssue, TranslationWarning
from sbom_translate.models.package import (
    CanonicalPackage,
    CanonicalSbom,
    OsPackage,
    SpdxPackageExtras,
)

__all__ = [
    "CanonicalPackage",
    "CanonicalSbom",
    "ComplianceIssue",
    "CveStatus",
    "DEBIAN_CODENAMES",
    "DedupeMode",
    "Dialect",
    "DistroInfo",
    "Ecosystem",
    "IssueCategory",
    "MatchVia",
    "Ordering",
    "OsPackage",
    "OutputFormat",
    "PackagePurpose",
    "SpdxPackageExtras",
    "TranslationWarning",
]
