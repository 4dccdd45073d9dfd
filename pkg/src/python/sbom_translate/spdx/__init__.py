"""SPDX 2.x JSON reading, writing and consumer-specific views."""

from sbom_translate.spdx.compliance import format_reliance_issues, purl_issues
from sbom_translate.spdx.document import (
    DOCUMENT_ID,
    ExternalRef,
    SpdxDocument,
    SpdxFile,
    SpdxPackage,
    SpdxRelationship,
    parse_spdx,
    purl_packages,
    serialize_spdx,
)
from sbom_translate.spdx.identity import IdentityFields, package_identifier_view
from sbom_translate.spdx.os_marker import (
    OS_PACKAGE_CLASS,
    build_os_marker,
    find_os_marker,
    is_os_marker,
    marker_distro,
)

__all__ = [
    "DOCUMENT_ID",
    "ExternalRef",
    "IdentityFields",
    "OS_PACKAGE_CLASS",
    "SpdxDocument",
    "SpdxFile",
    "SpdxPackage",
    "SpdxRelationship",
    "build_os_marker",
    "find_os_marker",
    "format_reliance_issues",
    "is_os_marker",
    "marker_distro",
    "package_identifier_view",
    "parse_spdx",
    "purl_issues",
    "purl_packages",
    "serialize_spdx",
]
