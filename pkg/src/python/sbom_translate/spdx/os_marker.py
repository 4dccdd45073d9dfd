"""
The operating-system package some consumers need to scan an SBOM.

Trivy only looks up OS packages when the document contains a package with
attributionTexts ["Class: os-pkgs", "Type: <os>"] and purpose
OPERATING-SYSTEM, named after the OS and versioned with its release.
"""

from typing import Optional

from sbom_translate.models.distro import DistroInfo
from sbom_translate.models.enums import PackagePurpose
from sbom_translate.spdx.document import SpdxDocument, SpdxPackage

OS_PACKAGE_CLASS = "Class: os-pkgs"


def is_os_marker(pkg: SpdxPackage) -> bool:
    """Check whether a package describes the operating system itself."""
    if OS_PACKAGE_CLASS in (pkg.attribution_texts or ()):
        return True
    return pkg.primary_package_purpose == PackagePurpose.OPERATING_SYSTEM.value


def find_os_marker(doc: SpdxDocument) -> Optional[SpdxPackage]:
    """First OS-marker package of a document, if any."""
    for pkg in doc.packages:
        if is_os_marker(pkg):
            return pkg
    return None


def marker_distro(pkg: SpdxPackage) -> Optional[DistroInfo]:
    """
    Read the release from an OS-marker package.

    Uses the package name ("debian") or the "Type: <os>" attribution text for
    the OS and versionInfo ("12.11", "3.19.1", "bookworm") for the release.
    """
    os_name = pkg.name or ""
    for text in pkg.attribution_texts or ():
        if text.startswith("Type:"):
            os_name = text.split(":", 1)[1].strip()
    version = pkg.version_info or ""
    if not version:
        return None
    if version.isalpha():
        return DistroInfo.from_parts(os_name, codename=version)
    return DistroInfo.from_parts(os_name, version=version)


def build_os_marker(spdx_id: str, distro: DistroInfo, release: Optional[str] = None) -> SpdxPackage:
    """
    Build an OS-marker package for a release.

    Args:
        spdx_id: Identifier for the package
        distro: The release
        release: versionInfo to write; defaults to the release's version id
    """
    os_name = distro.os_name.value
    return SpdxPackage(
        spdx_id=spdx_id,
        name=os_name,
        version_info=release or distro.version_id,
        attribution_texts=(OS_PACKAGE_CLASS, f"Type: {os_name}"),
        primary_package_purpose=PackagePurpose.OPERATING_SYSTEM.value,
        extras={
            "downloadLocation": "NONE",
            "filesAnalyzed": False,
            "copyrightText": "NOASSERTION",
            "licenseConcluded": "NOASSERTION",
            "licenseDeclared": "NOASSERTION",
        },
    )

