"""Package manager databases and ground-truth SBOM generation."""

from sbom_translate.osdb.apk import parse_apk_installed
from sbom_translate.osdb.dpkg import parse_dpkg_status
from sbom_translate.osdb.reference import (
    canonical_from_os_packages,
    detect_db_format,
    generate_reference_sbom,
    load_os_db,
    parse_os_release,
    parse_package_db,
)

__all__ = [
    "canonical_from_os_packages",
    "detect_db_format",
    "generate_reference_sbom",
    "load_os_db",
    "parse_apk_installed",
    "parse_dpkg_status",
    "parse_os_release",
    "parse_package_db",
]
