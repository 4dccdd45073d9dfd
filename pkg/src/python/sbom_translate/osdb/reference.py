"""
Ground-truth SBOM generation from an OS package database.
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from sbom_translate.dialect.emit import emit
from sbom_translate.errors import SbomTranslateError
from sbom_translate.models.distro import DistroInfo
from sbom_translate.models.enums import Dialect, Ecosystem
from sbom_translate.models.package import CanonicalPackage, CanonicalSbom, OsPackage
from sbom_translate.osdb.apk import parse_apk_installed
from sbom_translate.osdb.dpkg import parse_dpkg_status
from sbom_translate.spdx.document import SpdxDocument

logger = logging.getLogger(__name__)


def parse_os_release(text: str) -> Optional[DistroInfo]:
    """
    Parse /etc/os-release into a DistroInfo.

    Returns:
        DistroInfo, or None if the OS is missing or unsupported
    """
    return DistroInfo.from_os_release(text)


def detect_db_format(text: str) -> Ecosystem:
    """
    Tell a dpkg status file from an apk installed database.

    Raises:
        SbomTranslateError: If the text looks like neither
    """
    for line in text.splitlines():
        if not line.strip():
            continue
        if len(line) > 1 and line[1] == ":":
            return Ecosystem.ALPINE
        if re.match(r"^[A-Za-z][A-Za-z0-9_-]*:", line):
            return Ecosystem.DEBIAN
        break
    raise SbomTranslateError("Input is neither a dpkg status file nor an apk installed database")


def parse_package_db(text: str, ecosystem: Optional[Ecosystem] = None) -> Tuple[List[OsPackage], Ecosystem]:
    """
    Parse a dpkg or apk database, detecting the format if not given.

    Returns:
        Tuple of (installed packages, ecosystem)
    """
    eco = ecosystem or detect_db_format(text)
    if eco is Ecosystem.ALPINE:
        return parse_apk_installed(text), eco
    return parse_dpkg_status(text), eco


def load_os_db(path: Path) -> Dict[str, OsPackage]:
    """
    Read a package database file into a binary name -> package mapping.

    Used to repair and check source package data during normalization.
    """
    packages, _ = parse_package_db(path.read_text(encoding="utf-8"))
    return {p.name: p for p in packages}


def canonical_from_os_packages(
    pkgs: List[OsPackage], distro: DistroInfo, name: str = "sbom"
) -> CanonicalSbom:
    """Turn installed packages into a canonical SBOM of the given release."""
    packages = tuple(CanonicalPackage.from_os_package(p, distro.os_name) for p in pkgs)
    return CanonicalSbom(distro=distro, packages=packages, origin=Dialect.REFERENCE, name=name)


def generate_reference_sbom(
    pkgs: List[OsPackage], distro: DistroInfo, name: str = "sbom"
) -> SpdxDocument:
    """
    Generate a specification-compliant SBOM from installed packages.

    One SPDX package per installed binary plus the OS-marker package; no
    entries are invented for source packages. Each package has a compliant
    pURL ("pkg:deb/debian/passwd@1:4.13+dfsg1-1?arch=amd64&distro=bookworm")
    and "built package from:" sourceInfo.

    Args:
        pkgs: Installed packages, as from parse_dpkg_status / parse_apk_installed
        distro: Release of the image
        name: Document name

    Returns:
        SpdxDocument

    Raises:
        SbomTranslateError: If pkgs is empty
    """
    if not pkgs:
        raise SbomTranslateError("No installed packages to describe")
    logger.info("Generating reference SBOM for %d packages on %s %s",
                len(pkgs), distro.os_name.value, distro.release_key)
    return emit(canonical_from_os_packages(pkgs, distro, name), Dialect.REFERENCE)
