"""
sbom-translate - OS-package SBOM translation and CVE matching.

Scanners and SBOM generators each shape package URLs and SPDX fields their
own way, so an SBOM written by one tool often misses vulnerabilities when
scanned by another. This package reads any of those dialects into one
canonical form, writes it back out for any consumer, and matches it against
Debian and Alpine security trackers.

Core Concepts:
- Dialect: the producing tool's conventions (Trivy, Syft, Docker Scout, ...)
- CanonicalSbom: tool-independent packages with source package identity
- CveDatabase: tracker snapshot keyed by (os, release, source package)

Usage:
    from sbom_translate import Dialect, parse_spdx, translate

    doc = parse_spdx(open("trivy.spdx.json").read())
    docker_doc, warnings = translate(doc, Dialect.DOCKER)
    for w in warnings:
        print(w.code, w.message)
"""

from sbom_translate.__version__ import __version__
from sbom_translate.dialect import detect_dialect, emit, normalize, translate
from sbom_translate.models import CanonicalPackage, CanonicalSbom, Dialect, DistroInfo, Ecosystem
from sbom_translate.purl import PackageUrl, parse_purl, serialize_purl, validate_purl
from sbom_translate.scanner import ScanOptions, VulnReport, scan
from sbom_translate.spdx import SpdxDocument, parse_spdx, serialize_spdx
from sbom_translate.tracker import CveDatabase, load_alpine_secdb, load_debian_tracker
from sbom_translate.verscmp import compare_versions

__all__ = [
    "__version__",
    # Models
    "CanonicalPackage",
    "CanonicalSbom",
    "Dialect",
    "DistroInfo",
    "Ecosystem",
    # pURL
    "PackageUrl",
    "parse_purl",
    "serialize_purl",
    "validate_purl",
    # SPDX
    "SpdxDocument",
    "parse_spdx",
    "serialize_spdx",
    # Translation
    "detect_dialect",
    "emit",
    "normalize",
    "translate",
    # Scanning
    "CveDatabase",
    "ScanOptions",
    "VulnReport",
    "compare_versions",
    "load_alpine_secdb",
    "load_debian_tracker",
    "scan",
]
