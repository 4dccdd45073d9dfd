"""
Dialect detection.

Signals are checked in a fixed order, cheapest and least ambiguous first:

1. creationInfo: a "dialect: <name>" comment written by this tool, then the
   producing tool named in creators
2. Amazon: pURL type "dpkg", or an upstream qualifier ending in ".src.dpkg"/".src.apk"
3. Docker: os_name / os_version / os_distro qualifiers
4. Trivy: "PkgID:" attribution texts, or an epoch qualifier together with
   "built package from:" sourceInfo
5. Google: "%3A" in a pURL version, or an upstream qualifier written after
   distro with no Syft sourceInfo
6. Anchore: Syft "acquired package info from" sourceInfo, or a "<os>-N"
   distro together with an upstream qualifier
7. Docker (weak): every package carries primaryPackagePurpose
8. Microsoft: no package carries arch or distro
9. Reference: every pURL is compliant
10. Unknown
"""

import logging
import re
from typing import List, Optional, Tuple

from sbom_translate.__version__ import __version__
from sbom_translate.errors import SbomTranslateError
from sbom_translate.models.enums import Dialect
from sbom_translate.purl.canonical import ecosystem_of
from sbom_translate.purl.codec import parse_purl
from sbom_translate.purl.model import PackageUrl
from sbom_translate.purl.validate import validate_purl
from sbom_translate.spdx.document import SpdxDocument, SpdxPackage
from sbom_translate.spdx.os_marker import is_os_marker
from sbom_translate.utils import SOURCE_INFO_PREFIX

logger = logging.getLogger(__name__)

TOOL_NAME = "sbom-translate"
TOOL_CREATOR = f"Tool: {TOOL_NAME}-{__version__}"
DIALECT_COMMENT_PREFIX = "dialect:"
SYFT_SOURCE_INFO_PREFIX = "acquired package info from"

# Substrings of creator entries, checked in order
CREATOR_FINGERPRINTS: Tuple[Tuple[str, Dialect], ...] = (
    ("trivy", Dialect.TRIVY),
    ("syft", Dialect.ANCHORE),
    ("anchore", Dialect.ANCHORE),
    ("docker-scout", Dialect.DOCKER),
    ("docker scout", Dialect.DOCKER),
    ("microsoft.sbomtool", Dialect.MICROSOFT),
    ("sbom-tool", Dialect.MICROSOFT),
    ("inspector", Dialect.AMAZON),
    ("amazon", Dialect.AMAZON),
    ("google", Dialect.GOOGLE),
    ("gcloud", Dialect.GOOGLE),
)

_OS_QUALIFIERS = ("os_name", "os_version", "os_distro")
_OS_VERSION_DISTRO = re.compile(r"^[a-z]+-\d+(?:\.\d+)*$")
_AMAZON_UPSTREAM = re.compile(r"\.src\.(?:dpkg|apk)$")


def is_own_document(doc: SpdxDocument) -> bool:
    """Check whether a document was written by this tool."""
    return any(c.startswith(f"Tool: {TOOL_NAME}") for c in doc.creators)


def dialect_from_creation_info(doc: SpdxDocument) -> Optional[Dialect]:
    """Dialect named by creationInfo, if any."""
    comment = (doc.creation_comment or "").strip()
    if comment.lower().startswith(DIALECT_COMMENT_PREFIX):
        try:
            return Dialect.from_string(comment[len(DIALECT_COMMENT_PREFIX):])
        except ValueError:
            logger.warning("Unknown dialect in creationInfo comment: %r", comment)

    for creator in doc.creators:
        lowered = creator.lower()
        if TOOL_NAME in lowered:
            continue
        for needle, dialect in CREATOR_FINGERPRINTS:
            if needle in lowered:
                return dialect
    return None


def _parsed_packages(doc: SpdxDocument) -> List[Tuple[SpdxPackage, PackageUrl]]:
    parsed = []
    for pkg in doc.packages:
        if is_os_marker(pkg) or not pkg.purl:
            continue
        try:
            parsed.append((pkg, parse_purl(pkg.purl)))
        except SbomTranslateError:
            logger.debug("Ignoring unparsable pURL %r during detection", pkg.purl)
    return parsed


def _distro_written_before_upstream(p: PackageUrl) -> bool:
    if p.raw is None:
        return False
    keys = [k.lower() for k in p.raw.qualifier_keys]
    if "distro" not in keys:
        return True
    return keys.index("distro") < keys.index("upstream")


def _is_compliant(p: PackageUrl) -> bool:
    try:
        return not validate_purl(p, ecosystem_of(p))
    except SbomTranslateError:
        return False


def detect_dialect(doc: SpdxDocument) -> Dialect:
    """
    Work out which tool's conventions an SPDX document follows.

    Never raises; UNKNOWN is the fallback.

    Args:
        doc: Parsed SPDX document

    Returns:
        The detected Dialect
    """
    content = [p for p in doc.packages if not is_os_marker(p)]
    if not content:
        return Dialect.UNKNOWN

    if dialect := dialect_from_creation_info(doc):
        logger.info("Detected dialect %s from creation info", dialect.value)
        return dialect

    parsed = _parsed_packages(doc)
    if not parsed:
        return Dialect.UNKNOWN
    purls = [p for _, p in parsed]
    source_infos = [(pkg.source_info or "").strip().lower() for pkg in content]

    if any(p.type == "dpkg" or _AMAZON_UPSTREAM.search(p.qualifier("upstream") or "") for p in purls):
        return Dialect.AMAZON

    if any(any(k in p.qualifiers for k in _OS_QUALIFIERS) for p in purls):
        return Dialect.DOCKER

    has_pkgid = any(
        t.startswith("PkgID:") for pkg in content for t in (pkg.attribution_texts or ())
    )
    has_trivy_source = any(s.startswith(SOURCE_INFO_PREFIX) for s in source_infos)
    if has_pkgid or (has_trivy_source and any("epoch" in p.qualifiers for p in purls)):
        return Dialect.TRIVY

    has_syft_source = any(s.startswith(SYFT_SOURCE_INFO_PREFIX) for s in source_infos)
    if any(p.raw and p.raw.version and "%3a" in p.raw.version.lower() for p in purls):
        return Dialect.GOOGLE
    if not has_syft_source and any(
        "upstream" in p.qualifiers and _distro_written_before_upstream(p) for p in purls
    ):
        return Dialect.GOOGLE

    if has_syft_source or any(
        "upstream" in p.qualifiers and _OS_VERSION_DISTRO.match(p.qualifier("distro") or "")
        for p in purls
    ):
        return Dialect.ANCHORE

    if all(pkg.primary_package_purpose for pkg in content):
        return Dialect.DOCKER

    if not any("arch" in p.qualifiers or "distro" in p.qualifiers for p in purls):
        return Dialect.MICROSOFT

    if all(_is_compliant(p) for p in purls):
        return Dialect.REFERENCE

    return Dialect.UNKNOWN
