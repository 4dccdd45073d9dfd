"""
Emission of canonical SBOMs in the shape a given consumer expects.

Every target gets its own pURL shape plus the optional SPDX fields its
consumer needs to find the packages:
- TRIVY: OS-marker package and "built package from:" sourceInfo
- DOCKER: primaryPackagePurpose on every package
- the rest: the pURL shape the producing tool writes, with enough sidecar
  data (sourceInfo, OS marker) for the source and release to survive
"""

import logging
import uuid
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from sbom_translate.dialect.detect import DIALECT_COMMENT_PREFIX, TOOL_CREATOR
from sbom_translate.models.distro import DistroInfo
from sbom_translate.models.enums import Dialect, Ecosystem, IssueCategory, PackagePurpose
from sbom_translate.models.issues import TranslationWarning
from sbom_translate.models.package import CanonicalPackage, CanonicalSbom
from sbom_translate.purl.codec import format_purl
from sbom_translate.purl.model import PackageUrl
from sbom_translate.spdx.document import (
    DOCUMENT_ID,
    ExternalRef,
    SpdxDocument,
    SpdxPackage,
    SpdxRelationship,
)
from sbom_translate.spdx.os_marker import build_os_marker
from sbom_translate.utils import creation_timestamp, format_source_info, stable_id

logger = logging.getLogger(__name__)

SPDX_VERSION = "SPDX-2.3"
NAMESPACE_BASE = "https://sbom-translate.invalid/spdxdocs"

SYFT_DB_LOCATIONS = {
    Ecosystem.DEBIAN: "acquired package info from DPKG DB: /var/lib/dpkg/status",
    Ecosystem.ALPINE: "acquired package info from APK DB: /lib/apk/db/installed",
}

# Targets whose pURLs cannot say which release a package belongs to
MARKER_TARGETS = frozenset({Dialect.REFERENCE, Dialect.TRIVY, Dialect.MICROSOFT, Dialect.AMAZON})

_PACKAGE_DEFAULTS = {
    "downloadLocation": "NONE",
    "filesAnalyzed": False,
    "copyrightText": "NOASSERTION",
    "licenseConcluded": "NOASSERTION",
    "licenseDeclared": "NOASSERTION",
}


@dataclass(frozen=True)
class _Shape:
    """Per-target pURL and SPDX field layout."""
    purl: PackageUrl
    qualifier_order: Tuple[str, ...] = ()
    encode_name: bool = True
    encode_epoch_separator: bool = False
    source_info: Optional[str] = None
    purpose: Optional[str] = None
    attribution_texts: Optional[Tuple[str, ...]] = None


def _source_version(pkg: CanonicalPackage) -> str:
    return pkg.effective_source_version


def _os_version_distro(distro: Optional[DistroInfo], ecosystem: Ecosystem) -> Optional[str]:
    """"debian-12" / "alpine-3.19" style distro value."""
    if distro is None:
        return None
    if not distro.recognized:
        return distro.raw
    return f"{ecosystem.value}-{distro.version_id}"


def _base_purl(pkg: CanonicalPackage, version: str, qualifiers: Dict[str, Optional[str]],
               pkg_type: Optional[str] = None, namespace: Optional[str] = "") -> PackageUrl:
    return PackageUrl(
        type=pkg_type or pkg.ecosystem.purl_type,
        namespace=pkg.ecosystem.namespace if namespace == "" else namespace,
        name=pkg.name,
        version=version,
        qualifiers={k: v for k, v in qualifiers.items() if v},
    )


def _upstream_with_version(pkg: CanonicalPackage, always: bool = False) -> Optional[str]:
    """Syft style upstream: "src" or "src@version" when versions differ."""
    if pkg.source_name == pkg.name and pkg.source_version in (None, pkg.full_version) and not always:
        return None
    if pkg.source_version and pkg.source_version != pkg.full_version:
        return f"{pkg.source_name}@{pkg.source_version}"
    return pkg.source_name


def _shape_reference(pkg: CanonicalPackage, distro: Optional[DistroInfo]) -> _Shape:
    purl = _base_purl(pkg, pkg.full_version, {
        "arch": pkg.arch,
        "distro": distro.purl_distro if distro else None,
    })
    return _Shape(purl=purl, source_info=format_source_info(pkg.source_name, _source_version(pkg)))


def _shape_trivy(pkg: CanonicalPackage, distro: Optional[DistroInfo]) -> _Shape:
    if distro is not None and distro.os_name is Ecosystem.DEBIAN:
        distro_value = _os_version_distro(distro, Ecosystem.DEBIAN)
    else:
        distro_value = distro.purl_distro if distro else None
    purl = _base_purl(pkg, pkg.version, {
        "arch": pkg.arch,
        "distro": distro_value,
        "epoch": str(pkg.epoch) if pkg.epoch else None,
    })
    return _Shape(
        purl=purl,
        source_info=format_source_info(pkg.source_name, _source_version(pkg)),
        purpose=PackagePurpose.LIBRARY.value,
        attribution_texts=(f"PkgID: {pkg.name}@{pkg.full_version}", f"PkgType: {pkg.ecosystem.value}"),
    )


def _shape_docker(pkg: CanonicalPackage, distro: Optional[DistroInfo]) -> _Shape:
    qualifiers: Dict[str, Optional[str]] = {}
    if distro is not None and distro.recognized:
        qualifiers = {
            "os_version": distro.version_id,
            "os_name": distro.os_name.value,
            "os_distro": distro.codename,
        }
    qualifiers["arch"] = pkg.arch
    purl = _base_purl(pkg, pkg.full_version, qualifiers)
    return _Shape(
        purl=purl,
        qualifier_order=("os_version", "os_name", "os_distro", "arch"),
        source_info=format_source_info(pkg.source_name, _source_version(pkg)),
        purpose=PackagePurpose.LIBRARY.value,
    )


def _shape_anchore(pkg: CanonicalPackage, distro: Optional[DistroInfo]) -> _Shape:
    purl = _base_purl(pkg, pkg.full_version, {
        "arch": pkg.arch,
        "upstream": _upstream_with_version(pkg),
        "distro": _os_version_distro(distro, pkg.ecosystem),
    })
    return _Shape(
        purl=purl,
        qualifier_order=("arch", "upstream", "distro"),
        source_info=SYFT_DB_LOCATIONS[pkg.ecosystem],
    )


def _shape_google(pkg: CanonicalPackage, distro: Optional[DistroInfo]) -> _Shape:
    version = pkg.version
    if pkg.ecosystem is Ecosystem.DEBIAN:
        version = f"{pkg.epoch}:{pkg.version}"
    purl = _base_purl(pkg, version, {
        "arch": pkg.arch,
        "distro": _os_version_distro(distro, pkg.ecosystem),
        "upstream": _upstream_with_version(pkg, always=True),
    })
    return _Shape(
        purl=purl,
        qualifier_order=("arch", "distro", "upstream"),
        encode_epoch_separator=True,
    )


def _shape_microsoft(pkg: CanonicalPackage, distro: Optional[DistroInfo]) -> _Shape:
    purl = _base_purl(pkg, pkg.full_version, {})
    return _Shape(
        purl=purl,
        encode_name=False,
        source_info=format_source_info(pkg.source_name, _source_version(pkg)),
    )


def _shape_amazon(pkg: CanonicalPackage, distro: Optional[DistroInfo]) -> _Shape:
    suffix = "dpkg" if pkg.ecosystem is Ecosystem.DEBIAN else "apk"
    # An upstream naming the package itself reads as a self-referential upstream
    upstream = None
    if pkg.source_name != pkg.name or _source_version(pkg) != pkg.full_version:
        upstream = f"{pkg.source_name}-{_source_version(pkg)}.src.{suffix}"
    qualifiers: Dict[str, Optional[str]] = {
        "arch": pkg.arch.upper() if pkg.arch else None,
        "upstream": upstream,
    }
    if pkg.ecosystem is Ecosystem.DEBIAN:
        qualifiers["epoch"] = str(pkg.epoch)
    purl = _base_purl(
        pkg, pkg.version, qualifiers,
        pkg_type="dpkg" if pkg.ecosystem is Ecosystem.DEBIAN else "apk",
        namespace=None,
    )
    return _Shape(purl=purl, qualifier_order=("arch", "epoch", "upstream"), encode_name=False)


SHAPES: Dict[Dialect, Callable[[CanonicalPackage, Optional[DistroInfo]], _Shape]] = {
    Dialect.REFERENCE: _shape_reference,
    Dialect.TRIVY: _shape_trivy,
    Dialect.DOCKER: _shape_docker,
    Dialect.ANCHORE: _shape_anchore,
    Dialect.GOOGLE: _shape_google,
    Dialect.MICROSOFT: _shape_microsoft,
    Dialect.AMAZON: _shape_amazon,
}


def package_spdx_id(pkg: CanonicalPackage) -> str:
    """Deterministic SPDXID for a package."""
    return f"SPDXRef-Package-{stable_id(pkg.name, pkg.full_version, pkg.arch or '')}"


def _build_package(pkg: CanonicalPackage, shape: _Shape) -> SpdxPackage:
    locator = format_purl(
        shape.purl,
        qualifier_order=shape.qualifier_order or None,
        encode_name=shape.encode_name,
        encode_epoch_separator=shape.encode_epoch_separator,
    )
    return SpdxPackage(
        spdx_id=package_spdx_id(pkg),
        name=pkg.name,
        version_info=pkg.full_version,
        source_info=shape.source_info,
        attribution_texts=shape.attribution_texts,
        primary_package_purpose=shape.purpose,
        external_refs=(ExternalRef.purl(locator),),
        extras=dict(_PACKAGE_DEFAULTS),
    )


def _emission_warnings(c: CanonicalSbom, target: Dialect, packages: List[CanonicalPackage]) -> List[TranslationWarning]:
    warnings: List[TranslationWarning] = []
    if not packages:
        return warnings
    if c.distro is None:
        warnings.append(TranslationWarning(
            "distro-missing",
            f"no OS release known; {target.value} output cannot name the distribution",
            category=IssueCategory.INCOMPLETE_DATA,
        ))
    missing_arch = [p.name for p in packages if not p.arch]
    if missing_arch and target is not Dialect.MICROSOFT:
        warnings.append(TranslationWarning(
            "arch-missing",
            f"{len(missing_arch)} packages have no architecture",
            category=IssueCategory.INCOMPLETE_DATA,
        ))
    missing_source = [p.name for p in packages if p.source_version is None]
    if missing_source:
        warnings.append(TranslationWarning(
            "source-version-missing",
            f"{len(missing_source)} packages have no source version; the binary version is written instead",
            category=IssueCategory.INCOMPLETE_DATA,
        ))
    if target is Dialect.MICROSOFT:
        warnings.append(TranslationWarning(
            "qualifiers-dropped",
            "microsoft pURLs carry no arch or distro qualifiers",
            category=IssueCategory.INCOMPLETE_DATA,
        ))
    return warnings


def emit_with_warnings(c: CanonicalSbom, target: Dialect) -> Tuple[SpdxDocument, List[TranslationWarning]]:
    """
    Emit a canonical SBOM in the shape a target consumer expects.

    Synthetic source entries are dropped. The document is stamped with this
    tool as creator and a "dialect: <target>" comment, and its namespace and
    SPDXIDs are derived from content, so output is byte-stable.

    Args:
        c: Canonical SBOM
        target: Any dialect except UNKNOWN

    Returns:
        Tuple of (SPDX document, lossiness warnings)

    Raises:
        ValueError: If target is UNKNOWN
    """
    if target not in SHAPES:
        raise ValueError(f"Cannot emit dialect {target.value!r}")

    shape_for = SHAPES[target]
    packages = [p for p in c.packages if not p.is_source_synthetic]
    spdx_packages = [_build_package(p, shape_for(p, p.distro or c.distro)) for p in packages]

    relationships: List[SpdxRelationship] = []
    if c.distro is not None and c.distro.recognized and target in MARKER_TARGETS and packages:
        marker_id = f"SPDXRef-OperatingSystem-{stable_id(c.distro.os_name.value, c.distro.version_id)}"
        spdx_packages.insert(0, build_os_marker(marker_id, c.distro))
        relationships.append(SpdxRelationship(DOCUMENT_ID, "DESCRIBES", marker_id))
        relationships.extend(SpdxRelationship(marker_id, "CONTAINS", p.spdx_id) for p in spdx_packages[1:])
    else:
        relationships.extend(SpdxRelationship(DOCUMENT_ID, "DESCRIBES", p.spdx_id) for p in spdx_packages)

    fingerprint = stable_id(target.value, c.name, *(p.spdx_id for p in spdx_packages), length=32)
    namespace = f"{NAMESPACE_BASE}/{c.name}-{uuid.uuid5(uuid.NAMESPACE_URL, fingerprint)}"

    doc = SpdxDocument(
        spdx_version=SPDX_VERSION,
        name=c.name,
        creators=(TOOL_CREATOR,),
        packages=tuple(spdx_packages),
        relationships=tuple(relationships),
        document_namespace=namespace,
        created=creation_timestamp(),
        creation_comment=f"{DIALECT_COMMENT_PREFIX} {target.value}",
    )

    warnings = _emission_warnings(c, target, packages)
    for warning in warnings:
        logger.warning("%s: %s", warning.code, warning.message)
    return doc, warnings


def emit(c: CanonicalSbom, target: Dialect) -> SpdxDocument:
    """Emit a canonical SBOM for a target consumer; warnings are only logged."""
    doc, _ = emit_with_warnings(c, target)
    return doc
