"""
Normalization of dialect-shaped SPDX documents into CanonicalSbom.
"""

import logging
from collections import Counter
from dataclasses import replace
from typing import Dict, List, Mapping, Optional, Set, Tuple

from sbom_translate.dialect.detect import is_own_document
from sbom_translate.errors import NormalizationFailed, SbomTranslateError, UnknownEcosystem
from sbom_translate.models.distro import DistroInfo
from sbom_translate.models.enums import Dialect, IssueCategory, PackagePurpose
from sbom_translate.models.issues import TranslationWarning
from sbom_translate.models.package import (
    CanonicalPackage,
    CanonicalSbom,
    OsPackage,
    SpdxPackageExtras,
)
from sbom_translate.purl.canonical import purl_to_canonical
from sbom_translate.purl.codec import parse_purl
from sbom_translate.spdx.document import SpdxDocument, SpdxPackage
from sbom_translate.spdx.os_marker import find_os_marker, is_os_marker, marker_distro
from sbom_translate.utils import parse_source_info

logger = logging.getLogger(__name__)

# Producers that add an extra entry for the source package of a binary
SOURCE_DUPLICATING_DIALECTS = frozenset({Dialect.AMAZON, Dialect.DOCKER})

# Producers whose pURL without an upstream qualifier means the source equals the binary
UPSTREAM_WHEN_DIFFERENT = frozenset({Dialect.ANCHORE, Dialect.GOOGLE, Dialect.AMAZON})

OsDb = Mapping[str, OsPackage]


def _document_distro(doc: SpdxDocument, packages: List[CanonicalPackage]) -> Optional[DistroInfo]:
    marker = find_os_marker(doc)
    if marker is not None:
        distro = marker_distro(marker)
        if distro is not None:
            return distro
    counts = Counter(p.distro for p in packages if p.distro is not None and p.distro.recognized)
    if counts:
        return counts.most_common(1)[0][0]
    return None


def _generated_from(doc: SpdxDocument) -> Dict[str, str]:
    """binary SPDXID -> source SPDXID from GENERATED_FROM / GENERATES relationships."""
    links: Dict[str, str] = {}
    for rel in doc.iter_relationships("GENERATED_FROM"):
        links[rel.element] = rel.related
    for rel in doc.iter_relationships("GENERATES"):
        links[rel.related] = rel.element
    return links


def _repair_source(
    pkg: CanonicalPackage, os_db: Optional[OsDb], dialect: Dialect
) -> Tuple[CanonicalPackage, List[TranslationWarning]]:
    """Fix the source package of a binary whose upstream data is missing or self-referential."""
    warnings: List[TranslationWarning] = []
    self_referential = any(i.code == "self-referential-upstream" for i in pkg.issues)
    installed = os_db.get(pkg.name) if os_db is not None else None

    if installed is not None and (self_referential or pkg.source_version is None):
        if self_referential and installed.source_name != pkg.name:
            warnings.append(TranslationWarning(
                "upstream-repaired",
                f"upstream of {pkg.name} names the package itself; the package database says "
                f"{installed.source_name} {installed.source_version}",
                package=pkg.name,
                category=IssueCategory.INCORRECT_INFORMATION,
            ))
        pkg = replace(pkg, source_name=installed.source_name, source_version=installed.source_version)
    elif self_referential and dialect is Dialect.AMAZON:
        warnings.append(TranslationWarning(
            "upstream-unverified",
            f"upstream of {pkg.name} repeats the package itself and no package database was given to check it",
            package=pkg.name,
            category=IssueCategory.INCORRECT_INFORMATION,
        ))
    elif pkg.source_version is None and dialect in UPSTREAM_WHEN_DIFFERENT:
        pkg = replace(pkg, source_version=pkg.full_version)
    return pkg, warnings


def _mark_synthetic(
    doc: SpdxDocument,
    entries: List[Tuple[SpdxPackage, CanonicalPackage]],
    dialect: Dialect,
    os_db: Optional[OsDb],
) -> List[Tuple[SpdxPackage, CanonicalPackage]]:
    """
    Flag entries that only stand for the source package of another entry.

    Evidence, strongest first: a GENERATED_FROM link, primaryPackagePurpose
    SOURCE, absence from a supplied package database, and for producers known
    to add such entries, a name and version equal to another entry's source.
    When such a producer writes a package that is its own source, the binary
    and the source entry coincide; one copy is kept.
    """
    by_id = {spdx.spdx_id: i for i, (spdx, _) in enumerate(entries)}
    synthetic: Set[int] = set()
    result = list(entries)

    for binary_id, source_id in _generated_from(doc).items():
        if binary_id not in by_id or source_id not in by_id:
            continue
        b, s = by_id[binary_id], by_id[source_id]
        synthetic.add(s)
        spdx, binary = result[b]
        if binary.source_name == binary.name and result[s][1].name != binary.name:
            source = result[s][1]
            result[b] = (spdx, replace(binary, source_name=source.name, source_version=source.full_version))

    for i, (spdx, pkg) in enumerate(result):
        if spdx.primary_package_purpose == PackagePurpose.SOURCE.value:
            synthetic.add(i)

    sources: Dict[str, Set[str]] = {}
    for _, pkg in result:
        if pkg.source_name != pkg.name:
            sources.setdefault(pkg.source_name, set()).add(pkg.effective_source_version)

    heuristic = dialect in SOURCE_DUPLICATING_DIALECTS and not is_own_document(doc)
    copies: Dict[Tuple[str, str], List[int]] = {}
    for i, (_, pkg) in enumerate(result):
        if i in synthetic or pkg.name not in sources:
            continue
        if os_db is not None:
            if pkg.name not in os_db:
                synthetic.add(i)
        elif heuristic and pkg.source_name == pkg.name and pkg.full_version in sources[pkg.name]:
            copies.setdefault((pkg.name, pkg.full_version), []).append(i)

    # A lone entry stands for the source only; among several copies the first is the binary
    for indexes in copies.values():
        synthetic.update(indexes[1:] if len(indexes) > 1 else indexes)

    return [
        (spdx, replace(pkg, is_source_synthetic=True) if i in synthetic else pkg)
        for i, (spdx, pkg) in enumerate(result)
    ]


def _dedupe(packages: List[CanonicalPackage]) -> Tuple[List[CanonicalPackage], List[TranslationWarning]]:
    seen: Dict[Tuple[str, str, str], CanonicalPackage] = {}
    warnings: List[TranslationWarning] = []
    for pkg in packages:
        key = pkg.dedupe_key
        if key in seen:
            warnings.append(TranslationWarning(
                "duplicate-merged",
                f"duplicate entry {pkg.name} {pkg.full_version} {pkg.arch or ''} merged".rstrip(),
                package=pkg.name,
            ))
            continue
        seen[key] = pkg
    return list(seen.values()), warnings


def normalize(
    doc: SpdxDocument,
    d: Dialect,
    os_db: Optional[OsDb] = None,
) -> CanonicalSbom:
    """
    Normalize an SPDX document written in dialect `d`.

    Synthetic source-package entries are removed, Amazon self-referential
    upstreams are repaired from `os_db` (or flagged), Trivy source identity
    is read from sourceInfo, duplicates are merged, and every loss of
    information is recorded in `lossiness`.

    Args:
        doc: Parsed SPDX document
        d: Dialect of the document; UNKNOWN applies Reference rules
        os_db: Optional binary name -> installed package mapping from the
            image's package database

    Returns:
        CanonicalSbom

    Raises:
        NormalizationFailed: If the document has packages but none yields
            a usable identity
    """
    warnings: List[TranslationWarning] = []
    if d is Dialect.UNKNOWN:
        warnings.append(TranslationWarning(
            "unknown-dialect", "producer not recognized; reference rules applied",
        ))

    marker = find_os_marker(doc)
    marker_release = marker_distro(marker) if marker is not None else None
    content = [p for p in doc.packages if not is_os_marker(p)]

    entries: List[Tuple[SpdxPackage, CanonicalPackage]] = []
    for spdx in content:
        if not spdx.purl:
            warnings.append(TranslationWarning(
                "no-purl", f"package {spdx.spdx_id} has no pURL and was skipped", package=spdx.name,
            ))
            continue
        if d is Dialect.TRIVY and parse_source_info(spdx.source_info) is None:
            warnings.append(TranslationWarning(
                "source-info-missing",
                f"trivy package {spdx.name} has no 'built package from:' sourceInfo",
                package=spdx.name,
                category=IssueCategory.INCOMPLETE_DATA,
            ))
        sidecar = SpdxPackageExtras(
            version_info=spdx.version_info,
            source_info=spdx.source_info,
            distro=marker_release,
        )
        try:
            canonical = purl_to_canonical(parse_purl(spdx.purl), sidecar)
        except UnknownEcosystem:
            logger.info("Skipping non-OS package %s", spdx.purl)
            continue
        except SbomTranslateError as e:
            warnings.append(TranslationWarning(
                "unusable-package", f"{spdx.spdx_id}: {e}", package=spdx.name,
                category=IssueCategory.INVALID_FORMAT,
            ))
            continue

        canonical, repair_warnings = _repair_source(canonical, os_db, d)
        warnings.extend(repair_warnings)
        warnings.extend(
            TranslationWarning(issue.code, issue.message, package=canonical.name, category=issue.category)
            for issue in canonical.issues
            if issue.category is IssueCategory.INCORRECT_INFORMATION and issue.code != "self-referential-upstream"
        )
        entries.append((spdx, canonical))

    if content and not entries:
        raise NormalizationFailed(f"No package in {doc.name!r} has a usable OS package identity")

    entries = _mark_synthetic(doc, entries, d, os_db)
    dropped = [pkg.name for _, pkg in entries if pkg.is_source_synthetic]
    if dropped:
        warnings.append(TranslationWarning(
            "synthetic-source-dropped",
            f"{len(dropped)} source-package entries removed: {', '.join(sorted(set(dropped)))}",
        ))
    packages = [pkg for _, pkg in entries if not pkg.is_source_synthetic]

    distro = _document_distro(doc, packages)
    if distro is None and packages:
        warnings.append(TranslationWarning(
            "distro-missing",
            "the SBOM does not say which OS release it describes; release-scoped CVEs cannot be matched",
            category=IssueCategory.INCOMPLETE_DATA,
        ))
    missing_arch = sum(1 for p in packages if not p.arch)
    if missing_arch:
        warnings.append(TranslationWarning(
            "arch-missing",
            f"{missing_arch} packages have no architecture",
            category=IssueCategory.INCOMPLETE_DATA,
        ))
    packages = [p if p.distro is not None else replace(p, distro=distro) for p in packages]

    packages, dedupe_warnings = _dedupe(packages)
    warnings.extend(dedupe_warnings)

    for warning in warnings:
        logger.warning("%s: %s", warning.code, warning.message)
    logger.info("Normalized %d packages from %s SBOM %r", len(packages), d.value, doc.name)

    return CanonicalSbom(
        distro=distro,
        packages=tuple(packages),
        origin=d,
        lossiness=tuple(warnings),
        name=doc.name or "sbom",
    )
