"""
Conversion of dialect-shaped pURLs into canonical package records.
"""

import logging
import re
from typing import List, Optional, Tuple

from sbom_translate.errors import ConflictingEpoch, MalformedPurl, UnknownEcosystem
from sbom_translate.models.distro import DistroInfo
from sbom_translate.models.enums import Ecosystem, IssueCategory
from sbom_translate.models.issues import ComplianceIssue
from sbom_translate.models.package import CanonicalPackage, SpdxPackageExtras
from sbom_translate.purl.model import PackageUrl
from sbom_translate.purl.validate import is_self_referential_upstream, validate_purl
from sbom_translate.utils import join_epoch, parse_source_info, split_epoch

logger = logging.getLogger(__name__)

_TYPE_ECOSYSTEMS = {
    "deb": Ecosystem.DEBIAN,
    "dpkg": Ecosystem.DEBIAN,
    "apk": Ecosystem.ALPINE,
}
_SOURCE_PACKAGE_SUFFIX = re.compile(r"\.src\.(?:dpkg|apk)$")


def ecosystem_of(p: PackageUrl, sidecar: Optional[SpdxPackageExtras] = None) -> Ecosystem:
    """
    Work out the OS ecosystem of a pURL.

    Raises:
        UnknownEcosystem: If neither type, namespace, os_name nor sidecar tell
    """
    if p.type in _TYPE_ECOSYSTEMS:
        return _TYPE_ECOSYSTEMS[p.type]
    for hint in (p.namespace, p.qualifier("os_name")):
        if hint:
            try:
                return Ecosystem.from_string(hint)
            except ValueError:
                pass
    if sidecar is not None and sidecar.distro is not None:
        return sidecar.distro.os_name
    raise UnknownEcosystem(f"Cannot tell the OS ecosystem of pkg:{p.type}/{p.name}")


def distro_of(p: PackageUrl, ecosystem: Ecosystem) -> Optional[DistroInfo]:
    """
    Read the release from a pURL in any of the observed spellings.

    Handles `distro=bookworm`, `distro=debian-12`, `distro=debian-12.11`,
    `distro=3.19` and the `os_name`/`os_version`/`os_distro` triplet.
    """
    if distro := p.qualifier("distro"):
        return DistroInfo.from_qualifier(distro, ecosystem)
    os_name = p.qualifier("os_name")
    if os_name or p.qualifier("os_version") or p.qualifier("os_distro"):
        distro = DistroInfo.from_parts(
            os_name or ecosystem.value,
            version=p.qualifier("os_version"),
            codename=p.qualifier("os_distro"),
        )
        if distro is not None:
            return distro
        raw = "&".join(
            f"{k}={p.qualifiers[k]}" for k in ("os_name", "os_version", "os_distro") if k in p.qualifiers
        )
        return DistroInfo(ecosystem, "", raw=raw, recognized=False)
    return None


def split_source_package(value: str, binary_version: Optional[str] = None) -> Tuple[str, Optional[str]]:
    """
    Split an upstream qualifier into source name and version.

    Supported forms:
    - "magics-python" (source name only)
    - "shadow@1:4.13+dfsg1-1" (name@version)
    - "elfutils-0.188-2.1.src.dpkg" (name-version.src.dpkg)

    Args:
        value: The upstream qualifier value
        binary_version: The binary's version, used to pick the split point
            of the name-version form and to supply a missing epoch

    Returns:
        Tuple of (source name, source version or None)
    """
    if "@" in value:
        name, _, version = value.partition("@")
        return name, version or None
    if not _SOURCE_PACKAGE_SUFFIX.search(value):
        return value, None

    stem = _SOURCE_PACKAGE_SUFFIX.sub("", value)
    candidates = [i for i, c in enumerate(stem) if c == "-" and i + 1 < len(stem) and stem[i + 1].isdigit()]
    if not candidates:
        return stem, None
    if not binary_version:
        i = candidates[0]
        return stem[:i], stem[i + 1:]

    binary_epoch, binary_rest = split_epoch(binary_version)

    def with_epoch(version: str) -> str:
        # an epoch-free source version inherits the binary's epoch
        if split_epoch(version)[1] != version:
            return version
        return join_epoch(binary_epoch, version)

    for i in candidates:
        if stem[i + 1:] in (binary_version, binary_rest):
            return stem[:i], with_epoch(stem[i + 1:])
    # binNMU binaries extend the source version
    for i in candidates:
        if binary_rest.startswith(split_epoch(stem[i + 1:])[1]):
            return stem[:i], with_epoch(stem[i + 1:])
    i = candidates[0]
    return stem[:i], with_epoch(stem[i + 1:])


def _epoch_from_qualifier(p: PackageUrl) -> Optional[int]:
    value = p.qualifier("epoch")
    if value is None:
        return None
    if not value.isdigit():
        raise MalformedPurl(f"Non-numeric epoch qualifier {value!r} on {p.name!r}")
    return int(value)


def _note(code: str, message: str, field: str) -> ComplianceIssue:
    return ComplianceIssue(IssueCategory.INCORRECT_INFORMATION, code, message, field)


def purl_to_canonical(
    p: PackageUrl, sidecar: Optional[SpdxPackageExtras] = None
) -> CanonicalPackage:
    """
    Normalize a dialect-shaped pURL into a CanonicalPackage.

    The epoch is taken from the "epoch:" version prefix or the `epoch`
    qualifier. Distro spellings of all dialects map onto one DistroInfo.
    Source identity comes from Trivy-style sourceInfo in the sidecar, else
    from the `upstream` qualifier, unless that qualifier only repeats the
    package itself.

    Args:
        p: Parsed pURL
        sidecar: Package data stored outside the pURL (versionInfo,
            sourceInfo, document release)

    Returns:
        CanonicalPackage; its `issues` hold the pURL compliance issues

    Raises:
        ConflictingEpoch: If prefix and qualifier epochs differ
        UnknownEcosystem: If the OS cannot be determined
    """
    sidecar = sidecar or SpdxPackageExtras()
    ecosystem = ecosystem_of(p, sidecar)
    issues: List[ComplianceIssue] = list(validate_purl(p, ecosystem))

    raw_version = p.version or sidecar.version_info or ""
    if ecosystem is Ecosystem.DEBIAN:
        prefix_epoch, version = split_epoch(raw_version)
        has_prefix = version != raw_version
    else:
        prefix_epoch, version, has_prefix = 0, raw_version, False

    qualifier_epoch = _epoch_from_qualifier(p)
    if has_prefix and qualifier_epoch is not None and qualifier_epoch != prefix_epoch:
        raise ConflictingEpoch(
            f"{p.name}: version epoch {prefix_epoch} conflicts with epoch qualifier {qualifier_epoch}"
        )
    epoch = prefix_epoch if has_prefix else (qualifier_epoch or 0)

    # versionInfo corrects the epoch when it describes the same upstream/revision
    if sidecar.version_info and ecosystem is Ecosystem.DEBIAN:
        info_epoch, info_version = split_epoch(sidecar.version_info)
        if info_version == version and info_epoch != epoch:
            issues.append(_note(
                "epoch-mismatch",
                f"pURL epoch {epoch} disagrees with versionInfo {sidecar.version_info!r}",
                "qualifiers.epoch" if qualifier_epoch is not None else "version",
            ))
            epoch = info_epoch

    full_version = join_epoch(epoch, version)
    distro = distro_of(p, ecosystem) or sidecar.distro

    source_name, source_version = p.name, None
    trivy_source = parse_source_info(sidecar.source_info)
    upstream = p.qualifier("upstream")
    if trivy_source:
        source_name, source_version = trivy_source[0], trivy_source[1] or full_version
    elif upstream and is_self_referential_upstream(p):
        source_version = full_version
    elif upstream:
        source_name, source_version = split_source_package(upstream, full_version)
        source_version = source_version or full_version

    return CanonicalPackage(
        name=p.name,
        epoch=epoch,
        version=version,
        arch=(p.qualifier("arch") or "").lower() or None,
        source_name=source_name or p.name,
        source_version=source_version,
        ecosystem=ecosystem,
        distro=distro,
        purl=p.raw.text if p.raw else None,
        issues=tuple(issues),
    )
