"""
The package identity each consumer actually uses for CVE lookups.

Consumers disagree on which SPDX fields matter:
- Trivy ignores the pURL qualifiers and reads the source package from sourceInfo
- Grype (Anchore) takes the version from versionInfo over the pURL version
- Docker Scout reads os_name/os_version and ignores os_distro
"""

from dataclasses import dataclass
from typing import Optional

from sbom_translate.errors import MissingRequiredField, MissingSourceInfo
from sbom_translate.models.distro import DistroInfo
from sbom_translate.models.enums import Dialect
from sbom_translate.purl.canonical import distro_of, ecosystem_of, split_source_package
from sbom_translate.purl.codec import parse_purl
from sbom_translate.spdx.document import SpdxPackage
from sbom_translate.utils import parse_source_info, split_epoch


@dataclass(frozen=True)
class IdentityFields:
    """
    Fields a consumer uses to look a package up.

    Attributes:
        name: Binary package name
        source: Source package name used for the lookup, if any
        epoch: Epoch of `version`
        version: Epoch-free version used for the lookup
        distro: Release the consumer scopes the lookup to, if any
        arch: Architecture, if the consumer reads it
    """
    name: str
    source: Optional[str]
    epoch: int
    version: str
    distro: Optional[DistroInfo] = None
    arch: Optional[str] = None


def package_identifier_view(p: SpdxPackage, dialect: Dialect) -> IdentityFields:
    """
    Return the identity a consumer of `dialect` derives from a package.

    Args:
        p: SPDX package
        dialect: The consumer whose reading rules apply

    Returns:
        IdentityFields

    Raises:
        MissingSourceInfo: Trivy dialect and no parseable sourceInfo
        MissingRequiredField: Other dialects and no pURL
    """
    if dialect is Dialect.TRIVY:
        parsed = parse_source_info(p.source_info)
        if parsed is None:
            raise MissingSourceInfo(f"Package {p.spdx_id} has no 'built package from:' sourceInfo")
        source, source_version = parsed
        epoch, version = split_epoch(source_version or p.version_info or "")
        return IdentityFields(name=p.name or source, source=source, epoch=epoch, version=version)

    if not p.purl:
        raise MissingRequiredField(f"Package {p.spdx_id} has no purl external reference")
    purl = parse_purl(p.purl)
    ecosystem = ecosystem_of(purl)

    version_text = purl.version or ""
    if dialect is Dialect.ANCHORE and p.version_info:
        version_text = p.version_info
    epoch, version = split_epoch(version_text)
    epoch_qualifier = purl.qualifier("epoch") or ""
    if version == version_text and epoch_qualifier.isdigit():
        epoch = int(epoch_qualifier)

    if dialect is Dialect.DOCKER:
        distro = None
        if purl.qualifier("os_name"):
            distro = DistroInfo.from_parts(purl.qualifier("os_name"), version=purl.qualifier("os_version"))
    else:
        distro = distro_of(purl, ecosystem)

    source = None
    if upstream := purl.qualifier("upstream"):
        source = split_source_package(upstream)[0]

    return IdentityFields(
        name=purl.name,
        source=source,
        epoch=epoch,
        version=version,
        distro=distro,
        arch=purl.qualifier("arch"),
    )
