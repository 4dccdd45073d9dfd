"""
Package and SBOM models.

An OsPackage is what a package manager database says is installed.
A CanonicalPackage is the tool-independent record every SBOM dialect is
normalized into; translation always goes dialect -> canonical -> dialect.

These models are designed to:
- Be immutable so normalized SBOMs can be shared freely
- Carry source (upstream) package identity next to the binary identity
- Keep the epoch out of the version string
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from sbom_translate.models.distro import DistroInfo
from sbom_translate.models.enums import Dialect, Ecosystem
from sbom_translate.models.issues import ComplianceIssue, TranslationWarning
from sbom_translate.utils import join_epoch, split_epoch


@dataclass(frozen=True)
class OsPackage:
    """
    An installed package as listed in /var/lib/dpkg/status or /lib/apk/db/installed.

    Attributes:
        name: Binary package name
        version: Version in distribution format, epoch included ("1:4.13+dfsg1-1")
        arch: Architecture ("amd64", "all", "x86_64")
        source_name: Source package the binary was built from
        source_version: Version of the source package
        origin: apk origin line, when present
        provides: Virtual packages or shared objects provided
    """
    name: str
    version: str
    arch: str = ""
    source_name: str = ""
    source_version: str = ""
    origin: Optional[str] = None
    provides: Tuple[str, ...] = ()

    def __post_init__(self):
        if not self.version:
            raise ValueError(f"Package {self.name!r} has an empty version")
        if not self.source_name:
            object.__setattr__(self, "source_name", self.name)
        if not self.source_version:
            object.__setattr__(self, "source_version", self.version)


@dataclass(frozen=True)
class SpdxPackageExtras:
    """
    Package data some dialects keep outside the pURL.

    Attributes:
        version_info: SPDX `versionInfo`
        source_info: SPDX `sourceInfo`
        distro: Document-level release, e.g. from an OS-marker package
    """
    version_info: Optional[str] = None
    source_info: Optional[str] = None
    distro: Optional[DistroInfo] = None


@dataclass(frozen=True)
class CanonicalPackage:
    """
    Tool-independent package record.

    Attributes:
        name: Binary package name (decoded)
        epoch: Version epoch, 0 when absent
        version: Epoch-free upstream version plus revision ("1.5.8-1")
        arch: Lowercase architecture, None when the SBOM omitted it
        source_name: Source package name; equals name when unknown
        source_version: Source version in distribution format (epoch prefix
            when nonzero), None when unknown
        ecosystem: Debian or Alpine
        distro: Release from the package's own pURL, if any
        is_source_synthetic: The entry was a tool-invented source duplicate
        purl: Text of the pURL the record was built from
        issues: Compliance issues met while building the record
    """
    name: str
    epoch: int
    version: str
    source_name: str
    ecosystem: Ecosystem = Ecosystem.DEBIAN
    arch: Optional[str] = None
    source_version: Optional[str] = None
    distro: Optional[DistroInfo] = None
    is_source_synthetic: bool = False
    purl: Optional[str] = field(default=None, compare=False)
    issues: Tuple[ComplianceIssue, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.epoch < 0:
            raise ValueError(f"Negative epoch for {self.name!r}: {self.epoch}")
        if ":" in self.version and self.ecosystem is Ecosystem.DEBIAN:
            epoch, _ = split_epoch(self.version)
            if epoch:
                raise ValueError(f"Epoch encoded inside version of {self.name!r}: {self.version!r}")
        if not self.source_name:
            object.__setattr__(self, "source_name", self.name)

    @property
    def upstream_version(self) -> str:
        """Version without the revision."""
        head, sep, _ = self.version.rpartition("-")
        return head if sep else self.version

    @property
    def revision(self) -> str:
        """Debian revision or apk "rN" release; empty when absent."""
        _, sep, tail = self.version.rpartition("-")
        return tail if sep else ""

    @property
    def full_version(self) -> str:
        """Version in distribution format with a nonzero epoch prefixed."""
        return join_epoch(self.epoch, self.version)

    @property
    def effective_source_version(self) -> str:
        """Source version, falling back to the binary version."""
        return self.source_version or self.full_version

    @property
    def identity_key(self) -> Tuple[str, str, int, str, str]:
        """Key used to compare package sets across SBOMs."""
        return (self.source_name, self.name, self.epoch, self.version, self.arch or "")

    @property
    def dedupe_key(self) -> Tuple[str, str, str]:
        """Packages sharing this key are duplicates."""
        return (self.name, self.full_version, self.arch or "")

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-friendly dictionary."""
        return {
            "name": self.name,
            "epoch": self.epoch,
            "version": self.version,
            "arch": self.arch,
            "source_name": self.source_name,
            "source_version": self.source_version,
            "ecosystem": self.ecosystem.value,
            "distro": self.distro.to_dict() if self.distro else None,
            "is_source_synthetic": self.is_source_synthetic,
        }

    @classmethod
    def from_os_package(
        cls, pkg: OsPackage, ecosystem: Ecosystem, distro: Optional[DistroInfo] = None
    ) -> "CanonicalPackage":
        """Build a canonical record from an installed-package entry."""
        if ecosystem is Ecosystem.DEBIAN:
            epoch, version = split_epoch(pkg.version)
        else:
            epoch, version = 0, pkg.version
        return cls(
            name=pkg.name,
            epoch=epoch,
            version=version,
            arch=pkg.arch.lower() or None,
            source_name=pkg.source_name,
            source_version=pkg.source_version,
            ecosystem=ecosystem,
            distro=distro,
        )


@dataclass(frozen=True)
class CanonicalSbom:
    """
    A normalized SBOM.

    Attributes:
        distro: Release of the scanned image, None when no dialect signal carried it
        packages: Canonical packages; synthetic source entries already removed
        origin: Dialect the SBOM was read from
        lossiness: Warnings recorded during normalization
        name: Document name, carried through translation
    """
    distro: Optional[DistroInfo]
    packages: Tuple[CanonicalPackage, ...]
    origin: Dialect = Dialect.REFERENCE
    lossiness: Tuple[TranslationWarning, ...] = ()
    name: str = "sbom"

    @property
    def ecosystem(self) -> Ecosystem:
        """Ecosystem of the SBOM, Debian when it cannot be told."""
        if self.distro is not None:
            return self.distro.os_name
        if self.packages:
            return self.packages[0].ecosystem
        return Ecosystem.DEBIAN

    def __len__(self) -> int:
        return len(self.packages)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-friendly dictionary."""
        return {
            "name": self.name,
            "origin": self.origin.value,
            "distro": self.distro.to_dict() if self.distro else None,
            "packages": [p.to_dict() for p in self.packages],
            "lossiness": [w.to_dict() for w in self.lossiness],
        }
