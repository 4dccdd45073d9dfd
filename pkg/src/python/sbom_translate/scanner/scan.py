"""
Match a canonical SBOM against a CVE database.

Trackers key CVEs by source package, so every package is looked up by its
source name and source version. In per-binary mode the CVEs of a source are
attached to every binary built from it, the way most scanners report them;
per-source mode reports each CVE once per source.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Optional, Tuple

from sbom_translate.errors import UnparsableVersion
from sbom_translate.models import (
    CanonicalPackage,
    CanonicalSbom,
    DedupeMode,
    Ecosystem,
    MatchVia,
    TranslationWarning,
)
from sbom_translate.scanner.kernel import filter_kernel
from sbom_translate.tracker import CveDatabase, query_cves

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScanOptions:
    """
    Scan settings, echoed into every report.

    Attributes:
        dedupe_mode: Report CVEs per binary package or once per source
        include_unimportant: Count tracker entries marked unimportant
        cutoff_year: Ignore CVEs assigned after this year
        exclude_kernel: Drop findings on kernel source packages
        kernel_patterns: Glob patterns for kernel sources; None uses the defaults
    """
    dedupe_mode: DedupeMode = DedupeMode.PER_BINARY
    include_unimportant: bool = False
    cutoff_year: Optional[int] = None
    exclude_kernel: bool = False
    kernel_patterns: Optional[Tuple[str, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-friendly dictionary."""
        return {
            "dedupe_mode": self.dedupe_mode.value,
            "include_unimportant": self.include_unimportant,
            "cutoff_year": self.cutoff_year,
            "exclude_kernel": self.exclude_kernel,
            "kernel_patterns": list(self.kernel_patterns) if self.kernel_patterns is not None else None,
        }


@dataclass(frozen=True, order=True)
class Finding:
    """
    One CVE attached to one package.

    Attributes:
        package_ref: "name@version" of the binary, or of the source in per-source mode
        cve_id: CVE identifier
        package_name: Binary name, or the source name in per-source mode
        source_name: Source package the CVE was found under
        matched_via: SOURCE when the source version was known, BINARY when
            the binary version stood in for it
    """
    package_ref: str
    cve_id: str
    package_name: str = field(compare=False)
    source_name: str = field(compare=False)
    matched_via: MatchVia = field(default=MatchVia.SOURCE, compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "package_ref": self.package_ref,
            "cve_id": self.cve_id,
            "package_name": self.package_name,
            "source_name": self.source_name,
            "matched_via": self.matched_via.value,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Finding":
        return cls(
            package_ref=data["package_ref"],
            cve_id=data["cve_id"],
            package_name=data.get("package_name", data["package_ref"].split("@", 1)[0]),
            source_name=data.get("source_name", ""),
            matched_via=MatchVia(data.get("matched_via", MatchVia.SOURCE.value)),
        )


@dataclass(frozen=True)
class VulnReport:
    """
    Result of a scan.

    Attributes:
        findings: Sorted by (package_ref, cve_id), no duplicate pairs
        options: The options the scan ran with
        os_name: Ecosystem of the scanned SBOM
        release: Tracker release the SBOM was matched against
        warnings: Problems met during the scan
        name: Name of the scanned SBOM
    """
    findings: Tuple[Finding, ...] = ()
    options: ScanOptions = field(default_factory=ScanOptions)
    os_name: Optional[Ecosystem] = None
    release: Optional[str] = None
    warnings: Tuple[TranslationWarning, ...] = ()
    name: str = "sbom"

    @property
    def distinct_cves(self) -> FrozenSet[str]:
        """Every CVE id in the report."""
        return frozenset(f.cve_id for f in self.findings)

    @property
    def vulnerable_packages(self) -> FrozenSet[str]:
        """Package refs with at least one finding."""
        return frozenset(f.package_ref for f in self.findings)

    def __len__(self) -> int:
        return len(self.findings)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-friendly dictionary."""
        return {
            "name": self.name,
            "os_name": self.os_name.value if self.os_name else None,
            "release": self.release,
            "options": self.options.to_dict(),
            "summary": {
                "findings": len(self.findings),
                "distinct_cves": len(self.distinct_cves),
                "vulnerable_packages": len(self.vulnerable_packages),
            },
            "findings": [f.to_dict() for f in self.findings],
            "warnings": [w.to_dict() for w in self.warnings],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VulnReport":
        """Rebuild the findings of a report written by `to_dict`; options and warnings are not restored."""
        os_name = data.get("os_name")
        return cls(
            findings=tuple(sorted(Finding.from_dict(f) for f in data.get("findings", []))),
            os_name=Ecosystem.from_string(os_name) if os_name else None,
            release=data.get("release"),
            name=data.get("name", "sbom"),
        )


def _package_ref(pkg: CanonicalPackage, mode: DedupeMode, source_version: str) -> Tuple[str, str]:
    if mode is DedupeMode.PER_SOURCE:
        return f"{pkg.source_name}@{source_version}", pkg.source_name
    return f"{pkg.name}@{pkg.full_version}", pkg.name


def scan(sbom: CanonicalSbom, db: CveDatabase, opts: Optional[ScanOptions] = None) -> VulnReport:
    """
    Find the CVEs that apply to the packages of an SBOM.

    Args:
        sbom: Normalized SBOM
        db: Tracker data
        opts: Scan options (defaults to per-binary, no kernel filter)

    Returns:
        VulnReport; when the SBOM has no distro the report is empty and
        carries a "distro-missing" warning
    """
    opts = opts or ScanOptions()
    warnings = []

    if sbom.distro is None:
        logger.warning("SBOM %s has no OS release; release-scoped CVEs cannot be matched", sbom.name)
        warnings.append(TranslationWarning(
            "distro-missing", "SBOM carries no OS release, nothing could be matched"
        ))
        return VulnReport(options=opts, warnings=tuple(warnings), name=sbom.name)

    os_name = sbom.distro.os_name
    release = sbom.distro.release_key
    if not sbom.distro.recognized:
        warnings.append(TranslationWarning(
            "distro-unrecognized", f"Unrecognized OS release {sbom.distro.raw!r}; matching may be empty"
        ))
    if release not in db.releases(os_name):
        logger.warning("Tracker data has no entries for %s %s", os_name.value, release)

    findings: Dict[Tuple[str, str], Finding] = {}
    cache: Dict[Tuple[str, str], FrozenSet[str]] = {}
    for pkg in sbom.packages:
        if pkg.is_source_synthetic:
            continue
        if pkg.source_version:
            version, via = pkg.source_version, MatchVia.SOURCE
        else:
            version, via = pkg.full_version, MatchVia.BINARY
            logger.warning("No source version for %s, querying with binary version %s", pkg.name, version)
            warnings.append(TranslationWarning(
                "source-version-missing",
                f"Queried with binary version {version}",
                package=pkg.name,
            ))

        key = (pkg.source_name, version)
        if key not in cache:
            try:
                cache[key] = query_cves(
                    db, os_name, release, pkg.source_name, version,
                    cutoff_year=opts.cutoff_year,
                    include_unimportant=opts.include_unimportant,
                )
            except UnparsableVersion as e:
                logger.warning("Skipping %s: %s", pkg.name, e)
                warnings.append(TranslationWarning("unparsable-version", str(e), package=pkg.name))
                cache[key] = frozenset()

        ref, ref_name = _package_ref(pkg, opts.dedupe_mode, version)
        for cve_id in cache[key]:
            findings.setdefault(
                (ref, cve_id),
                Finding(ref, cve_id, ref_name, pkg.source_name, via),
            )

    report = VulnReport(
        findings=tuple(sorted(findings.values())),
        options=opts,
        os_name=os_name,
        release=release,
        warnings=tuple(warnings),
        name=sbom.name,
    )
    logger.info(
        "Scanned %d packages of %s: %d findings, %d distinct CVEs",
        len(sbom.packages), sbom.name, len(report.findings), len(report.distinct_cves),
    )

    if opts.exclude_kernel:
        report = filter_kernel(report, opts.kernel_patterns)
    return report

