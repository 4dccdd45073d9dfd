"""Unit tests for scanner.scan module."""

from dataclasses import replace

import pytest

from sbom_translate.models import CanonicalPackage, CanonicalSbom, DedupeMode, DistroInfo, Ecosystem, MatchVia
from sbom_translate.scanner import Finding, ScanOptions, VulnReport, scan


def _codes(report) -> list:
    return [w.code for w in report.warnings]


class TestScanDebian:
    """Tests for scan() on the bookworm fixture image."""

    def test_default_options(self, debian_sbom, debian_tracker, bookworm_cves):
        """Test per-binary findings with unimportant entries excluded."""
        report = scan(debian_sbom, debian_tracker)
        assert report.distinct_cves == bookworm_cves
        assert len(report) == 19
        assert (report.os_name, report.release) == (Ecosystem.DEBIAN, "bookworm")
        assert report.warnings == ()

    def test_cves_attached_to_every_binary(self, debian_sbom, debian_tracker):
        """Test both binaries of shadow carry its CVE."""
        report = scan(debian_sbom, debian_tracker)
        refs = {f.package_ref for f in report.findings if f.cve_id == "CVE-2023-4641"}
        assert refs == {"passwd@1:4.13+dfsg1-1+b1", "login@1:4.13+dfsg1-1+b1"}

    def test_per_source(self, debian_sbom, debian_tracker, bookworm_cves):
        """Test per-source mode reports each CVE once per source."""
        report = scan(debian_sbom, debian_tracker, ScanOptions(dedupe_mode=DedupeMode.PER_SOURCE))
        assert report.distinct_cves == bookworm_cves
        assert len(report) == 11
        finding = next(f for f in report.findings if f.cve_id == "CVE-2023-4641")
        assert (finding.package_ref, finding.package_name) == ("shadow@1:4.13+dfsg1-1", "shadow")

    def test_include_unimportant(self, debian_sbom, debian_tracker, bookworm_cves, bookworm_unimportant_cves):
        """Test unimportant entries add their CVEs on request."""
        report = scan(debian_sbom, debian_tracker, ScanOptions(include_unimportant=True))
        assert report.distinct_cves == bookworm_cves | bookworm_unimportant_cves
        assert len(report) == 26

    def test_cutoff_year(self, debian_sbom, debian_tracker, bookworm_cves):
        """Test CVEs after the cutoff year are ignored."""
        report = scan(debian_sbom, debian_tracker, ScanOptions(cutoff_year=2024))
        assert report.distinct_cves == bookworm_cves - {"CVE-2025-9230"}

    def test_exclude_kernel(self, debian_sbom, debian_tracker, bookworm_cves):
        """Test kernel source findings are dropped."""
        report = scan(debian_sbom, debian_tracker, ScanOptions(exclude_kernel=True))
        assert report.distinct_cves == bookworm_cves - {"CVE-2024-26581"}
        assert len(report) == 18
        assert report.options.kernel_patterns == ("linux", "linux-signed-*")

    def test_findings_sorted_and_unique(self, debian_sbom, debian_tracker):
        """Test findings are ordered and free of duplicate pairs."""
        doubled = replace(debian_sbom, packages=debian_sbom.packages + debian_sbom.packages)
        report = scan(doubled, debian_tracker)
        pairs = [(f.package_ref, f.cve_id) for f in report.findings]
        assert pairs == sorted(set(pairs))
        assert len(report) == 19

    def test_deterministic(self, debian_sbom, debian_tracker):
        """Test scanning twice gives the same report."""
        assert scan(debian_sbom, debian_tracker) == scan(debian_sbom, debian_tracker)

    def test_synthetic_entries_skipped(self, debian_sbom, debian_tracker):
        """Test entries flagged as synthetic source packages are not scanned."""
        packages = tuple(replace(p, is_source_synthetic=p.source_name == "openssl") for p in debian_sbom.packages)
        report = scan(replace(debian_sbom, packages=packages), debian_tracker)
        assert "CVE-2023-5678" not in report.distinct_cves


class TestScanEdgeCases:
    """Tests for scan() with incomplete SBOMs."""

    def test_no_distro(self, debian_sbom, debian_tracker):
        """Test an SBOM without release gives an empty report with a warning."""
        report = scan(replace(debian_sbom, distro=None), debian_tracker)
        assert len(report) == 0
        assert _codes(report) == ["distro-missing"]

    def test_unrecognized_distro(self, debian_sbom, debian_tracker):
        """Test an unknown release is scanned but flagged."""
        distro = DistroInfo.from_qualifier("trixie-backports", Ecosystem.DEBIAN)
        report = scan(replace(debian_sbom, distro=distro), debian_tracker)
        assert "distro-unrecognized" in _codes(report)
        assert len(report) == 0

    def test_binary_version_fallback(self, debian_tracker, bookworm):
        """Test a package without source version is queried with its binary version."""
        pkg = CanonicalPackage(name="libssl3", epoch=0, version="3.0.11-1~deb12u2", source_name="openssl",
                               arch="amd64")
        report = scan(CanonicalSbom(distro=bookworm, packages=(pkg,)), debian_tracker)
        assert report.distinct_cves == {"CVE-2023-5678", "CVE-2024-0727", "CVE-2025-9230"}
        assert all(f.matched_via is MatchVia.BINARY for f in report.findings)
        assert _codes(report) == ["source-version-missing"]

    def test_empty_sbom(self, debian_tracker, bookworm):
        """Test an SBOM without packages has no findings."""
        report = scan(CanonicalSbom(distro=bookworm, packages=()), debian_tracker)
        assert len(report) == 0
        assert report.warnings == ()


class TestScanAlpine:
    """Tests for scan() on the Alpine fixture image."""

    def test_default_options(self, alpine_sbom, alpine_secdb, alpine_cves):
        """Test secdb matching for apk packages."""
        report = scan(alpine_sbom, alpine_secdb)
        assert report.distinct_cves == alpine_cves
        assert len(report) == 4
        assert report.release == "3.20"
        assert all(f.matched_via is MatchVia.SOURCE for f in report.findings)

    def test_busybox_binaries(self, alpine_sbom, alpine_secdb):
        """Test both busybox binaries are vulnerable."""
        report = scan(alpine_sbom, alpine_secdb)
        refs = {f.package_ref for f in report.findings if f.cve_id == "CVE-2023-42363"}
        assert refs == {"busybox@1.36.1-r29", "ssl_client@1.36.1-r29"}


class TestReportModels:
    """Tests for ScanOptions, Finding and VulnReport."""

    def test_options_to_dict(self):
        """Test options are echoed as plain values."""
        assert ScanOptions(cutoff_year=2024).to_dict() == {
            "dedupe_mode": "per-binary",
            "include_unimportant": False,
            "cutoff_year": 2024,
            "exclude_kernel": False,
            "kernel_patterns": None,
        }

    def test_finding_order_ignores_descriptive_fields(self):
        """Test findings sort and compare by package ref and CVE only."""
        a = Finding("bash@5.2.15-2", "CVE-2022-3715", "bash", "bash")
        b = Finding("bash@5.2.15-2", "CVE-2022-3715", "bash", "bash", MatchVia.BINARY)
        assert a == b
        assert sorted([Finding("z@1", "CVE-2020-0001", "z", "z"), a])[0] is a

    def test_report_dict_round_trip(self, debian_sbom, debian_tracker):
        """Test findings survive to_dict/from_dict."""
        report = scan(debian_sbom, debian_tracker)
        data = report.to_dict()
        assert data["summary"] == {"findings": 19, "distinct_cves": 11, "vulnerable_packages": 15}
        restored = VulnReport.from_dict(data)
        assert restored.findings == report.findings
        assert restored.os_name is Ecosystem.DEBIAN

    def test_finding_from_minimal_dict(self):
        """Test findings written by other tools need only ref and CVE."""
        finding = Finding.from_dict({"package_ref": "bash@5.2.15-2", "cve_id": "CVE-2022-3715"})
        assert finding.package_name == "bash"
        assert finding.matched_via is MatchVia.SOURCE


@pytest.mark.parametrize("mode", list(DedupeMode))
def test_vulnerable_packages_subset_of_refs(debian_sbom, debian_tracker, mode):
    """Test every vulnerable package ref comes from a finding."""
    report = scan(debian_sbom, debian_tracker, ScanOptions(dedupe_mode=mode))
    assert report.vulnerable_packages == {f.package_ref for f in report.findings}
