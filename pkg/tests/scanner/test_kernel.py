"""Unit tests for scanner.kernel module."""

import pytest

from sbom_translate.models import Ecosystem
from sbom_translate.scanner import (
    DEFAULT_KERNEL_PATTERNS,
    Finding,
    VulnReport,
    default_kernel_patterns,
    filter_kernel,
    is_kernel_source,
)


class TestIsKernelSource:
    """Tests for is_kernel_source()."""

    @pytest.mark.parametrize("source_name,expected", [
        ("linux", True),
        ("linux-signed-amd64", True),
        ("linux-signed-arm64", True),
        ("linux-lts", True),
        ("linux-firmware-nonfree", False),
        ("util-linux", False),
        ("linuxdoc-tools", False),
    ])
    def test_default_patterns(self, source_name, expected):
        """Test shipped patterns match kernel sources only."""
        assert is_kernel_source(source_name, default_kernel_patterns()) is expected

    def test_case_sensitive(self):
        """Test source names are matched case-sensitively."""
        assert not is_kernel_source("Linux", ("linux",))

    def test_patterns_per_ecosystem(self):
        """Test each ecosystem has its own pattern list."""
        assert default_kernel_patterns(Ecosystem.DEBIAN) == DEFAULT_KERNEL_PATTERNS[Ecosystem.DEBIAN]
        assert "linux-lts" not in default_kernel_patterns(Ecosystem.DEBIAN)
        assert "linux-lts" in default_kernel_patterns(Ecosystem.ALPINE)


class TestFilterKernel:
    """Tests for filter_kernel()."""

    @pytest.fixture
    def report(self):
        return VulnReport(
            findings=(
                Finding("libc6@2.36-9+deb12u4", "CVE-2024-2961", "libc6", "glibc"),
                Finding("linux-image-6.1.0-18-amd64@6.1.76-1", "CVE-2024-26581",
                        "linux-image-6.1.0-18-amd64", "linux-signed-amd64"),
            ),
            os_name=Ecosystem.DEBIAN,
            release="bookworm",
        )

    def test_drops_kernel_findings(self, report):
        """Test findings on kernel sources are removed."""
        filtered = filter_kernel(report)
        assert filtered.distinct_cves == {"CVE-2024-2961"}
        assert filtered.options.exclude_kernel

    def test_input_untouched(self, report):
        """Test the original report keeps its findings."""
        filter_kernel(report)
        assert len(report) == 2

    def test_custom_patterns(self, report):
        """Test user patterns replace the defaults."""
        filtered = filter_kernel(report, ["glibc"])
        assert filtered.distinct_cves == {"CVE-2024-26581"}
        assert filtered.options.kernel_patterns == ("glibc",)

    def test_empty_patterns_keep_everything(self, report):
        """Test an empty pattern list drops nothing."""
        assert len(filter_kernel(report, [])) == 2
