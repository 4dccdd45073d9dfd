"""CVE matching for canonical SBOMs."""

from sbom_translate.scanner.kernel import (
    DEFAULT_KERNEL_PATTERNS,
    default_kernel_patterns,
    filter_kernel,
    is_kernel_source,
)
from sbom_translate.scanner.report import render_report, report_to_dataframe, report_to_json
from sbom_translate.scanner.scan import Finding, ScanOptions, VulnReport, scan

__all__ = [
    "DEFAULT_KERNEL_PATTERNS",
    "Finding",
    "ScanOptions",
    "VulnReport",
    "default_kernel_patterns",
    "filter_kernel",
    "is_kernel_source",
    "render_report",
    "report_to_dataframe",
    "report_to_json",
    "scan",
]
