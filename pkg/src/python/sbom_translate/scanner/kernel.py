"""
Kernel finding filter.

Containers run on the host kernel, so CVEs filed against the kernel source
packages of an image do not apply to it.
"""

import logging
from dataclasses import replace
from fnmatch import fnmatchcase
from typing import TYPE_CHECKING, Dict, Iterable, Optional, Tuple

from sbom_translate.models import Ecosystem

if TYPE_CHECKING:
    from sbom_translate.scanner.scan import VulnReport

logger = logging.getLogger(__name__)

DEFAULT_KERNEL_PATTERNS: Dict[Ecosystem, Tuple[str, ...]] = {
    Ecosystem.DEBIAN: ("linux", "linux-signed-*"),
    Ecosystem.ALPINE: ("linux-lts", "linux-edge", "linux-virt", "linux-headers"),
}


def default_kernel_patterns(os_name: Optional[Ecosystem] = None) -> Tuple[str, ...]:
    """Shipped kernel source patterns for one ecosystem, or for all of them."""
    if os_name is not None:
        return DEFAULT_KERNEL_PATTERNS[os_name]
    return tuple(p for patterns in DEFAULT_KERNEL_PATTERNS.values() for p in patterns)


def is_kernel_source(source_name: str, patterns: Iterable[str]) -> bool:
    """True when the source name matches one of the glob patterns."""
    return any(fnmatchcase(source_name, pattern) for pattern in patterns)


def filter_kernel(report: "VulnReport", patterns: Optional[Iterable[str]] = None) -> "VulnReport":
    """
    Remove findings on kernel source packages.

    Args:
        report: Scan result; left untouched
        patterns: Glob patterns matched against source names; defaults to the
            shipped list for the report's ecosystem

    Returns:
        New report with kernel findings dropped and exclude_kernel set
    """
    selected = tuple(patterns) if patterns is not None else default_kernel_patterns(report.os_name)
    kept = tuple(f for f in report.findings if not is_kernel_source(f.source_name, selected))
    dropped = len(report.findings) - len(kept)
    if dropped:
        logger.info("Dropped %d kernel findings from %s", dropped, report.name)
    return replace(
        report,
        findings=kept,
        options=replace(report.options, exclude_kernel=True, kernel_patterns=selected),
    )
