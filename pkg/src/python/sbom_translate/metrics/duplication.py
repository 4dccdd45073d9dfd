"""
How scanners repeat CVEs across packages.

In per-binary reports every binary of a source carries the source's CVEs.
These helpers measure that repetition: how many packages share an identical
CVE set, and which findings are repeats.
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, List, Set

import pandas as pd

from sbom_translate.scanner import VulnReport

SOURCE_ONLY = "source_only"
DUPLICATED_SAME_SOURCE = "duplicated_same_source"
SHARED_ACROSS_SOURCES = "shared_across_sources"
BREAKDOWN_CATEGORIES = (SOURCE_ONLY, DUPLICATED_SAME_SOURCE, SHARED_ACROSS_SOURCES)


@dataclass(frozen=True)
class DuplicationStats:
    """
    Sizes of groups of vulnerable packages with identical CVE sets.

    Attributes:
        mean: Average group size
        stderr: Standard error of the mean (0 with fewer than two groups)
        groups: Number of distinct CVE sets
        packages: Number of vulnerable packages
    """
    mean: float
    stderr: float
    groups: int
    packages: int

    def to_dict(self) -> Dict[str, Any]:
        return {"mean": self.mean, "stderr": self.stderr, "groups": self.groups, "packages": self.packages}


def cve_sets(report: VulnReport) -> Dict[str, FrozenSet[str]]:
    """Package ref -> CVE ids reported for it."""
    sets: Dict[str, Set[str]] = defaultdict(set)
    for finding in report.findings:
        sets[finding.package_ref].add(finding.cve_id)
    return {ref: frozenset(ids) for ref, ids in sets.items()}


def duplication_stats(report: VulnReport) -> DuplicationStats:
    """
    Average number of vulnerable packages that share one exact CVE set.

    Args:
        report: Per-binary scan result

    Returns:
        DuplicationStats; all zero for a report without findings
    """
    per_package = cve_sets(report)
    if not per_package:
        return DuplicationStats(0.0, 0.0, 0, 0)

    # one label per distinct CVE set
    labels = pd.Series([",".join(sorted(ids)) for ids in per_package.values()])
    groups = labels.value_counts()
    stderr = groups.sem()
    return DuplicationStats(
        mean=float(groups.mean()),
        stderr=0.0 if pd.isna(stderr) else float(stderr),
        groups=len(groups),
        packages=len(per_package),
    )


def cve_breakdown(report: VulnReport) -> Dict[str, float]:
    """
    Classify each finding and return the share of each class in percent.

    - source_only: the one finding of a CVE for its source; the binary named
      after the source carries it when present, otherwise the first binary
    - duplicated_same_source: the same CVE repeated on another binary of
      that source
    - shared_across_sources: the CVE is reported under more than one source

    Args:
        report: Scan result in either dedupe mode

    Returns:
        Category -> percentage; all zero for a report without findings
    """
    if not report.findings:
        return {category: 0.0 for category in BREAKDOWN_CATEGORIES}

    sources_per_cve: Dict[str, Set[str]] = defaultdict(set)
    by_source_cve: Dict[tuple, List[str]] = defaultdict(list)
    for finding in report.findings:
        sources_per_cve[finding.cve_id].add(finding.source_name)
        by_source_cve[(finding.source_name, finding.cve_id)].append(finding.package_name)

    counts = {category: 0 for category in BREAKDOWN_CATEGORIES}
    for (source, cve_id), names in by_source_cve.items():
        if len(sources_per_cve[cve_id]) > 1:
            counts[SHARED_ACROSS_SOURCES] += len(names)
            continue
        counts[SOURCE_ONLY] += 1
        counts[DUPLICATED_SAME_SOURCE] += len(names) - 1

    total = len(report.findings)
    return {category: 100.0 * counts[category] / total for category in BREAKDOWN_CATEGORIES}
