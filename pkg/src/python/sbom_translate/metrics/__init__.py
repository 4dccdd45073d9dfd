"""Comparison metrics for SBOMs and vulnerability reports."""

from sbom_translate.metrics.classification import (
    METRIC_COLUMNS,
    Metrics,
    compare_to_truth,
    jaccard,
    metrics_to_dataframe,
)
from sbom_translate.metrics.duplication import (
    BREAKDOWN_CATEGORIES,
    DuplicationStats,
    cve_breakdown,
    cve_sets,
    duplication_stats,
)
from sbom_translate.metrics.packages import (
    identity_keys,
    package_delta,
    package_jaccard,
    purl_jaccard,
)

__all__ = [
    "BREAKDOWN_CATEGORIES",
    "DuplicationStats",
    "METRIC_COLUMNS",
    "Metrics",
    "compare_to_truth",
    "cve_breakdown",
    "cve_sets",
    "duplication_stats",
    "identity_keys",
    "jaccard",
    "metrics_to_dataframe",
    "package_delta",
    "package_jaccard",
    "purl_jaccard",
]
