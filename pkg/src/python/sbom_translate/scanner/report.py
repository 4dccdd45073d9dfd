"""
Rendering of scan reports as JSON, text tables and CSV.
"""

import logging

import pandas as pd

from sbom_translate.models import OutputFormat
from sbom_translate.scanner.scan import VulnReport
from sbom_translate.utils import dump_json

logger = logging.getLogger(__name__)

FINDING_COLUMNS = ["package_ref", "package_name", "source_name", "cve_id", "matched_via"]


def report_to_dataframe(report: VulnReport) -> pd.DataFrame:
    """
    Convert the findings of a report to a pandas DataFrame.

    Args:
        report: Scan result

    Returns:
        DataFrame with one row per finding, in report order
    """
    if not report.findings:
        return pd.DataFrame(columns=FINDING_COLUMNS)
    data = [f.to_dict() for f in report.findings]
    return pd.DataFrame(data, columns=FINDING_COLUMNS)


def report_to_json(report: VulnReport) -> str:
    """Serialize a report as deterministic JSON."""
    return dump_json(report.to_dict())


def render_report(report: VulnReport, fmt: OutputFormat = OutputFormat.JSON) -> str:
    """
    Render a report in the requested format.

    Args:
        report: Scan result
        fmt: JSON, TABLE or CSV

    Returns:
        The rendered text, newline terminated
    """
    if fmt is OutputFormat.JSON:
        return report_to_json(report)

    df = report_to_dataframe(report)
    if fmt is OutputFormat.CSV:
        return df.to_csv(index=False)

    if df.empty:
        table = "No findings"
    else:
        table = df.to_string(index=False)
    summary = (
        f"{report.name}: {len(report.findings)} findings, "
        f"{len(report.distinct_cves)} distinct CVEs, "
        f"{len(report.vulnerable_packages)} vulnerable packages"
    )
    return f"{summary}\n{table}\n"
