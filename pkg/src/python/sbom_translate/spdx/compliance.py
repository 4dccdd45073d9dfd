"""
Document-wide compliance report.

Runs the pURL checks over every package and adds format-reliance findings:
places where a consumer will only work if optional SPDX fields are present.
"""

import logging
from typing import List, Optional, Tuple

from sbom_translate.errors import MalformedPurl, UnknownEcosystem
from sbom_translate.models.enums import Ecosystem, IssueCategory
from sbom_translate.models.issues import ComplianceIssue
from sbom_translate.purl.canonical import ecosystem_of
from sbom_translate.purl.codec import parse_purl
from sbom_translate.purl.validate import validate_purl
from sbom_translate.spdx.document import SpdxDocument
from sbom_translate.spdx.os_marker import find_os_marker, is_os_marker
from sbom_translate.utils import parse_source_info

logger = logging.getLogger(__name__)

ElementIssue = Tuple[str, ComplianceIssue]


def _reliance(code: str, message: str, field: str) -> ComplianceIssue:
    return ComplianceIssue(IssueCategory.FORMAT_RELIANCE, code, message, field)


def format_reliance_issues(doc: SpdxDocument) -> List[ComplianceIssue]:
    """
    Report optional SPDX fields that specific consumers depend on.

    - Trivy needs the OS-marker package and "built package from:" sourceInfo
    - Docker Scout needs primaryPackagePurpose on every package
    """
    packages = [p for p in doc.packages if not is_os_marker(p)]
    if not packages:
        return []
    issues: List[ComplianceIssue] = []

    if find_os_marker(doc) is None:
        issues.append(_reliance(
            "missing-os-marker",
            "no 'Class: os-pkgs' operating-system package; Trivy will not scan OS packages",
            "packages.attributionTexts",
        ))
    without_source = sum(1 for p in packages if parse_source_info(p.source_info) is None)
    if without_source:
        issues.append(_reliance(
            "missing-source-info",
            f"{without_source} of {len(packages)} packages lack 'built package from:' sourceInfo; "
            "Trivy cannot find their source package",
            "packages.sourceInfo",
        ))
    without_purpose = sum(1 for p in packages if not p.primary_package_purpose)
    if without_purpose:
        issues.append(_reliance(
            "missing-package-purpose",
            f"{without_purpose} of {len(packages)} packages lack primaryPackagePurpose; "
            "Docker Scout ignores them",
            "packages.primaryPackagePurpose",
        ))
    return issues


def purl_issues(doc: SpdxDocument, ecosystem: Optional[Ecosystem] = None) -> List[ElementIssue]:
    """
    Validate every pURL in a document.

    Args:
        doc: SPDX document
        ecosystem: Ecosystem to validate against; inferred per package when None

    Returns:
        List of (SPDXID, ComplianceIssue); document-level findings use the
        document SPDXID
    """
    results: List[ElementIssue] = []
    for pkg in doc.packages:
        if not pkg.purl or is_os_marker(pkg):
            continue
        try:
            purl = parse_purl(pkg.purl)
            eco = ecosystem or ecosystem_of(purl)
        except MalformedPurl as e:
            results.append((pkg.spdx_id, ComplianceIssue(
                IssueCategory.INVALID_FORMAT, "unparsable-purl", str(e), "purl",
            )))
            continue
        except UnknownEcosystem:
            logger.info("Skipping non-OS package %s (%s)", pkg.spdx_id, pkg.purl)
            continue
        results.extend((pkg.spdx_id, issue) for issue in validate_purl(purl, eco))

    results.extend((doc.spdx_id, issue) for issue in format_reliance_issues(doc))
    return results
