"""
Package URL compliance checks for OS packages.

Findings are grouped into the issue categories of IssueCategory:
- INVALID_FORMAT: wrong type, encoding, qualifier keys or values
- INCOMPLETE_DATA: namespace, version, arch or distro missing
- INCORRECT_INFORMATION: upstream qualifier that just repeats the package itself
"""

import re
from typing import List, Optional

from sbom_translate.models.distro import DEBIAN_RELEASES
from sbom_translate.models.enums import Ecosystem, IssueCategory
from sbom_translate.models.issues import ComplianceIssue
from sbom_translate.purl.model import PackageUrl
from sbom_translate.utils import split_epoch

# Qualifiers defined for deb and apk pURLs
STANDARD_QUALIFIERS = frozenset({"arch", "distro"})

# Qualifiers defined for other types that tools attach to OS packages
TOLERATED_QUALIFIERS = frozenset({"upstream"})

_UNRESERVED = re.compile(r"^[A-Za-z0-9._~%-]*$")
_ALPINE_DISTRO = re.compile(r"^(?:\d+\.\d+|edge)$")
_AMAZON_SOURCE_SUFFIX = re.compile(r"\.src\.(?:dpkg|apk)$")


def _issue(category: IssueCategory, code: str, message: str, field: str) -> ComplianceIssue:
    return ComplianceIssue(category=category, code=code, message=message, field=field)


def is_self_referential_upstream(p: PackageUrl, upstream: Optional[str] = None) -> bool:
    """
    Check whether an upstream value merely restates the package's own identity.

    True when upstream equals the package name, or equals
    "<name>-<version>.src.dpkg" built from the package's own version.
    """
    value = upstream if upstream is not None else p.qualifier("upstream")
    if not value:
        return False
    if value == p.name:
        return True
    if not p.version:
        return False
    _, version = split_epoch(p.version)
    own = {f"{p.name}-{v}" for v in (version, p.version)}
    return _AMAZON_SOURCE_SUFFIX.sub("", value) in own and bool(_AMAZON_SOURCE_SUFFIX.search(value))


def _check_distro(value: str, ecosystem: Ecosystem) -> Optional[ComplianceIssue]:
    if ecosystem is Ecosystem.DEBIAN:
        if value not in DEBIAN_RELEASES:
            return _issue(
                IssueCategory.INVALID_FORMAT,
                "distro-not-codename",
                f"distro {value!r} is not a Debian codename such as 'bookworm'",
                "qualifiers.distro",
            )
        return None
    if not _ALPINE_DISTRO.match(value):
        return _issue(
            IssueCategory.INVALID_FORMAT,
            "distro-not-codename",
            f"distro {value!r} is not an Alpine branch such as '3.19'",
            "qualifiers.distro",
        )
    return None


def validate_purl(p: PackageUrl, ecosystem: Ecosystem) -> List[ComplianceIssue]:
    """
    Check a pURL against the pURL specification for an OS ecosystem.

    Never raises on a parsed pURL.

    Args:
        p: Parsed pURL
        ecosystem: Debian or Alpine

    Returns:
        List of ComplianceIssue, empty for a compliant pURL
    """
    issues: List[ComplianceIssue] = []

    if p.type != ecosystem.purl_type:
        issues.append(_issue(
            IssueCategory.INVALID_FORMAT,
            "nonstandard-type",
            f"type {p.type!r} should be {ecosystem.purl_type!r}",
            "type",
        ))

    if not p.namespace:
        issues.append(_issue(
            IssueCategory.INCOMPLETE_DATA,
            "missing-namespace",
            f"namespace missing, expected {ecosystem.namespace!r}",
            "namespace",
        ))
    elif p.namespace.lower() != ecosystem.namespace:
        issues.append(_issue(
            IssueCategory.INVALID_FORMAT,
            "unexpected-namespace",
            f"namespace {p.namespace!r} should be {ecosystem.namespace!r}",
            "namespace",
        ))

    if p.raw is not None:
        if not _UNRESERVED.match(p.raw.name):
            issues.append(_issue(
                IssueCategory.INVALID_FORMAT,
                "unencoded-name",
                f"name {p.raw.name!r} contains characters that must be percent-encoded",
                "name",
            ))
        if p.raw.version and "%3a" in p.raw.version.lower():
            issues.append(_issue(
                IssueCategory.INVALID_FORMAT,
                "encoded-epoch-separator",
                f"version {p.raw.version!r} encodes the epoch separator ':' as %3A",
                "version",
            ))
        if any(k != k.lower() for k in p.raw.qualifier_keys):
            issues.append(_issue(
                IssueCategory.INVALID_FORMAT,
                "uppercase-qualifier-key",
                "qualifier keys must be lowercase",
                "qualifiers",
            ))

    if not p.version:
        issues.append(_issue(
            IssueCategory.INCOMPLETE_DATA, "missing-version", "version missing", "version",
        ))

    if "epoch" in p.qualifiers and ecosystem is Ecosystem.DEBIAN:
        issues.append(_issue(
            IssueCategory.INVALID_FORMAT,
            "epoch-qualifier",
            "the epoch qualifier does not apply to Debian; prefix the version with 'epoch:'",
            "qualifiers.epoch",
        ))

    for key in sorted(p.qualifiers):
        if key in STANDARD_QUALIFIERS or key in TOLERATED_QUALIFIERS:
            continue
        if key == "epoch" and ecosystem is Ecosystem.DEBIAN:
            continue
        issues.append(_issue(
            IssueCategory.INVALID_FORMAT,
            "unknown-qualifier",
            f"qualifier {key!r} is not defined for {ecosystem.purl_type!r} pURLs",
            f"qualifiers.{key}",
        ))

    arch = p.qualifier("arch")
    if not arch:
        issues.append(_issue(
            IssueCategory.INCOMPLETE_DATA, "missing-arch", "arch qualifier missing", "qualifiers.arch",
        ))
    elif arch != arch.lower():
        issues.append(_issue(
            IssueCategory.INVALID_FORMAT,
            "uppercase-qualifier",
            f"arch {arch!r} must be lowercase",
            "qualifiers.arch",
        ))

    distro = p.qualifier("distro")
    if not distro:
        issues.append(_issue(
            IssueCategory.INCOMPLETE_DATA, "missing-distro", "distro qualifier missing", "qualifiers.distro",
        ))
    elif distro != distro.lower():
        issues.append(_issue(
            IssueCategory.INVALID_FORMAT,
            "uppercase-qualifier",
            f"distro {distro!r} must be lowercase",
            "qualifiers.distro",
        ))
    elif issue := _check_distro(distro, ecosystem):
        issues.append(issue)

    if is_self_referential_upstream(p):
        issues.append(_issue(
            IssueCategory.INCORRECT_INFORMATION,
            "self-referential-upstream",
            f"upstream {p.qualifier('upstream')!r} repeats the package itself instead of naming its source",
            "qualifiers.upstream",
        ))

    return issues
