"""
Vulnerability queries against a CveDatabase.
"""

import logging
from typing import FrozenSet, Optional, Union

from sbom_translate.models.enums import CveStatus, Ecosystem
from sbom_translate.tracker.models import CveDatabase, CveEntry
from sbom_translate.verscmp import is_vulnerable

logger = logging.getLogger(__name__)


def entry_applies(
    entry: CveEntry,
    os_name: Ecosystem,
    source_version: str,
    include_unimportant: bool = False,
) -> bool:
    """
    Decide whether one tracker entry affects an installed source version.

    Raises:
        UnparsableVersion: If a version cannot be compared
    """
    if entry.status is CveStatus.NOT_AFFECTED:
        return False
    if entry.status is CveStatus.UNIMPORTANT and not include_unimportant:
        return False
    if entry.status is CveStatus.OPEN or not entry.fixed_version:
        return True
    return is_vulnerable(source_version, entry.fixed_version, os_name)


def query_cves(
    db: CveDatabase,
    os_name: Union[Ecosystem, str],
    release: str,
    source_name: str,
    source_version: str,
    cutoff_year: Optional[int] = None,
    include_unimportant: bool = False,
) -> FrozenSet[str]:
    """
    CVEs that apply to a source package version in a release.

    An entry applies when it is open, or resolved with a fixed version newer
    than `source_version`. Unimportant entries count only when
    `include_unimportant` is set; not-affected entries never do.

    Args:
        db: Loaded tracker data
        os_name: Ecosystem or its name
        release: Tracker release key ("bookworm", "3.20")
        source_name: Source package name
        source_version: Installed source version
        cutoff_year: Drop CVEs assigned after this year
        include_unimportant: Also report entries marked unimportant

    Returns:
        Frozen set of CVE ids

    Raises:
        UnparsableVersion: If a version cannot be compared
    """
    eco = os_name if isinstance(os_name, Ecosystem) else Ecosystem.from_string(os_name)
    found = set()
    for entry in db.lookup(eco, release, source_name):
        if cutoff_year is not None and entry.year > cutoff_year:
            continue
        if entry_applies(entry, eco, source_version, include_unimportant):
            found.add(entry.id)
    return frozenset(found)
