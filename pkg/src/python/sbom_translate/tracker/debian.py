"""
Loader for the Debian Security Tracker JSON export.

Shape of the export (https://security-tracker.debian.org/tracker/data/json):

    {
      "shadow": {
        "CVE-2023-29383": {
          "releases": {
            "bullseye": {"status": "open", "urgency": "low", ...},
            "bookworm": {"status": "resolved", "fixed_version": "0", ...}
          }
        }
      }
    }

Mapping onto CveStatus:
- urgency "unimportant" -> UNIMPORTANT (fixed_version kept)
- status "resolved" with fixed_version "0" -> NOT_AFFECTED
- status "resolved" -> RESOLVED
- anything else ("open", "undetermined") -> OPEN
"""

import json
import logging
from typing import Any, Dict, List, Optional, Tuple

from sbom_translate.errors import MalformedTrackerData
from sbom_translate.models.enums import CveStatus, Ecosystem
from sbom_translate.tracker.models import CveDatabase, CveEntry, DbKey
from sbom_translate.utils import is_cve_id

logger = logging.getLogger(__name__)

NOT_AFFECTED_VERSION = "0"


def _status(release_data: Dict[str, Any]) -> Tuple[CveStatus, Optional[str]]:
    status = str(release_data.get("status", "open")).lower()
    fixed = release_data.get("fixed_version")
    urgency = str(release_data.get("urgency", "")).lower()

    if status in ("not-affected", "not_affected") or (status == "resolved" and fixed == NOT_AFFECTED_VERSION):
        return CveStatus.NOT_AFFECTED, fixed
    if urgency == "unimportant":
        return CveStatus.UNIMPORTANT, fixed
    if status == "resolved":
        if not fixed:
            return CveStatus.NOT_AFFECTED, None
        return CveStatus.RESOLVED, fixed
    return CveStatus.OPEN, None


def load_debian_tracker(text: str, metadata: Optional[Dict[str, Any]] = None) -> CveDatabase:
    """
    Load a Debian Security Tracker JSON snapshot.

    Args:
        text: JSON export content
        metadata: Provenance to attach (snapshot file, commit, date)

    Returns:
        CveDatabase with one entry per (source, release, CVE)

    Raises:
        MalformedTrackerData: If the JSON does not have the export's shape
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedTrackerData(f"Debian tracker snapshot is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise MalformedTrackerData("Debian tracker snapshot must be a JSON object keyed by source package")

    items: List[Tuple[DbKey, CveEntry]] = []
    skipped = 0
    for source, cves in data.items():
        if not isinstance(cves, dict):
            raise MalformedTrackerData(f"Entry for source package {source!r} is not an object")
        for cve_id, cve_data in cves.items():
            if not is_cve_id(cve_id):
                skipped += 1
                continue
            releases = (cve_data or {}).get("releases", {}) if isinstance(cve_data, dict) else None
            if not isinstance(releases, dict):
                raise MalformedTrackerData(f"{source}/{cve_id}: 'releases' is not an object")
            for release, release_data in releases.items():
                if not isinstance(release_data, dict):
                    raise MalformedTrackerData(f"{source}/{cve_id}/{release}: release entry is not an object")
                status, fixed = _status(release_data)
                items.append((
                    (Ecosystem.DEBIAN, release, source),
                    CveEntry(cve_id, status, fixed, release_data.get("urgency")),
                ))

    if skipped:
        logger.info("Skipped %d non-CVE tracker identifiers", skipped)
    db = CveDatabase.from_entries(items, metadata={"tracker": "debian", **(metadata or {})})
    logger.info("Loaded %d Debian tracker entries for %d source packages", len(db), len(data))
    return db
