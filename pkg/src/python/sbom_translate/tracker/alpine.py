"""
Loader for Alpine secdb snapshots (https://secdb.alpinelinux.org/v3.20/main.json).

One file per branch and repository:

    {
      "distroversion": "v3.20",
      "reponame": "main",
      "packages": [
        {"pkg": {"name": "wget", "secfixes": {"1.21.1-r1": ["CVE-2021-31879"]}}}
      ]
    }

Each secfixes key is the first fixed version; the special key "0" lists
CVEs the package was never affected by. The same data is published as
YAML, which is accepted too.
"""

import json
import logging
from typing import Any, Dict, List, Optional, Tuple

import yaml

from sbom_translate.errors import MalformedTrackerData
from sbom_translate.models.enums import CveStatus, Ecosystem
from sbom_translate.tracker.models import CveDatabase, CveEntry, DbKey
from sbom_translate.utils import is_cve_id

logger = logging.getLogger(__name__)

NEVER_AFFECTED_KEY = "0"


def _load_document(text: str) -> Dict[str, Any]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        try:
            # BaseLoader keeps version keys such as 1.0 as strings
            data = yaml.load(text, Loader=yaml.BaseLoader)
        except yaml.YAMLError as e:
            raise MalformedTrackerData(f"secdb snapshot is neither JSON nor YAML: {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise MalformedTrackerData("secdb snapshot must be an object")
    return data


def load_alpine_secdb(
    text: str,
    release: Optional[str] = None,
    metadata: Optional[Dict[str, Any]] = None,
) -> CveDatabase:
    """
    Load one Alpine secdb branch file.

    Args:
        text: secdb JSON or YAML
        release: Branch to file the entries under; defaults to the file's
            distroversion without its "v" prefix ("v3.20" -> "3.20")
        metadata: Provenance to attach

    Returns:
        CveDatabase; entries are RESOLVED with the secfixes version, or
        NOT_AFFECTED for the "0" key

    Raises:
        MalformedTrackerData: If the document does not have the secdb shape
    """
    data = _load_document(text)
    if not data:
        return CveDatabase(metadata={"tracker": "alpine", **(metadata or {})})

    branch = release or str(data.get("distroversion", "")).lstrip("v")
    if not branch:
        raise MalformedTrackerData("secdb snapshot has no distroversion and no release was given")
    packages = data.get("packages") or []
    if not isinstance(packages, list):
        raise MalformedTrackerData("secdb 'packages' is not a list")

    items: List[Tuple[DbKey, CveEntry]] = []
    for item in packages:
        pkg = item.get("pkg") if isinstance(item, dict) else None
        if not isinstance(pkg, dict) or not pkg.get("name"):
            raise MalformedTrackerData(f"secdb package entry without pkg.name: {item!r}")
        secfixes = pkg.get("secfixes") or {}
        if not isinstance(secfixes, dict):
            raise MalformedTrackerData(f"secfixes of {pkg['name']} is not a mapping")

        for fixed_version, ids in secfixes.items():
            fixed = str(fixed_version)
            for raw in ids or ():
                for cve_id in str(raw).split():
                    if not is_cve_id(cve_id):
                        continue
                    if fixed == NEVER_AFFECTED_KEY:
                        entry = CveEntry(cve_id, CveStatus.NOT_AFFECTED, None)
                    else:
                        entry = CveEntry(cve_id, CveStatus.RESOLVED, fixed)
                    items.append(((Ecosystem.ALPINE, branch, pkg["name"]), entry))

    db = CveDatabase.from_entries(
        items,
        metadata={"tracker": "alpine", "release": branch, "repository": data.get("reponame"), **(metadata or {})},
    )
    logger.info("Loaded %d secdb entries for Alpine %s", len(db), branch)
    return db
