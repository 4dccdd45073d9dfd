"""
Parser for the apk installed database (/lib/apk/db/installed).

Records are blank-line separated; every line is "<letter>:<value>":

    P:wget
    V:1.24.5-r0
    A:x86_64
    o:wget
"""

import logging
from typing import Dict, Iterator, List, Tuple

from sbom_translate.errors import MalformedRecord
from sbom_translate.models.package import OsPackage

logger = logging.getLogger(__name__)


def _iter_records(text: str) -> Iterator[List[Tuple[str, str]]]:
    record: List[Tuple[str, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            if record:
                yield record
            record = []
            continue
        if len(line) < 2 or line[1] != ":":
            raise MalformedRecord(f"Line {lineno}: expected 'K:value', got {line!r}")
        record.append((line[0], line[2:]))
    if record:
        yield record


def parse_apk_installed(text: str) -> List[OsPackage]:
    """
    Parse an apk installed database.

    Args:
        text: Content of /lib/apk/db/installed

    Returns:
        List of OsPackage in file order; source_name is the origin ('o'),
        defaulting to the package name

    Raises:
        MalformedRecord: If a record lacks P or V or a line is malformed
    """
    packages: List[OsPackage] = []
    for record in _iter_records(text):
        # Keys like F/R (files) repeat; the package keys appear once
        fields: Dict[str, str] = {}
        provides: List[str] = []
        for key, value in record:
            if key == "p":
                provides.extend(value.split())
            elif key not in fields:
                fields[key] = value

        name = fields.get("P")
        version = fields.get("V")
        if not name or not version:
            raise MalformedRecord(f"Record without P or V: {name or '?'}")

        origin = fields.get("o") or None
        packages.append(OsPackage(
            name=name,
            version=version,
            arch=fields.get("A", ""),
            source_name=origin or name,
            source_version=version,
            origin=origin,
            provides=tuple(p.split("=")[0] for p in provides),
        ))

    logger.info("Parsed %d installed apk packages", len(packages))
    return packages
