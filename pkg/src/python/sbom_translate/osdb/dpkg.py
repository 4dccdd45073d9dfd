"""
Parser for the dpkg status database (/var/lib/dpkg/status).

The file is a sequence of RFC-822 style stanzas separated by blank lines:

    Package: passwd
    Status: install ok installed
    Architecture: amd64
    Source: shadow (1:4.13+dfsg1-1)
    Version: 1:4.13+dfsg1-1+b1
    Description: change and administer password and group data
     This package includes passwd, chsh, chfn, ...
"""

import logging
import re
from typing import Dict, Iterator, List

from sbom_translate.errors import MalformedStanza
from sbom_translate.models.package import OsPackage

logger = logging.getLogger(__name__)

_FIELD_PATTERN = re.compile(r"^(?P<key>[A-Za-z0-9][A-Za-z0-9_-]*):[ \t]*(?P<value>.*)$")
_SOURCE_PATTERN = re.compile(r"^(?P<name>\S+?)(?:\s+\((?P<version>[^)]+)\))?$")


def _iter_stanzas(text: str) -> Iterator[Dict[str, str]]:
    """
    Yield each stanza as a field -> value mapping.

    Raises:
        MalformedStanza: On a continuation line before the first field or a
            line that is neither a field nor a continuation
    """
    fields: Dict[str, str] = {}
    last_key = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            if fields:
                yield fields
            fields, last_key = {}, None
            continue
        if line[0] in " \t":
            if last_key is None:
                raise MalformedStanza(f"Line {lineno}: continuation line before the first field")
            fields[last_key] += "\n" + line.strip()
            continue
        match = _FIELD_PATTERN.match(line)
        if not match:
            raise MalformedStanza(f"Line {lineno}: expected 'Field: value', got {line!r}")
        last_key = match.group("key")
        fields[last_key] = match.group("value").strip()
    if fields:
        yield fields


def is_installed(status: str) -> bool:
    """
    Check a Status field ("install ok installed").

    Only the last word, the package state, is considered.
    """
    words = status.split()
    return bool(words) and words[-1] == "installed"


def parse_dpkg_status(text: str) -> List[OsPackage]:
    """
    Parse a dpkg status file.

    Stanzas whose Status does not end in "installed" (for example
    "deinstall ok config-files") are skipped; stanzas without a Status field
    are treated as installed.

    Args:
        text: Content of /var/lib/dpkg/status

    Returns:
        List of OsPackage in file order

    Raises:
        MalformedStanza: If a stanza is malformed or lacks Package or Version
    """
    packages: List[OsPackage] = []
    skipped = 0
    for fields in _iter_stanzas(text):
        name = fields.get("Package")
        version = fields.get("Version")
        if not name or not version:
            raise MalformedStanza(
                f"Stanza without Package or Version: {name or fields.get('Source') or '?'}"
            )
        if "Status" in fields and not is_installed(fields["Status"]):
            skipped += 1
            continue

        source_name, source_version = name, version
        if source := fields.get("Source"):
            match = _SOURCE_PATTERN.match(source)
            if match:
                source_name = match.group("name")
                source_version = match.group("version") or version
            else:
                logger.warning("Unparsable Source field for %s: %r", name, source)

        provides = tuple(
            p.split("(")[0].strip() for p in fields.get("Provides", "").split(",") if p.strip()
        )
        packages.append(OsPackage(
            name=name,
            version=version,
            arch=fields.get("Architecture", ""),
            source_name=source_name,
            source_version=source_version,
            provides=provides,
        ))

    if skipped:
        logger.info("Skipped %d dpkg stanzas that are not installed", skipped)
    logger.info("Parsed %d installed dpkg packages", len(packages))
    return packages
