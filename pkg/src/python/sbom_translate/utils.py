"""
Utility functions for sbom-translate.
"""

import hashlib
import json
import logging
import os
import re
from datetime import datetime, timezone
from typing import Any, Optional, Tuple

logger = logging.getLogger(__name__)

SOURCE_INFO_PREFIX = "built package from:"

_EPOCH_PATTERN = re.compile(r"^(\d+):(.+)$")
_CVE_PATTERN = re.compile(r"^CVE-(\d{4})-\d{4,}$")


def split_epoch(version: str) -> Tuple[int, str]:
    """
    Split a Debian version into epoch and the rest.

    Args:
        version: Version such as "2:1.5.8-1" or "1.5.8-1"

    Returns:
        Tuple of (epoch, version without epoch); epoch is 0 when absent
    """
    match = _EPOCH_PATTERN.match(version)
    if match:
        return int(match.group(1)), match.group(2)
    return 0, version


def join_epoch(epoch: int, version: str) -> str:
    """Prefix a nonzero epoch to a version ("2", "1.5.8-1" -> "2:1.5.8-1")."""
    return f"{epoch}:{version}" if epoch else version


def parse_source_info(source_info: Optional[str]) -> Optional[Tuple[str, str]]:
    """
    Parse a Trivy style `sourceInfo` value.

    Supported forms:
    - "built package from: util-linux 2:2.38.1-5+deb12u1"
    - "built package from: shadow" (no version)

    Args:
        source_info: The SPDX sourceInfo string

    Returns:
        Tuple of (source name, source version or ""), or None if the text is
        not in this form
    """
    if not source_info:
        return None
    text = source_info.strip()
    if not text.lower().startswith(SOURCE_INFO_PREFIX):
        return None
    parts = text[len(SOURCE_INFO_PREFIX):].split()
    if not parts:
        return None
    return parts[0], parts[1] if len(parts) > 1 else ""


def format_source_info(source_name: str, source_version: Optional[str]) -> str:
    """Build a Trivy style `sourceInfo` value."""
    if source_version:
        return f"{SOURCE_INFO_PREFIX} {source_name} {source_version}"
    return f"{SOURCE_INFO_PREFIX} {source_name}"


def cve_year(cve_id: str) -> Optional[int]:
    """
    Extract the assignment year from a CVE identifier.

    Returns:
        The year, or None if the id is not a CVE id
    """
    match = _CVE_PATTERN.match(cve_id)
    return int(match.group(1)) if match else None


def is_cve_id(value: str) -> bool:
    """Check whether a string is a CVE identifier."""
    return _CVE_PATTERN.match(value) is not None


def stable_id(*parts: str, length: int = 16) -> str:
    """
    Derive a short deterministic identifier from its parts.

    Args:
        parts: Strings identifying the object
        length: Number of hex digits to keep

    Returns:
        Hex digest prefix of the sha256 of the joined parts
    """
    digest = hashlib.sha256("\x1f".join(parts).encode("utf-8")).hexdigest()
    return digest[:length]


def creation_timestamp() -> str:
    """
    SPDX `created` value.

    Taken from SOURCE_DATE_EPOCH when set so output is reproducible,
    otherwise the Unix epoch.
    """
    epoch = 0
    if value := os.environ.get("SOURCE_DATE_EPOCH"):
        try:
            epoch = int(value)
        except ValueError:
            logger.warning("Ignoring invalid SOURCE_DATE_EPOCH %r", value)
    return datetime.fromtimestamp(epoch, tz=timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def dump_json(data: Any) -> str:
    """Serialize to stable JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
