"""Dialect detection, normalization and emission: the SBOM translation layer."""

from typing import List, Optional, Tuple

from sbom_translate.dialect.detect import (
    TOOL_CREATOR,
    detect_dialect,
    dialect_from_creation_info,
    is_own_document,
)
from sbom_translate.dialect.emit import emit, emit_with_warnings, package_spdx_id
from sbom_translate.dialect.normalize import OsDb, normalize
from sbom_translate.models.enums import Dialect
from sbom_translate.models.issues import TranslationWarning
from sbom_translate.spdx.document import SpdxDocument


def translate(
    doc: SpdxDocument, target: Dialect, os_db: Optional[OsDb] = None
) -> Tuple[SpdxDocument, List[TranslationWarning]]:
    """
    Detect, normalize and re-emit an SPDX document for another consumer.

    Args:
        doc: Parsed SpdxDocument
        target: Dialect to emit
        os_db: Optional binary name -> OsPackage mapping

    Returns:
        Tuple of (SpdxDocument, list of TranslationWarning)
    """
    source = detect_dialect(doc)
    canonical = normalize(doc, source, os_db=os_db)
    out, warnings = emit_with_warnings(canonical, target)
    return out, list(canonical.lossiness) + warnings


__all__ = [
    "TOOL_CREATOR",
    "detect_dialect",
    "dialect_from_creation_info",
    "emit",
    "emit_with_warnings",
    "is_own_document",
    "normalize",
    "package_spdx_id",
    "translate",
]
