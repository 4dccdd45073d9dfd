"""
Package-set comparison between SBOMs.
"""

from typing import Any, Dict, List, Set, Tuple

from sbom_translate.metrics.classification import jaccard
from sbom_translate.models import CanonicalSbom
from sbom_translate.spdx import SpdxDocument, purl_packages

IdentityKey = Tuple[str, str, int, str, str]


def identity_keys(sbom: CanonicalSbom) -> Set[IdentityKey]:
    """Identity tuples of the non-synthetic packages of an SBOM."""
    return {p.identity_key for p in sbom.packages if not p.is_source_synthetic}


def package_jaccard(a: CanonicalSbom, b: CanonicalSbom) -> float:
    """Jaccard index over (source, name, epoch, version, arch) after normalization."""
    return jaccard(identity_keys(a), identity_keys(b))


def purl_jaccard(doc_a: SpdxDocument, doc_b: SpdxDocument) -> float:
    """Jaccard index over the raw pURL strings of two documents."""
    return jaccard(
        {purl for _, purl in purl_packages(doc_a)},
        {purl for _, purl in purl_packages(doc_b)},
    )


def package_delta(a: CanonicalSbom, b: CanonicalSbom) -> Dict[str, List[Dict[str, Any]]]:
    """
    Packages present in only one of two SBOMs.

    Returns:
        {"only_a": [...], "only_b": [...]} with identity fields, sorted
    """
    keys_a, keys_b = identity_keys(a), identity_keys(b)

    def rows(keys: Set[IdentityKey]) -> List[Dict[str, Any]]:
        return [
            {"source_name": s, "name": n, "epoch": e, "version": v, "arch": arch}
            for s, n, e, v, arch in sorted(keys)
        ]

    return {"only_a": rows(keys_a - keys_b), "only_b": rows(keys_b - keys_a)}
