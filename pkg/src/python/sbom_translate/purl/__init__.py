"""Package URL parsing, serialization, validation and canonicalization."""

from sbom_translate.purl.canonical import (
    distro_of,
    ecosystem_of,
    purl_to_canonical,
    split_source_package,
)
from sbom_translate.purl.codec import format_purl, parse_purl, serialize_purl
from sbom_translate.purl.model import PackageUrl, RawPurlText
from sbom_translate.purl.validate import is_self_referential_upstream, validate_purl

__all__ = [
    "PackageUrl",
    "RawPurlText",
    "distro_of",
    "ecosystem_of",
    "format_purl",
    "is_self_referential_upstream",
    "parse_purl",
    "purl_to_canonical",
    "serialize_purl",
    "split_source_package",
    "validate_purl",
]
