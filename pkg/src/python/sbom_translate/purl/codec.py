"""
Package URL parsing and serialization.

PURL format: pkg:<type>/<namespace>/<name>@<version>?<qualifiers>#<subpath>
"""

import logging
import re
from typing import Dict, List, Optional, Sequence
from urllib.parse import quote, unquote

from packageurl import PackageURL

from sbom_translate.errors import MalformedPurl
from sbom_translate.purl.model import PackageUrl, RawPurlText

logger = logging.getLogger(__name__)

PURL_SCHEME = "pkg:"

_TYPE_PATTERN = re.compile(r"^[a-z.+_-][a-z0-9.+_-]*$")
_KEY_PATTERN = re.compile(r"^[a-z._-][a-z0-9._-]*$")


def parse_purl(text: str) -> PackageUrl:
    """
    Parse a Package URL string.

    Namespace, name, version, qualifier values and subpath are percent-decoded;
    qualifier pairs are split on '&' and key/value on the first '='.

    Args:
        text: The pURL, e.g. "pkg:deb/debian/bash@5.2.15-2?arch=amd64"

    Returns:
        PackageUrl with decoded components

    Raises:
        MalformedPurl: If the scheme is missing, the name or version is empty,
            the type or a qualifier key is invalid, a qualifier key repeats, or
            the text is otherwise not a structurally valid Package URL
    """
    if not isinstance(text, str) or text[:len(PURL_SCHEME)].lower() != PURL_SCHEME:
        raise MalformedPurl(f"Missing 'pkg:' scheme: {text!r}")

    body = text[len(PURL_SCHEME):].strip()
    remainder, _, subpath_text = body.partition("#")
    remainder, has_qualifiers, qualifier_text = remainder.partition("?")
    remainder = remainder.strip("/")
    if not remainder:
        raise MalformedPurl(f"Missing type and name: {text!r}")

    pkg_type, _, path = remainder.partition("/")
    pkg_type = pkg_type.lower()
    if not _TYPE_PATTERN.match(pkg_type):
        raise MalformedPurl(f"Invalid pURL type {pkg_type!r} in {text!r}")

    # '@' belongs to the version only when no '/' follows it (npm scopes use '@')
    version_text = None
    at = path.rfind("@")
    if at >= 0 and "/" not in path[at:]:
        path, version_text = path[:at], path[at + 1:]
        if not version_text:
            raise MalformedPurl(f"Empty version after '@': {text!r}")

    namespace_text, _, raw_name = path.rpartition("/")
    name = unquote(raw_name)
    if not name:
        raise MalformedPurl(f"Empty name: {text!r}")
    namespace = "/".join(unquote(s) for s in namespace_text.split("/") if s) or None

    qualifiers: Dict[str, str] = {}
    raw_keys: List[str] = []
    if has_qualifiers:
        for pair in qualifier_text.split("&"):
            if not pair:
                continue
            if "=" not in pair:
                raise MalformedPurl(f"Qualifier without '=' ({pair!r}) in {text!r}")
            raw_key, value = pair.split("=", 1)
            key = raw_key.lower()
            if not _KEY_PATTERN.match(key):
                raise MalformedPurl(f"Invalid qualifier key {raw_key!r} in {text!r}")
            if key in qualifiers:
                raise MalformedPurl(f"Duplicate qualifier key {key!r} in {text!r}")
            qualifiers[key] = unquote(value)
            raw_keys.append(raw_key)

    subpath = "/".join(
        unquote(s) for s in subpath_text.split("/") if s and s not in (".", "..")
    ) or None

    try:
        PackageURL.from_string(PURL_SCHEME + body)
    except ValueError as e:
        raise MalformedPurl(f"{e}: {text!r}") from e

    return PackageUrl(
        type=pkg_type,
        name=name,
        namespace=namespace,
        version=unquote(version_text) if version_text is not None else None,
        qualifiers=qualifiers,
        subpath=subpath,
        raw=RawPurlText(text, raw_name, version_text, tuple(raw_keys)),
    )


def format_purl(
    p: PackageUrl,
    qualifier_order: Optional[Sequence[str]] = None,
    encode_name: bool = True,
    encode_epoch_separator: bool = False,
) -> str:
    """
    Serialize a PackageUrl, optionally in the shape a specific tool writes.

    Args:
        p: The pURL
        qualifier_order: Keys to write first, in this order; the rest follow
            sorted. None means fully sorted.
        encode_name: Percent-encode reserved characters such as '+' in the
            name and qualifier values. Some tools write them raw.
        encode_epoch_separator: Write the ':' of the version as "%3A"

    Returns:
        The pURL text
    """
    safe_text = "" if encode_name else "+"
    parts = [PURL_SCHEME, p.type.lower(), "/"]
    if p.namespace:
        parts.append("/".join(quote(s, safe="") for s in p.namespace.split("/")))
        parts.append("/")
    parts.append(quote(p.name, safe=safe_text))

    if p.version is not None:
        version_safe = safe_text if encode_epoch_separator else ":" + safe_text
        parts.append("@" + quote(p.version, safe=version_safe))

    if p.qualifiers:
        order = list(qualifier_order or ())
        keys = [k for k in order if k in p.qualifiers]
        keys += sorted(k for k in p.qualifiers if k not in keys)
        pairs = [f"{k}={quote(p.qualifiers[k], safe=':' + safe_text)}" for k in keys]
        parts.append("?" + "&".join(pairs))

    if p.subpath:
        parts.append("#" + "/".join(quote(s, safe="") for s in p.subpath.split("/") if s))

    return "".join(parts)


def serialize_purl(p: PackageUrl) -> str:
    """
    Serialize a PackageUrl in canonical form.

    The type is lowercased, reserved characters in the name are
    percent-encoded ("++" -> "%2B%2B"), the ':' of the version is left as is
    and qualifiers are sorted by key.
    """
    return format_purl(p)
