"""
PackageUrl model.

Components are stored decoded. The spelling a pURL was parsed from is kept
separately (and ignored by equality) so validators can tell "%2B%2B" from
"++" or "2:" from "2%3A".
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple


@dataclass(frozen=True)
class RawPurlText:
    """
    The textual form of the parts of a pURL whose spelling matters.

    Attributes:
        text: The full pURL string
        name: Name segment before decoding
        version: Version before decoding
        qualifier_keys: Qualifier keys in document order, before lowercasing
    """
    text: str
    name: str
    version: Optional[str]
    qualifier_keys: Tuple[str, ...] = ()


@dataclass(frozen=True)
class PackageUrl:
    """
    A parsed Package URL, "pkg:type/namespace/name@version?qualifiers#subpath".

    Attributes:
        type: Lowercase package type ("deb", "apk")
        name: Decoded package name ("python3-magics++")
        namespace: Decoded namespace ("debian"), possibly with '/' separators
        version: Decoded version, may carry an "epoch:" prefix
        qualifiers: Lowercase key -> decoded value
        subpath: Decoded subpath
        raw: Spelling the value was parsed from, None when built in code
    """
    type: str
    name: str
    namespace: Optional[str] = None
    version: Optional[str] = None
    qualifiers: Dict[str, str] = field(default_factory=dict)
    subpath: Optional[str] = None
    raw: Optional[RawPurlText] = field(default=None, compare=False, repr=False)

    def __hash__(self) -> int:
        return hash((
            self.type,
            self.namespace,
            self.name,
            self.version,
            tuple(sorted(self.qualifiers.items())),
            self.subpath,
        ))

    def qualifier(self, key: str) -> Optional[str]:
        """Get a qualifier value by (case-insensitive) key."""
        return self.qualifiers.get(key.lower())

    def with_qualifiers(self, **updates: Optional[str]) -> "PackageUrl":
        """
        Return a copy with qualifiers added, replaced, or removed (value None).
        """
        qualifiers = dict(self.qualifiers)
        for key, value in updates.items():
            if value is None:
                qualifiers.pop(key, None)
            else:
                qualifiers[key] = value
        return PackageUrl(
            type=self.type,
            name=self.name,
            namespace=self.namespace,
            version=self.version,
            qualifiers=qualifiers,
            subpath=self.subpath,
        )

    def __str__(self) -> str:
        from sbom_translate.purl.codec import serialize_purl

        return serialize_purl(self)
