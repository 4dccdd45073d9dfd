"""
CVE database models.

A CveDatabase maps (os, release, source package) to the CVE entries a
security tracker lists for that source in that release.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from sbom_translate.models.enums import CveStatus, Ecosystem
from sbom_translate.utils import cve_year, is_cve_id

DbKey = Tuple[Ecosystem, str, str]


@dataclass(frozen=True)
class CveEntry:
    """
    One CVE for one source package in one release.

    Attributes:
        id: CVE identifier ("CVE-2023-29383")
        status: open, resolved, unimportant or not_affected
        fixed_version: First fixed version, when the tracker has one
        urgency: Tracker urgency/severity label
    """
    id: str
    status: CveStatus
    fixed_version: Optional[str] = None
    urgency: Optional[str] = None

    def __post_init__(self):
        if not is_cve_id(self.id):
            raise ValueError(f"Not a CVE identifier: {self.id!r}")

    @property
    def year(self) -> int:
        """Year part of the CVE identifier."""
        return cve_year(self.id) or 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "status": self.status.value,
            "fixed_version": self.fixed_version,
            "urgency": self.urgency,
        }


@dataclass
class CveDatabase:
    """
    CVE entries keyed by (os, release, source package name).

    Treated as immutable once loaded; `merge` returns a new database.

    Attributes:
        entries: (ecosystem, release, lowercase source name) -> entries
        metadata: Snapshot provenance (file, commit, date)
    """
    entries: Dict[DbKey, Tuple[CveEntry, ...]] = field(default_factory=dict)
    metadata: Dict[str, Any] = field(default_factory=dict)

    @staticmethod
    def key(os_name: Ecosystem, release: str, source_name: str) -> DbKey:
        """Normalized lookup key."""
        return (os_name, release.lower(), source_name.lower())

    @classmethod
    def from_entries(
        cls,
        items: Iterable[Tuple[DbKey, CveEntry]],
        metadata: Optional[Dict[str, Any]] = None,
    ) -> "CveDatabase":
        """Build from ((os, release, source), entry) pairs."""
        grouped: Dict[DbKey, List[CveEntry]] = {}
        for (os_name, release, source), entry in items:
            grouped.setdefault(cls.key(os_name, release, source), []).append(entry)
        return cls(
            entries={k: tuple(sorted(v, key=lambda e: e.id)) for k, v in grouped.items()},
            metadata=dict(metadata or {}),
        )

    def lookup(self, os_name: Ecosystem, release: str, source_name: str) -> Tuple[CveEntry, ...]:
        """Entries for one source package in one release."""
        return self.entries.get(self.key(os_name, release, source_name), ())

    def releases(self, os_name: Optional[Ecosystem] = None) -> List[str]:
        """Releases present in the database."""
        return sorted({r for (o, r, _) in self.entries if os_name is None or o is os_name})

    def merge(self, other: "CveDatabase") -> "CveDatabase":
        """Combine two databases; entries for the same key are concatenated."""
        merged: Dict[DbKey, Tuple[CveEntry, ...]] = dict(self.entries)
        for k, v in other.entries.items():
            merged[k] = tuple(sorted(merged.get(k, ()) + v, key=lambda e: e.id))
        return CveDatabase(entries=merged, metadata={"merged": [self.metadata, other.metadata]})

    def __iter__(self) -> Iterator[Tuple[DbKey, CveEntry]]:
        for k, v in self.entries.items():
            for entry in v:
                yield k, entry

    def __len__(self) -> int:
        return sum(len(v) for v in self.entries.values())
