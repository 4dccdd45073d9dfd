"""Security tracker snapshots and vulnerability queries."""

from sbom_translate.tracker.alpine import load_alpine_secdb
from sbom_translate.tracker.debian import load_debian_tracker
from sbom_translate.tracker.models import CveDatabase, CveEntry
from sbom_translate.tracker.query import entry_applies, query_cves

__all__ = [
    "CveDatabase",
    "CveEntry",
    "entry_applies",
    "load_alpine_secdb",
    "load_debian_tracker",
    "query_cves",
]
