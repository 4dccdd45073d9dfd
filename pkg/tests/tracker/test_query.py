"""Unit tests for tracker.query and tracker.models modules."""

import pytest

from sbom_translate.errors import UnparsableVersion
from sbom_translate.models import Ecosystem
from sbom_translate.models.enums import CveStatus
from sbom_translate.tracker import CveDatabase, CveEntry, entry_applies, load_alpine_secdb, query_cves


class TestEntryApplies:
    """Tests for entry_applies()."""

    @pytest.mark.parametrize("entry,installed,expected", [
        (CveEntry("CVE-2024-0001", CveStatus.OPEN), "1.0-1", True),
        (CveEntry("CVE-2024-0001", CveStatus.NOT_AFFECTED, "0"), "1.0-1", False),
        (CveEntry("CVE-2024-0001", CveStatus.RESOLVED, "1.0-2"), "1.0-1", True),
        (CveEntry("CVE-2024-0001", CveStatus.RESOLVED, "1.0-1"), "1.0-1", False),
        (CveEntry("CVE-2024-0001", CveStatus.RESOLVED, "1.0-1"), "1:0.9-1", False),
        (CveEntry("CVE-2024-0001", CveStatus.RESOLVED, "1.0~rc1-1"), "1.0~beta1-1", True),
        (CveEntry("CVE-2024-0001", CveStatus.UNIMPORTANT), "1.0-1", False),
    ])
    def test_debian(self, entry, installed, expected):
        """Test open, resolved and ignored entries against an installed version."""
        assert entry_applies(entry, Ecosystem.DEBIAN, installed) is expected

    def test_unimportant_included_on_request(self):
        """Test unimportant entries apply when asked for."""
        entry = CveEntry("CVE-2010-4756", CveStatus.UNIMPORTANT)
        assert entry_applies(entry, Ecosystem.DEBIAN, "2.36-9", include_unimportant=True)

    def test_unimportant_with_fixed_version(self):
        """Test an included unimportant entry still honors its fixed version."""
        entry = CveEntry("CVE-2022-0563", CveStatus.UNIMPORTANT, "2.38.1-1")
        assert not entry_applies(entry, Ecosystem.DEBIAN, "2.38.1-5", include_unimportant=True)

    def test_alpine_release_ordering(self):
        """Test apk revisions decide between vulnerable and fixed."""
        entry = CveEntry("CVE-2023-42363", CveStatus.RESOLVED, "1.36.1-r30")
        assert entry_applies(entry, Ecosystem.ALPINE, "1.36.1-r29")
        assert not entry_applies(entry, Ecosystem.ALPINE, "1.36.1-r30")

    def test_unparsable_version(self):
        """Test an installed version that cannot be compared raises."""
        entry = CveEntry("CVE-2024-0001", CveStatus.RESOLVED, "1.0-1")
        with pytest.raises(UnparsableVersion):
            entry_applies(entry, Ecosystem.DEBIAN, "")


class TestQueryCves:
    """Tests for query_cves() against the fixture snapshots."""

    @pytest.mark.parametrize("release,version,expected", [
        ("bookworm", "1:4.13+dfsg1-1", {"CVE-2023-4641"}),
        ("bookworm", "1:4.13+dfsg1-1+deb12u1", set()),
        ("bullseye", "1:4.8.1-1", {"CVE-2023-29383", "CVE-2023-4641"}),
    ])
    def test_shadow_per_release(self, debian_tracker, release, version, expected):
        """Test the same source gets different answers per release."""
        assert query_cves(debian_tracker, Ecosystem.DEBIAN, release, "shadow", version) == frozenset(expected)

    def test_unimportant(self, debian_tracker):
        """Test unimportant entries are excluded by default."""
        assert query_cves(debian_tracker, "debian", "bookworm", "glibc", "2.36-9+deb12u4") == {"CVE-2024-2961"}
        assert query_cves(debian_tracker, "debian", "bookworm", "glibc", "2.36-9+deb12u4",
                          include_unimportant=True) == {"CVE-2024-2961", "CVE-2010-4756"}

    def test_cutoff_year(self, debian_tracker):
        """Test CVEs assigned after the cutoff year are dropped."""
        version = "3.0.11-1~deb12u2"
        assert "CVE-2025-9230" in query_cves(debian_tracker, Ecosystem.DEBIAN, "bookworm", "openssl", version)
        assert query_cves(debian_tracker, Ecosystem.DEBIAN, "bookworm", "openssl", version, cutoff_year=2024) == \
            {"CVE-2023-5678", "CVE-2024-0727"}

    def test_unknown_source_or_release(self, debian_tracker):
        """Test missing keys give no CVEs."""
        assert query_cves(debian_tracker, Ecosystem.DEBIAN, "bookworm", "nginx", "1.22.1-9") == frozenset()
        assert query_cves(debian_tracker, Ecosystem.DEBIAN, "trixie", "shadow", "1:4.13+dfsg1-1") == frozenset()

    @pytest.mark.parametrize("source,version,expected", [
        ("openssl", "3.3.2-r0", {"CVE-2024-9143"}),
        ("busybox", "1.36.1-r29", {"CVE-2023-42363"}),
        ("wget", "1.24.5-r0", set()),
        ("musl", "1.2.5-r0", set()),
    ])
    def test_alpine(self, alpine_secdb, source, version, expected):
        """Test secdb queries for the Alpine fixture image."""
        assert query_cves(alpine_secdb, Ecosystem.ALPINE, "3.20", source, version) == frozenset(expected)

    def test_alpine_newer_branch_data(self, fixtures_dir):
        """Test a fix published on a newer branch is found when filed under the older one."""
        text = (fixtures_dir / "alpine" / "secdb-v3.21-main.json").read_text(encoding="utf-8")
        db = load_alpine_secdb(text, release="3.20")
        assert query_cves(db, Ecosystem.ALPINE, "3.20", "wget", "1.24.5-r0") == {"CVE-2024-10524"}

    def test_wget_trackers_disagree(self, debian_tracker, alpine_secdb):
        """Test the Debian tracker reports a wget CVE that the 3.20 secdb never lists."""
        (entry,) = debian_tracker.lookup(Ecosystem.DEBIAN, "bookworm", "wget")
        assert (entry.id, entry.status, entry.fixed_version) == \
            ("CVE-2024-10524", CveStatus.RESOLVED, "1.21.3-1+deb12u1")
        assert query_cves(debian_tracker, Ecosystem.DEBIAN, "bookworm", "wget", "1.21.3-1+b2") == {"CVE-2024-10524"}
        assert query_cves(debian_tracker, Ecosystem.DEBIAN, "bookworm", "wget", "1.21.3-1+deb12u1") == frozenset()
        assert "CVE-2024-10524" not in query_cves(alpine_secdb, Ecosystem.ALPINE, "3.20", "wget", "1.24.5-r0")

    def test_unknown_ecosystem_name(self, debian_tracker):
        """Test an unknown OS name raises ValueError."""
        with pytest.raises(ValueError):
            query_cves(debian_tracker, "ubuntu", "jammy", "shadow", "1:4.8.1-1")


class TestCveDatabase:
    """Tests for the CveEntry and CveDatabase models."""

    def test_entry_rejects_non_cve(self):
        """Test tracker-internal ids are not CVE entries."""
        with pytest.raises(ValueError):
            CveEntry("TEMP-0000000-6BE9E3", CveStatus.OPEN)

    def test_entry_year_and_dict(self):
        """Test the year property and JSON conversion."""
        entry = CveEntry("CVE-2024-2961", CveStatus.RESOLVED, "2.36-9+deb12u7", "high")
        assert entry.year == 2024
        assert entry.to_dict() == {
            "id": "CVE-2024-2961", "status": "resolved", "fixed_version": "2.36-9+deb12u7", "urgency": "high",
        }

    def test_entries_sorted(self):
        """Test entries for one key are kept in id order."""
        key = (Ecosystem.DEBIAN, "bookworm", "glibc")
        db = CveDatabase.from_entries([
            (key, CveEntry("CVE-2024-2961", CveStatus.OPEN)),
            (key, CveEntry("CVE-2023-4911", CveStatus.OPEN)),
        ])
        assert [e.id for e in db.lookup(*key)] == ["CVE-2023-4911", "CVE-2024-2961"]

    def test_merge(self, debian_tracker, alpine_secdb):
        """Test merged databases answer for both ecosystems."""
        merged = debian_tracker.merge(alpine_secdb)
        assert len(merged) == len(debian_tracker) + len(alpine_secdb)
        assert merged.releases() == ["3.20", "bookworm", "bullseye"]
        assert len(list(merged)) == len(merged)
