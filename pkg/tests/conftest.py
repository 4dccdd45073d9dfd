"""Pytest configuration and shared fixtures."""

from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import pytest

from sbom_translate.models import CanonicalSbom, DistroInfo, Ecosystem, Ordering
from sbom_translate.osdb import canonical_from_os_packages, parse_apk_installed, parse_dpkg_status
from sbom_translate.spdx import SpdxDocument, SpdxPackage
from sbom_translate.spdx.document import ExternalRef
from sbom_translate.tracker import CveDatabase, load_alpine_secdb, load_debian_tracker

FIXTURES = Path(__file__).parent / "fixtures"

# Expected scan results for the fixture images, default options
BOOKWORM_CVES = frozenset({
    "CVE-2023-4641",
    "CVE-2024-2961",
    "CVE-2023-5678",
    "CVE-2024-0727",
    "CVE-2025-9230",
    "CVE-2023-7008",
    "CVE-2024-2398",
    "CVE-2020-21047",
    "CVE-2024-26581",
    "CVE-2024-28834",
    "CVE-2023-4039",
})
BOOKWORM_UNIMPORTANT_CVES = frozenset({
    "CVE-2010-4756",
    "CVE-2024-25260",
    "CVE-2022-0563",
    "CVE-2005-2541",
    "CVE-2016-2781",
})
ALPINE_CVES = frozenset({"CVE-2024-9143", "CVE-2023-42363"})

# One Debian package as written by each SBOM producer
MAGICS_PURLS = {
    "amazon": "pkg:dpkg/python3-magics++@1.5.8-1?arch=AMD64&epoch=1&upstream=python3-magics++-1.5.8-1.src.dpkg",
    "anchore": "pkg:deb/debian/python3-magics%2B%2B@2:1.5.8-1?arch=amd64&upstream=magics-python&distro=debian-12",
    "google": "pkg:deb/debian/python3-magics%2B%2B@2%3A1.5.8-1?arch=amd64&distro=debian-12&upstream=magics-python",
    "microsoft": "pkg:deb/debian/python3-magics++@2:1.5.8-1",
    "docker": "pkg:deb/debian/python3-magics%2B%2B@2:1.5.8-1?os_version=12&os_name=debian&os_distro=bookworm",
    "trivy": "pkg:deb/debian/python3-magics%2B%2B@1.5.8-1?arch=amd64&distro=debian-12.11&epoch=2",
    "reference": "pkg:deb/debian/python3-magics%2B%2B@2:1.5.8-1?arch=amd64&distro=bookworm",
}

# Parameter name -> frozen table of version pairs with their known order
VERSION_ORDER_TABLES = {
    "debian_ordering": FIXTURES / "debian" / "version-order.txt",
    "alpine_ordering": FIXTURES / "alpine" / "version-order.txt",
}
_ORDER_SYMBOLS = {"<": Ordering.LT, "=": Ordering.EQ, ">": Ordering.GT}


def load_version_orderings(path: Path) -> List[Tuple[str, str, Ordering]]:
    """Read "<a> <op> <b>" lines; blank lines and '#' comments are skipped."""
    rows = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            a, op, b = line.split()
            rows.append((a, b, _ORDER_SYMBOLS[op]))
    return rows


def pytest_generate_tests(metafunc):
    """Parametrize tests asking for a version ordering table by its rows."""
    for name, path in VERSION_ORDER_TABLES.items():
        if name in metafunc.fixturenames:
            rows = load_version_orderings(path)
            metafunc.parametrize(name, rows, ids=[f"{a}-vs-{b}" for a, b, _ in rows])


@pytest.fixture(autouse=True)
def reproducible_timestamps(monkeypatch):
    """Emission timestamps come from SOURCE_DATE_EPOCH; keep them fixed."""
    monkeypatch.delenv("SOURCE_DATE_EPOCH", raising=False)


@pytest.fixture
def fixtures_dir() -> Path:
    """Directory with package databases and tracker snapshots."""
    return FIXTURES


@pytest.fixture
def dpkg_status_text() -> str:
    """A bookworm dpkg status file: 25 installed packages, one removed."""
    return (FIXTURES / "debian" / "status").read_text(encoding="utf-8")


@pytest.fixture
def apk_installed_text() -> str:
    """An Alpine 3.20 apk installed database with 7 packages."""
    return (FIXTURES / "alpine" / "installed").read_text(encoding="utf-8")


@pytest.fixture
def bookworm() -> DistroInfo:
    return DistroInfo.debian("bookworm")


@pytest.fixture
def alpine_320() -> DistroInfo:
    return DistroInfo.alpine("3.20")


@pytest.fixture
def debian_sbom(dpkg_status_text: str, bookworm: DistroInfo) -> CanonicalSbom:
    """Canonical SBOM of the bookworm fixture image."""
    return canonical_from_os_packages(parse_dpkg_status(dpkg_status_text), bookworm, name="bookworm-image")


@pytest.fixture
def alpine_sbom(apk_installed_text: str, alpine_320: DistroInfo) -> CanonicalSbom:
    """Canonical SBOM of the Alpine fixture image."""
    return canonical_from_os_packages(parse_apk_installed(apk_installed_text), alpine_320, name="alpine-image")


@pytest.fixture
def debian_tracker() -> CveDatabase:
    """Debian tracker snapshot matching the bookworm fixture image."""
    return load_debian_tracker((FIXTURES / "debian" / "tracker.json").read_text(encoding="utf-8"))


@pytest.fixture
def alpine_secdb() -> CveDatabase:
    """Alpine 3.20 main secdb snapshot."""
    return load_alpine_secdb((FIXTURES / "alpine" / "secdb-v3.20-main.json").read_text(encoding="utf-8"))


@pytest.fixture
def bookworm_cves() -> frozenset:
    """CVEs the bookworm fixture image has with default scan options."""
    return BOOKWORM_CVES


@pytest.fixture
def bookworm_unimportant_cves() -> frozenset:
    """Additional CVEs reported when unimportant entries are included."""
    return BOOKWORM_UNIMPORTANT_CVES


@pytest.fixture
def alpine_cves() -> frozenset:
    """CVEs the Alpine fixture image has against the 3.20 secdb."""
    return ALPINE_CVES


@pytest.fixture
def make_spdx_package() -> Callable[..., SpdxPackage]:
    """Build an SPDX package around a pURL."""

    def _make(
        spdx_id: str,
        purl: Optional[str],
        name: Optional[str] = None,
        version_info: Optional[str] = None,
        source_info: Optional[str] = None,
        purpose: Optional[str] = None,
        attribution_texts: Optional[Iterable[str]] = None,
    ) -> SpdxPackage:
        return SpdxPackage(
            spdx_id=spdx_id,
            name=name,
            version_info=version_info,
            source_info=source_info,
            attribution_texts=tuple(attribution_texts) if attribution_texts is not None else None,
            primary_package_purpose=purpose,
            external_refs=(ExternalRef.purl(purl),) if purl else None,
        )

    return _make


@pytest.fixture
def make_spdx_document() -> Callable[..., SpdxDocument]:
    """Build a foreign SPDX document from packages."""

    def _make(
        packages: List[SpdxPackage],
        creators: Iterable[str] = (),
        name: str = "image",
        relationships=None,
        comment: Optional[str] = None,
    ) -> SpdxDocument:
        return SpdxDocument(
            spdx_version="SPDX-2.3",
            name=name,
            creators=tuple(creators),
            packages=tuple(packages),
            relationships=tuple(relationships) if relationships is not None else None,
            creation_comment=comment,
        )

    return _make


@pytest.fixture
def ecosystem_images(debian_sbom, alpine_sbom, debian_tracker, alpine_secdb) -> Dict[Ecosystem, tuple]:
    """(canonical SBOM, tracker, expected CVEs) per ecosystem."""
    return {
        Ecosystem.DEBIAN: (debian_sbom, debian_tracker, BOOKWORM_CVES),
        Ecosystem.ALPINE: (alpine_sbom, alpine_secdb, ALPINE_CVES),
    }


@pytest.fixture
def magics_purls() -> Dict[str, str]:
    """python3-magics++ 2:1.5.8-1 pURL per producer, keyed by producer name."""
    return MAGICS_PURLS
