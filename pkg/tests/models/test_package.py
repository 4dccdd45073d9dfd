"""Unit tests for OsPackage, CanonicalPackage and CanonicalSbom models."""

import pytest

from sbom_translate.models import CanonicalPackage, CanonicalSbom, DistroInfo, Ecosystem, OsPackage


class TestOsPackage:
    """Tests for the OsPackage model."""

    def test_source_defaults_to_binary(self):
        """Test a package without source data is its own source."""
        pkg = OsPackage(name="bash", version="5.2.15-2")
        assert (pkg.source_name, pkg.source_version) == ("bash", "5.2.15-2")

    def test_empty_version_raises(self):
        """Test an empty version is rejected."""
        with pytest.raises(ValueError):
            OsPackage(name="bash", version="")


class TestCanonicalPackage:
    """Tests for the CanonicalPackage model."""

    @pytest.fixture
    def passwd(self):
        return CanonicalPackage.from_os_package(
            OsPackage("passwd", "1:4.13+dfsg1-1+b1", "amd64", "shadow", "1:4.13+dfsg1-1"),
            Ecosystem.DEBIAN,
        )

    def test_epoch_split_off(self, passwd):
        """Test the epoch is kept out of the version."""
        assert passwd.epoch == 1
        assert passwd.version == "4.13+dfsg1-1+b1"
        assert passwd.full_version == "1:4.13+dfsg1-1+b1"

    def test_version_parts(self, passwd):
        """Test upstream version and revision."""
        assert passwd.upstream_version == "4.13+dfsg1"
        assert passwd.revision == "1+b1"

    def test_source(self, passwd):
        """Test source identity is carried."""
        assert passwd.source_name == "shadow"
        assert passwd.effective_source_version == "1:4.13+dfsg1-1"

    def test_effective_source_version_fallback(self):
        """Test the binary version stands in for an unknown source version."""
        pkg = CanonicalPackage(name="bash", epoch=0, version="5.2.15-2", source_name="")
        assert pkg.source_name == "bash"
        assert pkg.effective_source_version == "5.2.15-2"

    def test_alpine_version_untouched(self):
        """Test apk versions never have an epoch."""
        pkg = CanonicalPackage.from_os_package(OsPackage("musl", "1.2.5-r0", "x86_64"), Ecosystem.ALPINE)
        assert (pkg.epoch, pkg.version, pkg.revision) == (0, "1.2.5-r0", "r0")

    @pytest.mark.parametrize("kwargs", [
        {"epoch": -1, "version": "1.0"},
        {"epoch": 0, "version": "2:1.0"},
    ])
    def test_invalid_epoch(self, kwargs):
        """Test negative epochs and epochs inside the version are rejected."""
        with pytest.raises(ValueError):
            CanonicalPackage(name="x", source_name="x", **kwargs)

    def test_equality_ignores_purl_and_issues(self, passwd):
        """Test records compare by identity, not provenance."""
        other = CanonicalPackage(
            name="passwd", epoch=1, version="4.13+dfsg1-1+b1", arch="amd64",
            source_name="shadow", source_version="1:4.13+dfsg1-1", purl="pkg:dpkg/passwd",
        )
        assert other == passwd

    def test_keys(self, passwd):
        """Test identity and dedupe keys."""
        assert passwd.identity_key == ("shadow", "passwd", 1, "4.13+dfsg1-1+b1", "amd64")
        assert passwd.dedupe_key == ("passwd", "1:4.13+dfsg1-1+b1", "amd64")

    def test_to_dict(self, passwd):
        """Test JSON conversion."""
        data = passwd.to_dict()
        assert data["epoch"] == 1
        assert data["source_name"] == "shadow"
        assert data["ecosystem"] == "debian"
        assert data["distro"] is None


class TestCanonicalSbom:
    """Tests for the CanonicalSbom model."""

    def test_ecosystem_from_distro(self, alpine_sbom):
        """Test the ecosystem follows the release."""
        assert alpine_sbom.ecosystem is Ecosystem.ALPINE
        assert len(alpine_sbom) == 7

    def test_ecosystem_without_distro(self, alpine_sbom):
        """Test the ecosystem falls back to the packages."""
        sbom = CanonicalSbom(distro=None, packages=alpine_sbom.packages)
        assert sbom.ecosystem is Ecosystem.ALPINE
        assert CanonicalSbom(distro=None, packages=()).ecosystem is Ecosystem.DEBIAN

    def test_to_dict(self, debian_sbom):
        """Test JSON conversion."""
        data = debian_sbom.to_dict()
        assert data["name"] == "bookworm-image"
        assert data["origin"] == "reference"
        assert data["distro"] == DistroInfo.debian("12").to_dict()
        assert len(data["packages"]) == 25
