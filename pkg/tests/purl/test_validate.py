"""Unit tests for purl.validate module."""

import pytest

from sbom_translate.models import Ecosystem, IssueCategory
from sbom_translate.purl import is_self_referential_upstream, parse_purl, validate_purl


def _codes(text: str, ecosystem: Ecosystem = Ecosystem.DEBIAN) -> set:
    return {issue.code for issue in validate_purl(parse_purl(text), ecosystem)}


class TestValidateProducerPurls:
    """Tests for validate_purl() on pURLs written by real producers."""

    @pytest.mark.parametrize("producer,expected", [
        ("amazon", {
            "nonstandard-type", "missing-namespace", "unencoded-name", "epoch-qualifier",
            "uppercase-qualifier", "missing-distro", "self-referential-upstream",
        }),
        ("anchore", {"distro-not-codename"}),
        ("google", {"encoded-epoch-separator", "distro-not-codename"}),
        ("microsoft", {"unencoded-name", "missing-arch", "missing-distro"}),
        ("docker", {"unknown-qualifier", "missing-arch", "missing-distro"}),
        ("trivy", {"epoch-qualifier", "distro-not-codename"}),
        ("reference", set()),
    ])
    def test_issue_codes(self, magics_purls, producer, expected):
        """Test the issue codes found for each producer's spelling."""
        assert _codes(magics_purls[producer]) == expected

    def test_docker_reports_each_unknown_qualifier(self, magics_purls):
        """Test one unknown-qualifier issue per os_* key."""
        issues = validate_purl(parse_purl(magics_purls["docker"]), Ecosystem.DEBIAN)
        fields = sorted(i.field for i in issues if i.code == "unknown-qualifier")
        assert fields == ["qualifiers.os_distro", "qualifiers.os_name", "qualifiers.os_version"]

    @pytest.mark.parametrize("code,category", [
        ("nonstandard-type", IssueCategory.INVALID_FORMAT),
        ("missing-namespace", IssueCategory.INCOMPLETE_DATA),
        ("missing-distro", IssueCategory.INCOMPLETE_DATA),
        ("self-referential-upstream", IssueCategory.INCORRECT_INFORMATION),
        ("uppercase-qualifier", IssueCategory.INVALID_FORMAT),
    ])
    def test_issue_categories(self, magics_purls, code, category):
        """Test each issue is filed under its category."""
        issues = validate_purl(parse_purl(magics_purls["amazon"]), Ecosystem.DEBIAN)
        assert [i.category for i in issues if i.code == code] == [category]


class TestValidateRules:
    """Tests for individual validate_purl() rules."""

    def test_compliant_alpine_purl(self):
        """Test a compliant apk pURL has no issues."""
        assert _codes("pkg:apk/alpine/busybox@1.36.1-r29?arch=x86_64&distro=3.20", Ecosystem.ALPINE) == set()

    @pytest.mark.parametrize("distro", ["3.20.3", "alpine-3.20", "v3.20"])
    def test_alpine_distro_must_be_branch(self, distro):
        """Test Alpine distro values other than 'major.minor' are flagged."""
        codes = _codes(f"pkg:apk/alpine/busybox@1.36.1-r29?arch=x86_64&distro={distro}", Ecosystem.ALPINE)
        assert codes == {"distro-not-codename"}

    def test_alpine_edge_is_valid(self):
        """Test the edge branch is accepted."""
        assert _codes("pkg:apk/alpine/busybox@1.36.1-r29?arch=x86_64&distro=edge", Ecosystem.ALPINE) == set()

    def test_epoch_qualifier_allowed_for_alpine_is_unknown(self):
        """Test an epoch qualifier on apk pURLs is an unknown qualifier."""
        codes = _codes("pkg:apk/alpine/busybox@1.36.1-r29?arch=x86_64&distro=3.20&epoch=1", Ecosystem.ALPINE)
        assert codes == {"unknown-qualifier"}

    def test_wrong_namespace(self):
        """Test a namespace from another distribution is flagged."""
        assert _codes("pkg:deb/ubuntu/bash@5.2.15-2?arch=amd64&distro=bookworm") == {"unexpected-namespace"}

    def test_missing_version(self):
        """Test a pURL without version is incomplete."""
        assert _codes("pkg:deb/debian/bash?arch=amd64&distro=bookworm") == {"missing-version"}

    def test_uppercase_qualifier_key(self):
        """Test qualifier keys written in uppercase are flagged."""
        assert _codes("pkg:deb/debian/bash@5.2.15-2?ARCH=amd64&distro=bookworm") == {"uppercase-qualifier-key"}

    def test_uppercase_distro(self):
        """Test uppercase distro values are flagged."""
        assert _codes("pkg:deb/debian/bash@5.2.15-2?arch=amd64&distro=Bookworm") == {"uppercase-qualifier"}

    def test_built_purl_skips_spelling_checks(self):
        """Test pURLs built in code are not checked for encoding."""
        p = parse_purl("pkg:deb/debian/python3-magics++@2:1.5.8-1?arch=amd64&distro=bookworm")
        assert {i.code for i in validate_purl(p, Ecosystem.DEBIAN)} == {"unencoded-name"}
        built = p.with_qualifiers()
        assert validate_purl(built, Ecosystem.DEBIAN) == []


class TestIsSelfReferentialUpstream:
    """Tests for is_self_referential_upstream() function."""

    @pytest.mark.parametrize("text,expected", [
        ("pkg:dpkg/python3-magics++@1.5.8-1?arch=AMD64&epoch=1&upstream=python3-magics++-1.5.8-1.src.dpkg", True),
        ("pkg:dpkg/libelf1@0.188-2.1?arch=AMD64&epoch=0&upstream=libelf1-0.188-2.1.src.dpkg", True),
        ("pkg:dpkg/libelf1@0.188-2.1?arch=AMD64&epoch=0&upstream=elfutils-0.188-2.1.src.dpkg", False),
        ("pkg:deb/debian/bash@5.2.15-2?upstream=bash", True),
        ("pkg:deb/debian/login@1:4.13+dfsg1-1?upstream=shadow", False),
        ("pkg:deb/debian/bash@5.2.15-2?arch=amd64", False),
        ("pkg:dpkg/libelf1?upstream=libelf1-0.188-2.1.src.dpkg", False),
    ])
    def test_self_reference(self, text, expected):
        """Test detection of an upstream that names the package itself."""
        assert is_self_referential_upstream(parse_purl(text)) is expected
