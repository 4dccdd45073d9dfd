"""Unit tests for verscmp.debian module."""

import random
from functools import cmp_to_key

import pytest

from sbom_translate.errors import UnparsableVersion
from sbom_translate.models import Ecosystem, Ordering
from sbom_translate.verscmp import DebVersion, compare_debian, compare_versions, is_vulnerable

LT, EQ, GT = Ordering.LT, Ordering.EQ, Ordering.GT


def _random_version(rng: random.Random) -> str:
    upstream = str(rng.randint(0, 20))
    for _ in range(rng.randint(0, 4)):
        upstream += rng.choice([".", ".", "+", "~", "", "a", "b", "rc", "dfsg", "+dfsg"]) + str(rng.randint(0, 12))
    if rng.random() < 0.1:
        upstream += rng.choice(["~", "+", "a", "~~"])
    revision = rng.choice(["", "", "0", "1", "2", "1+b1", "1~deb12u1", "1+deb12u2", "3.1", "1ubuntu1", "10"])
    version = f"{upstream}-{revision}" if revision else upstream
    epoch = rng.choice([0, 0, 0, 0, 1, 2])
    return f"{epoch}:{version}" if epoch else version


class TestCompareDebian:
    """Tests for compare_debian() against known dpkg orderings."""

    def test_known_orderings(self, debian_ordering):
        """Test ordering of version pairs as dpkg orders them."""
        a, b, expected = debian_ordering
        assert compare_debian(a, b) is expected

    @pytest.mark.parametrize("a,b,expected", [
        ("1.0~rc1", "1.0", LT),
        ("1:1.0", "2.0", GT),
        ("1.0", "1.00", EQ),
    ])
    def test_reverse_is_opposite(self, a, b, expected):
        """Test that swapping the arguments flips the result."""
        assert compare_debian(b, a) is Ordering(-expected)

    def test_compare_versions_dispatches_on_ecosystem(self):
        """Test the ecosystem dispatcher picks Debian rules."""
        assert compare_versions("1.0~rc1", "1.0", Ecosystem.DEBIAN) is LT
        assert compare_versions("1.0~rc1", "1.0", "debian") is LT

    def test_is_vulnerable(self):
        """Test that only versions older than the fix are vulnerable."""
        assert is_vulnerable("1:4.13+dfsg1-1", "1:4.13+dfsg1-1+deb12u1", Ecosystem.DEBIAN)
        assert not is_vulnerable("1:4.13+dfsg1-1+deb12u1", "1:4.13+dfsg1-1+deb12u1", Ecosystem.DEBIAN)
        assert not is_vulnerable("2.36-9+deb12u4", "2.36-9+deb12u3", Ecosystem.DEBIAN)


class TestDebVersionParse:
    """Tests for DebVersion.parse()."""

    @pytest.mark.parametrize("text,epoch,upstream,revision", [
        ("1.0", 0, "1.0", ""),
        ("1.0-1", 0, "1.0", "1"),
        ("2:1.5.8-1", 2, "1.5.8", "1"),
        ("1:4.13+dfsg1-1+b1", 1, "4.13+dfsg1", "1+b1"),
        ("1.2-3-4", 0, "1.2-3", "4"),
        ("1:2:3", 1, "2:3", ""),
        ("3.0.11-1~deb12u2", 0, "3.0.11", "1~deb12u2"),
    ])
    def test_parse_parts(self, text, epoch, upstream, revision):
        """Test splitting into epoch, upstream version and revision."""
        version = DebVersion.parse(text)
        assert version.epoch == epoch
        assert version.upstream == upstream
        assert version.revision == revision

    @pytest.mark.parametrize("text", [
        "",
        "a1.0",
        "1.0-",
        ":1.0",
        "1.0:2",
        "1.0 beta",
        "1.0_1",
        "-1",
    ])
    def test_invalid_versions_raise(self, text):
        """Test that strings violating Debian policy raise UnparsableVersion."""
        with pytest.raises(UnparsableVersion):
            DebVersion.parse(text)

    def test_invalid_version_in_compare_raises(self):
        """Test that compare_debian propagates parse errors."""
        with pytest.raises(UnparsableVersion):
            compare_debian("1.0", "not-a-version")

    def test_str_drops_zero_epoch(self):
        """Test that formatting omits a zero epoch."""
        assert str(DebVersion.parse("0:1.0-1")) == "1.0-1"
        assert str(DebVersion.parse("2:1.5.8-1")) == "2:1.5.8-1"

    def test_rich_comparisons(self):
        """Test that DebVersion objects sort like compare_debian."""
        versions = [DebVersion.parse(v) for v in ["1.0", "1.0~rc1", "1:0.1", "1.0-1"]]
        assert [str(v) for v in sorted(versions)] == ["1.0~rc1", "1.0", "1.0-1", "1:0.1"]
        assert DebVersion.parse("1.0") == DebVersion.parse("1.00")


class TestDebianOrderProperties:
    """Total-order properties over seeded random versions."""

    @pytest.fixture(scope="class")
    def versions(self):
        rng = random.Random(20240611)
        return [_random_version(rng) for _ in range(10_000)]

    def test_sorted_neighbours_are_ordered(self, versions):
        """Test that after sorting no neighbour pair compares greater."""
        ordered = sorted(versions, key=cmp_to_key(compare_debian))
        for a, b in zip(ordered, ordered[1:]):
            assert compare_debian(a, b) is not GT, (a, b)

    def test_antisymmetry(self, versions):
        """Test compare(a, b) == -compare(b, a) on random pairs."""
        rng = random.Random(7)
        for _ in range(5_000):
            a, b = rng.choice(versions), rng.choice(versions)
            assert compare_debian(a, b) == -compare_debian(b, a), (a, b)

    def test_transitivity(self, versions):
        """Test a <= b and b <= c implies a <= c on random triples."""
        rng = random.Random(11)
        for _ in range(5_000):
            a, b, c = sorted(rng.sample(versions, 3), key=cmp_to_key(compare_debian))
            assert compare_debian(a, c) is not GT, (a, b, c)

    def test_reflexive(self, versions):
        """Test every version equals itself."""
        for v in versions[:1_000]:
            assert compare_debian(v, v) is EQ
