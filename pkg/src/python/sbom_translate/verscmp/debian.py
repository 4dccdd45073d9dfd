"""
Debian version comparison.

Follows dpkg: epoch first, then upstream version, then revision; each part
is compared in alternating runs of non-digits and digits, where '~' sorts
before everything including the end of the string and letters sort before
other characters.
"""

import re
from dataclasses import dataclass
from functools import total_ordering

from sbom_translate.errors import UnparsableVersion
from sbom_translate.models.enums import Ordering

_PARTITIONS = re.compile(r"^(?:(?P<epoch>[0-9]+):)?(?P<body>[A-Za-z0-9.+~:-]+)$")
_UPSTREAM_CHARS = re.compile(r"^[0-9][A-Za-z0-9.+~:-]*$")
_REVISION_CHARS = re.compile(r"^[A-Za-z0-9.+~]+$")
_NON_DIGIT = re.compile(r"^[^0-9]*")
_DIGIT = re.compile(r"^[0-9]*")


def _char_order(char: str) -> int:
    if char == "~":
        return -1
    if char.isalpha():
        return ord(char)
    return ord(char) + 256


def _compare_part(a: str, b: str) -> int:
    """dpkg's verrevcmp over one version part."""
    while a or b:
        run_a = _NON_DIGIT.match(a).group()
        run_b = _NON_DIGIT.match(b).group()
        a, b = a[len(run_a):], b[len(run_b):]
        for i in range(max(len(run_a), len(run_b))):
            ord_a = _char_order(run_a[i]) if i < len(run_a) else 0
            ord_b = _char_order(run_b[i]) if i < len(run_b) else 0
            if ord_a != ord_b:
                return ord_a - ord_b

        digits_a = _DIGIT.match(a).group()
        digits_b = _DIGIT.match(b).group()
        a, b = a[len(digits_a):], b[len(digits_b):]
        num_a = int(digits_a) if digits_a else 0
        num_b = int(digits_b) if digits_b else 0
        if num_a != num_b:
            return num_a - num_b
    return 0


@total_ordering
@dataclass(frozen=True, eq=False)
class DebVersion:
    """
    A parsed Debian version "[epoch:]upstream[-revision]".

    Attributes:
        epoch: Epoch, 0 when absent
        upstream: Upstream version
        revision: Debian revision, empty for native packages
    """
    epoch: int
    upstream: str
    revision: str = ""

    @classmethod
    def parse(cls, text: str) -> "DebVersion":
        """
        Parse a Debian version string.

        Raises:
            UnparsableVersion: If the string violates Debian policy syntax
        """
        value = text.strip() if isinstance(text, str) else ""
        match = _PARTITIONS.match(value)
        if not match:
            raise UnparsableVersion(f"Invalid Debian version: {text!r}")

        epoch_text = match.group("epoch")
        body = match.group("body")
        if ":" in body and epoch_text is None:
            raise UnparsableVersion(f"Colon without epoch in Debian version: {text!r}")

        upstream, sep, revision = body.rpartition("-")
        if not sep:
            upstream, revision = body, ""
        elif not _REVISION_CHARS.match(revision):
            raise UnparsableVersion(f"Invalid Debian revision in {text!r}")
        if not _UPSTREAM_CHARS.match(upstream):
            raise UnparsableVersion(f"Debian upstream version must start with a digit: {text!r}")

        return cls(int(epoch_text) if epoch_text else 0, upstream, revision)

    def compare(self, other: "DebVersion") -> Ordering:
        """Compare to another version."""
        if self.epoch != other.epoch:
            return Ordering.of(self.epoch - other.epoch)
        delta = _compare_part(self.upstream, other.upstream)
        if delta:
            return Ordering.of(delta)
        return Ordering.of(_compare_part(self.revision, other.revision))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DebVersion):
            return NotImplemented
        return self.compare(other) is Ordering.EQ

    def __lt__(self, other: "DebVersion") -> bool:
        if not isinstance(other, DebVersion):
            return NotImplemented
        return self.compare(other) is Ordering.LT

    def __hash__(self) -> int:
        # "1.0" and "1.00" compare equal, so only the epoch is safe to hash
        return hash(self.epoch)

    def __str__(self) -> str:
        text = self.upstream
        if self.revision:
            text = f"{text}-{self.revision}"
        if self.epoch:
            text = f"{self.epoch}:{text}"
        return text


def compare_debian(a: str, b: str) -> Ordering:
    """
    Compare two Debian version strings.

    Args:
        a: First version, e.g. "4.2.0-1+deb11u5"
        b: Second version, e.g. "4.5.0-6+deb12u2"

    Returns:
        Ordering.LT, Ordering.EQ or Ordering.GT

    Raises:
        UnparsableVersion: If either version is invalid
    """
    return DebVersion.parse(a).compare(DebVersion.parse(b))
