"""
Alpine (apk) version comparison.

Versions look like "1.24.5-r0", "3.0.12_rc1-r2" or "2.9a_p3-r1": dotted
numbers, an optional letter, any number of "_suffix[N]" parts, an optional
"~hash" and a "-rN" package release. Comparison walks both versions token by
token the way apk does; when the token kinds diverge the kind decides, with
pre-release suffixes sorting below the bare version.
"""

import re
from dataclasses import dataclass
from enum import IntEnum
from functools import total_ordering
from typing import List, Tuple, Union

from sbom_translate.errors import UnparsableVersion
from sbom_translate.models.enums import Ordering

PRE_RELEASE_SUFFIXES = ("alpha", "beta", "pre", "rc")
POST_RELEASE_SUFFIXES = ("cvs", "svn", "git", "hg", "p")

_SUFFIX = "|".join(PRE_RELEASE_SUFFIXES + POST_RELEASE_SUFFIXES)
_APK_VERSION = re.compile(
    rf"^(?P<numbers>\d+(?:\.\d+)*)"
    rf"(?P<letter>[a-z])?"
    rf"(?P<suffixes>(?:_(?:{_SUFFIX})\d*)*)"
    rf"(?:~(?P<hash>[0-9a-f]+))?"
    rf"(?:-r(?P<release>\d+))?$"
)
_SUFFIX_PART = re.compile(rf"_({_SUFFIX})(\d*)")


class _Token(IntEnum):
    # Order matters: at a divergence the lower kind is the newer version.
    DIGIT = 1
    LETTER = 2
    SUFFIX = 3
    SUFFIX_NO = 4
    RELEASE = 5
    END = 6


TokenValue = Union[int, str]


def _suffix_rank(name: str) -> int:
    if name in PRE_RELEASE_SUFFIXES:
        return PRE_RELEASE_SUFFIXES.index(name) - len(PRE_RELEASE_SUFFIXES)
    return POST_RELEASE_SUFFIXES.index(name) + 1


def _compare_values(kind: _Token, a: TokenValue, b: TokenValue) -> int:
    # Components after the first with a leading zero compare as strings.
    if kind is _Token.DIGIT and (isinstance(a, str) or isinstance(b, str)):
        sa, sb = str(a), str(b)
        return (sa > sb) - (sa < sb)
    return (a > b) - (a < b)


@total_ordering
@dataclass(frozen=True, eq=False)
class ApkVersion:
    """
    A parsed apk version.

    Attributes:
        numbers: Dotted numeric components as written
        letter: Optional single letter after the numbers
        suffixes: Tuple of (suffix name, number) pairs
        hash: Optional "~hash" commit marker, ignored when comparing
        release: The "-rN" package release
    """
    numbers: Tuple[str, ...]
    letter: str = ""
    suffixes: Tuple[Tuple[str, int], ...] = ()
    hash: str = ""
    release: int = 0

    @classmethod
    def parse(cls, text: str) -> "ApkVersion":
        """
        Parse an apk version string.

        Raises:
            UnparsableVersion: If the string is not a valid apk version
        """
        value = text.strip() if isinstance(text, str) else ""
        match = _APK_VERSION.match(value)
        if not match:
            raise UnparsableVersion(f"Invalid Alpine version: {text!r}")
        suffixes = tuple(
            (name, int(number) if number else 0)
            for name, number in _SUFFIX_PART.findall(match.group("suffixes") or "")
        )
        return cls(
            numbers=tuple(match.group("numbers").split(".")),
            letter=match.group("letter") or "",
            suffixes=suffixes,
            hash=match.group("hash") or "",
            release=int(match.group("release") or 0),
        )

    def _tokens(self) -> List[Tuple[_Token, TokenValue]]:
        tokens: List[Tuple[_Token, TokenValue]] = []
        for index, number in enumerate(self.numbers):
            if index > 0 and len(number) > 1 and number.startswith("0"):
                tokens.append((_Token.DIGIT, number))
            else:
                tokens.append((_Token.DIGIT, int(number)))
        if self.letter:
            tokens.append((_Token.LETTER, ord(self.letter)))
        for name, number in self.suffixes:
            tokens.append((_Token.SUFFIX, _suffix_rank(name)))
            if number:
                tokens.append((_Token.SUFFIX_NO, number))
        if self.release:
            tokens.append((_Token.RELEASE, self.release))
        tokens.append((_Token.END, 0))
        return tokens

    def compare(self, other: "ApkVersion") -> Ordering:
        """Compare to another version."""
        for (kind_a, value_a), (kind_b, value_b) in zip(self._tokens(), other._tokens()):
            if kind_a is kind_b:
                if kind_a is _Token.END:
                    return Ordering.EQ
                delta = _compare_values(kind_a, value_a, value_b)
                if delta:
                    return Ordering.of(delta)
                continue
            if kind_a is _Token.SUFFIX and value_a < 0:
                return Ordering.LT
            if kind_b is _Token.SUFFIX and value_b < 0:
                return Ordering.GT
            return Ordering.LT if kind_a > kind_b else Ordering.GT
        return Ordering.EQ

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ApkVersion):
            return NotImplemented
        return self.compare(other) is Ordering.EQ

    def __lt__(self, other: "ApkVersion") -> bool:
        if not isinstance(other, ApkVersion):
            return NotImplemented
        return self.compare(other) is Ordering.LT

    def __hash__(self) -> int:
        return hash(self.release)

    def __str__(self) -> str:
        text = ".".join(self.numbers) + self.letter
        for name, number in self.suffixes:
            text += f"_{name}{number or ''}"
        if self.hash:
            text += f"~{self.hash}"
        return f"{text}-r{self.release}"


def compare_alpine(a: str, b: str) -> Ordering:
    """
    Compare two apk version strings.

    Args:
        a: First version, e.g. "1.24.5-r0"
        b: Second version, e.g. "1.24.5-r1"

    Returns:
        Ordering.LT, Ordering.EQ or Ordering.GT

    Raises:
        UnparsableVersion: If either version is invalid
    """
    return ApkVersion.parse(a).compare(ApkVersion.parse(b))
