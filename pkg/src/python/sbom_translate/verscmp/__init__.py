"""Version ordering for Debian and Alpine packages."""

from typing import Union

from sbom_translate.models.enums import Ecosystem, Ordering
from sbom_translate.verscmp.alpine import ApkVersion, compare_alpine
from sbom_translate.verscmp.debian import DebVersion, compare_debian


def compare_versions(a: str, b: str, os_name: Union[Ecosystem, str]) -> Ordering:
    """
    Compare two versions with the rules of the given distribution.

    Args:
        a: First version
        b: Second version
        os_name: Ecosystem (or its name) whose version scheme applies

    Returns:
        Ordering.LT, Ordering.EQ or Ordering.GT

    Raises:
        UnparsableVersion: If either version is invalid
    """
    eco = os_name if isinstance(os_name, Ecosystem) else Ecosystem.from_string(os_name)
    if eco is Ecosystem.ALPINE:
        return compare_alpine(a, b)
    return compare_debian(a, b)


def is_vulnerable(installed: str, fixed: str, os_name: Union[Ecosystem, str]) -> bool:
    """True when the installed version is older than the fixed version."""
    return compare_versions(installed, fixed, os_name) is Ordering.LT


__all__ = [
    "ApkVersion",
    "DebVersion",
    "compare_alpine",
    "compare_debian",
    "compare_versions",
    "is_vulnerable",
]
