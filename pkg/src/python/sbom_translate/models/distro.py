"""
Operating system release identity.

A DistroInfo names the release a package belongs to. SBOM producers spell
the same release in many ways (`bookworm`, `debian-12`, `debian-12.11`,
`os_name=debian&os_version=12&os_distro=bookworm`, `alpine-3.19`, `3.19.1`);
the constructors here map all of them onto one value.
"""

import re
from dataclasses import dataclass
from typing import Dict, Optional

from sbom_translate.models.enums import Ecosystem

# Debian major version -> codename
DEBIAN_CODENAMES: Dict[str, str] = {
    "1.1": "buzz",
    "1.2": "rex",
    "1.3": "bo",
    "2.0": "hamm",
    "2.1": "slink",
    "2.2": "potato",
    "3.0": "woody",
    "3.1": "sarge",
    "4": "etch",
    "5": "lenny",
    "6": "squeeze",
    "7": "wheezy",
    "8": "jessie",
    "9": "stretch",
    "10": "buster",
    "11": "bullseye",
    "12": "bookworm",
    "13": "trixie",
    "14": "forky",
}

# codename -> version_id; unstable has no number
DEBIAN_RELEASES: Dict[str, str] = {name: num for num, name in DEBIAN_CODENAMES.items()}
DEBIAN_RELEASES["sid"] = "unstable"

_OS_VERSION_PATTERN = re.compile(r"^(?P<os>[a-z]+)-(?P<version>\d+(?:\.\d+)*)$")
_NUMERIC_VERSION_PATTERN = re.compile(r"^v?(?P<version>\d+(?:\.\d+)*)$")


@dataclass(frozen=True)
class DistroInfo:
    """
    An OS release such as Debian 12 "bookworm" or Alpine 3.19.

    Attributes:
        os_name: The distribution family
        version_id: Major version ("12") or major.minor for Alpine ("3.19")
        codename: Release codename; always set for known Debian releases
        raw: The spelling this value was parsed from, when it was not canonical
        recognized: False when `raw` could not be mapped onto a known release
    """
    os_name: Ecosystem
    version_id: str
    codename: Optional[str] = None
    raw: Optional[str] = None
    recognized: bool = True

    @property
    def release_key(self) -> str:
        """
        Key used by security trackers for this release.

        Debian trackers are keyed by codename, Alpine's secdb by branch.
        """
        if self.os_name is Ecosystem.DEBIAN:
            return self.codename or self.version_id
        return self.version_id

    @property
    def purl_distro(self) -> str:
        """Value of the `distro` qualifier in a specification-compliant pURL."""
        if not self.recognized and self.raw:
            return self.raw
        if self.os_name is Ecosystem.DEBIAN and self.codename:
            return self.codename
        return self.version_id

    @classmethod
    def debian(cls, version_or_codename: str) -> "DistroInfo":
        """
        Build a Debian release from "12" or "bookworm".

        Raises:
            ValueError: If the release is not a known Debian release
        """
        key = version_or_codename.strip().lower()
        if key in DEBIAN_RELEASES:
            return cls(Ecosystem.DEBIAN, DEBIAN_RELEASES[key], key)
        major = key.split(".")[0] if key not in DEBIAN_CODENAMES else key
        if major in DEBIAN_CODENAMES:
            return cls(Ecosystem.DEBIAN, major, DEBIAN_CODENAMES[major])
        raise ValueError(f"Unknown Debian release: {version_or_codename!r}")

    @classmethod
    def alpine(cls, version: str) -> "DistroInfo":
        """
        Build an Alpine release from "3.19", "3.19.1", "v3.19" or "edge".

        Raises:
            ValueError: If the version is not numeric or "edge"
        """
        key = version.strip().lower()
        if key == "edge":
            return cls(Ecosystem.ALPINE, "edge")
        match = _NUMERIC_VERSION_PATTERN.match(key)
        if not match:
            raise ValueError(f"Unknown Alpine release: {version!r}")
        parts = match.group("version").split(".")
        return cls(Ecosystem.ALPINE, ".".join(parts[:2]))

    @classmethod
    def from_parts(
        cls,
        os_name: str,
        version: Optional[str] = None,
        codename: Optional[str] = None,
    ) -> Optional["DistroInfo"]:
        """
        Build a release from separate OS name, version and codename values.

        This is the shape Docker Scout uses (`os_name`, `os_version`,
        `os_distro`) and the shape of /etc/os-release.

        Returns:
            DistroInfo, or None if the OS is not supported
        """
        try:
            eco = Ecosystem.from_string(os_name)
        except ValueError:
            return None
        try:
            if eco is Ecosystem.DEBIAN:
                if codename:
                    return cls.debian(codename)
                if version:
                    return cls.debian(version)
                return None
            if version:
                return cls.alpine(version)
        except ValueError:
            return None
        return None

    @classmethod
    def from_qualifier(cls, value: str, ecosystem: Optional[Ecosystem] = None) -> "DistroInfo":
        """
        Map a pURL `distro` qualifier value onto a release.

        Accepted spellings: "bookworm", "debian-12", "debian-12.11",
        "alpine-3.19", "3.19", "3.19.1". Anything else is preserved verbatim
        with `recognized=False`.

        Args:
            value: The qualifier value
            ecosystem: Ecosystem implied by the pURL type, if known

        Returns:
            DistroInfo (never None)
        """
        key = value.strip().lower()
        if key in DEBIAN_RELEASES and ecosystem in (None, Ecosystem.DEBIAN):
            return cls.debian(key)

        match = _OS_VERSION_PATTERN.match(key)
        if match:
            distro = cls.from_parts(match.group("os"), version=match.group("version"))
            if distro is not None:
                return distro

        if ecosystem is Ecosystem.ALPINE and (key == "edge" or _NUMERIC_VERSION_PATTERN.match(key)):
            return cls.alpine(key)

        return cls(
            os_name=ecosystem or Ecosystem.DEBIAN,
            version_id="",
            raw=value,
            recognized=False,
        )

    @classmethod
    def from_os_release(cls, text: str) -> Optional["DistroInfo"]:
        """
        Parse the content of /etc/os-release.

        Args:
            text: File content with KEY=value lines

        Returns:
            DistroInfo, or None if ID is missing or unsupported
        """
        fields: Dict[str, str] = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#") or "=" not in line:
                continue
            key, value = line.split("=", 1)
            fields[key.strip()] = value.strip().strip('"').strip("'")

        os_id = fields.get("ID", "").lower()
        if not os_id:
            return None
        return cls.from_parts(
            os_id,
            version=fields.get("VERSION_ID"),
            codename=fields.get("VERSION_CODENAME"),
        )

    @classmethod
    def parse(cls, value: str) -> "DistroInfo":
        """
        Parse a user-supplied release such as "debian:12", "bookworm" or "alpine:3.19".

        Raises:
            ValueError: If the value does not name a supported release
        """
        key = value.strip().lower()
        if ":" in key:
            os_name, version = key.split(":", 1)
            distro = cls.from_parts(os_name, version=version)
            if distro is None:
                raise ValueError(f"Unsupported distribution: {value!r}")
            return distro
        distro = cls.from_qualifier(key)
        if not distro.recognized:
            raise ValueError(f"Unsupported distribution: {value!r}")
        return distro

    def to_dict(self) -> dict:
        """Convert to a JSON-friendly dictionary."""
        data = {
            "os_name": self.os_name.value,
            "version_id": self.version_id,
            "codename": self.codename,
        }
        if not self.recognized:
            data["raw"] = self.raw
            data["recognized"] = False
        return data
