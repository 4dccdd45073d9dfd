"""
Configuration management for sbom-translate.

Every setting has a built-in default, so a missing config file is not an
error. Command-line flags override the file.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import yaml

from sbom_translate.models.enums import Ecosystem, OutputFormat
from sbom_translate.scanner.kernel import DEFAULT_KERNEL_PATTERNS

logger = logging.getLogger(__name__)

# Default locations to search for the config file
CONFIG_SEARCH_PATHS = [
    Path("sbom-translate.yaml"),
    Path("src/python/config.yaml"),
    Path.home() / ".sbom_translate" / "config.yaml",
]

DEFAULT_FETCH_URLS = {
    "debian": "https://security-tracker.debian.org/tracker/data/json",
    "alpine": "https://secdb.alpinelinux.org/v{branch}/{repository}.json",
}


def load_config(config_path: Optional[Path] = None) -> Dict[str, Any]:
    """
    Load configuration from a YAML file.

    Args:
        config_path: Specific path to config file. If None, searches default locations.

    Returns:
        Dictionary containing configuration; empty when no file was found.

    Raises:
        FileNotFoundError: If an explicit config_path does not exist.
        ValueError: If the file does not hold a mapping.
    """
    path_to_load = None

    if config_path:
        if not config_path.exists():
            raise FileNotFoundError(f"Config file not found: {config_path}")
        path_to_load = config_path
    else:
        for path in CONFIG_SEARCH_PATHS:
            if path.exists():
                path_to_load = path
                break

    if not path_to_load:
        logger.info("No config file found, using built-in defaults")
        return {}

    logger.info("Loading config from %s", path_to_load)

    with open(path_to_load, "r", encoding="utf-8") as f:
        config = yaml.safe_load(f)

    if config is not None and not isinstance(config, dict):
        raise ValueError(f"Config file {path_to_load} must contain a mapping")
    return config or {}


def get_kernel_patterns(config: Dict[str, Any], os_name: Ecosystem) -> Tuple[str, ...]:
    """
    Get the kernel source patterns for one ecosystem.

    Args:
        config: Configuration dictionary
        os_name: Ecosystem of the scanned SBOM

    Returns:
        Glob patterns from `kernel_packages.<os>`, or the shipped defaults
    """
    section = config.get("kernel_packages") or {}
    patterns = section.get(os_name.value)
    if patterns is None:
        return DEFAULT_KERNEL_PATTERNS[os_name]
    if isinstance(patterns, str):
        patterns = [patterns]
    return tuple(str(p) for p in patterns)


def get_tracker_settings(config: Dict[str, Any]) -> Dict[str, Any]:
    """
    Get the tracker section with defaults filled in.

    Keys: cutoff_year (None), include_unimportant (False),
    debian_snapshot and alpine_snapshot (None, or a Path).
    """
    tracker = config.get("tracker") or {}
    settings: Dict[str, Any] = {
        "cutoff_year": tracker.get("cutoff_year"),
        "include_unimportant": bool(tracker.get("include_unimportant", False)),
        "debian_snapshot": None,
        "alpine_snapshot": None,
    }
    if settings["cutoff_year"] is not None:
        settings["cutoff_year"] = int(settings["cutoff_year"])
    for key in ("debian_snapshot", "alpine_snapshot"):
        if value := tracker.get(key):
            settings[key] = Path(value).expanduser()
    return settings


def get_output_format(config: Dict[str, Any]) -> OutputFormat:
    """Get the default report format; JSON unless `output.format` says otherwise."""
    value = (config.get("output") or {}).get("format")
    if not value:
        return OutputFormat.JSON
    return OutputFormat.from_string(str(value))


def get_fetch_urls(
    config: Dict[str, Any],
    use_defaults: bool = True,
    logger: Optional[logging.Logger] = None,
) -> Dict[str, str]:
    """
    Get the download URLs used by the `fetch` command.

    Args:
        config: Configuration dictionary
        use_defaults: If True, fill in public tracker URLs when the section is missing.
                     If False, raise ValueError when it is missing.
        logger: Optional logger for a note when defaults are used

    Returns:
        Dictionary with "debian" and "alpine" URL templates

    Raises:
        ValueError: If the fetch section is missing and use_defaults is False
    """
    fetch = config.get("fetch")
    if not fetch:
        if not use_defaults:
            raise ValueError("Config missing 'fetch' section.")
        if logger:
            logger.info("Config missing 'fetch' section, using public tracker URLs")
        return dict(DEFAULT_FETCH_URLS)
    return {**DEFAULT_FETCH_URLS, **{k: str(v) for k, v in fetch.items()}}
