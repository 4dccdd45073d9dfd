"""Version information for the sbom_translate package."""

__version__ = "0.1.0"
