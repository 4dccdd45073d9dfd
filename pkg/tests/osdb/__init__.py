"""Tests for sbom_translate.osdb module."""
