"""Tests for sbom_translate.verscmp module."""
