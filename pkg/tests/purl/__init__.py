"""Tests for sbom_translate.purl module."""
