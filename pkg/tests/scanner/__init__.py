"""Tests for sbom_translate.scanner module."""
