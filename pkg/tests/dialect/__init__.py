"""Tests for sbom_translate.dialect module."""
