"""Tests for sbom_translate.models module."""
