"""Tests for sbom_translate.metrics module."""
