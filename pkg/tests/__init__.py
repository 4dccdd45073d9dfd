"""Tests for the sbom_translate package."""
