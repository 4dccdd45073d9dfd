"""Tests for sbom_translate.tracker module."""
