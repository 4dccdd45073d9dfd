"""Tests for sbom_translate.spdx module."""
