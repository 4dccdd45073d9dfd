"""End-to-end tests: translate between every pair of dialects and rescan."""

import itertools
from dataclasses import replace

import pytest

from sbom_translate.dialect import detect_dialect, emit, normalize, translate
from sbom_translate.metrics import package_jaccard
from sbom_translate.models import Dialect, Ecosystem
from sbom_translate.scanner import scan
from sbom_translate.spdx import parse_spdx, serialize_spdx

DIALECT_PAIRS = list(itertools.product(Dialect.targets(), repeat=2))


def _reread(doc):
    """Serialize and parse again, the way documents travel between tools."""
    return parse_spdx(serialize_spdx(doc))


def _renormalize(doc):
    return normalize(doc, detect_dialect(doc))


@pytest.mark.integration
class TestDialectRoundTrip:
    """Tests that translation keeps every CVE of the fixture images."""

    @pytest.mark.parametrize("ecosystem", [Ecosystem.DEBIAN, Ecosystem.ALPINE])
    @pytest.mark.parametrize("source,target", DIALECT_PAIRS)
    def test_cves_preserved(self, ecosystem_images, ecosystem, source, target):
        """Test source dialect -> canonical -> target dialect -> scan."""
        sbom, db, expected = ecosystem_images[ecosystem]
        first = _renormalize(_reread(emit(sbom, source)))
        second = _renormalize(_reread(emit(first, target)))
        assert second.distro == sbom.distro
        assert scan(second, db).distinct_cves == expected

    @pytest.mark.parametrize("target", Dialect.targets())
    def test_packages_preserved(self, debian_sbom, target):
        """Test package identities survive one translation."""
        assert package_jaccard(debian_sbom, _renormalize(_reread(emit(debian_sbom, target)))) == 1.0

    @pytest.mark.parametrize("target", Dialect.targets())
    def test_translate_matches_manual_pipeline(self, debian_sbom, target):
        """Test translate() is detect, normalize and emit in one call."""
        doc = emit(debian_sbom, Dialect.ANCHORE)
        translated, _ = translate(doc, target)
        assert serialize_spdx(translated) == serialize_spdx(emit(_renormalize(doc), target))


@pytest.mark.integration
class TestForeignDocuments:
    """Tests for documents whose producer dropped the release."""

    def test_microsoft_without_marker(self, debian_sbom, debian_tracker):
        """Test a bare Microsoft document cannot be matched without a release."""
        doc = emit(debian_sbom, Dialect.MICROSOFT)
        packages = tuple(p for p in doc.packages if p.primary_package_purpose != "OPERATING-SYSTEM")
        marker_ids = {p.spdx_id for p in doc.packages} - {p.spdx_id for p in packages}
        relationships = tuple(
            r for r in doc.relationships if r.element not in marker_ids and r.related not in marker_ids
        )
        bare = _reread(replace(
            doc, packages=packages, relationships=relationships,
            creators=("Tool: Microsoft.SBOMTool-3.0.1",), creation_comment=None,
        ))
        sbom = _renormalize(bare)
        assert sbom.distro is None
        assert "distro-missing" in [w.code for w in sbom.lossiness]
        report = scan(sbom, debian_tracker)
        assert len(report) == 0
        assert [w.code for w in report.warnings] == ["distro-missing"]
