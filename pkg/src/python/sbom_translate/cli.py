#!/usr/bin/env python3
"""
Command-line interface for sbom-translate.

Usage:
    sbom-translate generate /var/lib/dpkg/status --distro debian:12 -o truth.spdx.json
    sbom-translate convert trivy.spdx.json --to docker -o docker.spdx.json
    sbom-translate scan trivy.spdx.json --tracker debian-tracker.json --exclude-kernel
    sbom-translate diff a.spdx.json b.spdx.json
    sbom-translate eval scan-report.json truth-report.json --label trivy
    sbom-translate detect sbom.spdx.json
    sbom-translate validate sbom.spdx.json
    sbom-translate fetch --debian -o debian-tracker.json

Exit codes: 0 success (warnings allowed), 1 input error, 2 internal error.
"""

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any, Dict, FrozenSet, List, Optional, Sequence

import pandas as pd
import requests

from sbom_translate.config import (
    get_fetch_urls,
    get_kernel_patterns,
    get_output_format,
    get_tracker_settings,
    load_config,
)
from sbom_translate.dialect import detect_dialect, emit_with_warnings, normalize
from sbom_translate.errors import SbomTranslateError
from sbom_translate.metrics import (
    compare_to_truth,
    cve_breakdown,
    duplication_stats,
    metrics_to_dataframe,
    package_delta,
    package_jaccard,
    purl_jaccard,
)
from sbom_translate.models import (
    CanonicalSbom,
    DedupeMode,
    Dialect,
    DistroInfo,
    Ecosystem,
    OutputFormat,
    TranslationWarning,
)
from sbom_translate.osdb import generate_reference_sbom, load_os_db, parse_os_release, parse_package_db
from sbom_translate.scanner import ScanOptions, VulnReport, render_report, scan
from sbom_translate.spdx import SpdxDocument, parse_spdx, purl_issues, serialize_spdx
from sbom_translate.tracker import CveDatabase, load_alpine_secdb, load_debian_tracker
from sbom_translate.utils import dump_json

logger = logging.getLogger(__name__)

STDIO = "-"
WARNINGS_SUFFIX = ".warnings.json"
FETCH_TIMEOUT_SECONDS = 120


def setup_logging(verbose: bool = False):
    """Configure logging."""
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(asctime)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler()]
    )
    if verbose:
        logging.getLogger("sbom_translate").setLevel(logging.INFO)


def _read_text(path: str) -> str:
    if path == STDIO:
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_text(text: str, path: Optional[str]) -> None:
    if path is None or path == STDIO:
        sys.stdout.write(text)
        return
    Path(path).write_text(text, encoding="utf-8")
    logger.info("Wrote %s", path)


def _load_document(path: str) -> SpdxDocument:
    return parse_spdx(_read_text(path))


def _normalized(path: str, os_db_path: Optional[Path] = None) -> CanonicalSbom:
    doc = _load_document(path)
    os_db = load_os_db(os_db_path) if os_db_path else None
    return normalize(doc, detect_dialect(doc), os_db=os_db)


def _log_warnings(warnings: Sequence[TranslationWarning]) -> None:
    for w in warnings:
        if w.package:
            logger.warning("%s (%s): %s", w.code, w.package, w.message)
        else:
            logger.warning("%s: %s", w.code, w.message)


def load_tracker(path: Path) -> CveDatabase:
    """
    Load a tracker snapshot, telling Debian and Alpine files apart by shape.

    Alpine secdb files carry "distroversion"/"packages" keys (or are YAML);
    everything else is read as a Debian tracker export.
    """
    text = path.read_text(encoding="utf-8")
    metadata = {"snapshot": path.name}
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return load_alpine_secdb(text, metadata=metadata)
    if isinstance(data, dict) and ("distroversion" in data or "packages" in data):
        return load_alpine_secdb(text, metadata=metadata)
    return load_debian_tracker(text, metadata=metadata)


def _read_cve_ids(path: Path) -> FrozenSet[str]:
    """CVE ids from a scan report JSON or a plain list, one id per line."""
    text = path.read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return frozenset(line.strip() for line in text.splitlines() if line.strip())
    if isinstance(data, dict) and "findings" in data:
        return frozenset(f["cve_id"] for f in data["findings"])
    if isinstance(data, list):
        return frozenset(str(item) for item in data)
    raise SbomTranslateError(f"{path} is neither a scan report nor a list of CVE ids")


def cmd_generate(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    text = _read_text(args.state_file)
    if args.os_release:
        distro = parse_os_release(args.os_release.read_text(encoding="utf-8"))
        if distro is None:
            raise SbomTranslateError(f"{args.os_release} does not describe a supported OS")
    elif args.distro:
        distro = DistroInfo.parse(args.distro)
    else:
        raise SbomTranslateError("One of --distro or --os-release is required")

    packages, ecosystem = parse_package_db(text)
    if ecosystem is not distro.os_name:
        raise SbomTranslateError(
            f"Package database is {ecosystem.value} but the release is {distro.os_name.value}"
        )
    doc = generate_reference_sbom(packages, distro, name=args.name)
    _write_text(serialize_spdx(doc), args.output)
    return 0


def cmd_convert(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    target = Dialect.from_string(args.to)
    if target is Dialect.UNKNOWN:
        raise SbomTranslateError("Cannot convert to the unknown dialect")

    canonical = _normalized(args.input, args.os_db)
    doc, emit_warnings = emit_with_warnings(canonical, target)
    warnings = list(canonical.lossiness) + emit_warnings
    _log_warnings(warnings)

    _write_text(serialize_spdx(doc), args.output)
    if args.output and args.output != STDIO:
        sidecar = Path(args.output + WARNINGS_SUFFIX)
        sidecar.write_text(dump_json([w.to_dict() for w in warnings]), encoding="utf-8")
    return 0


def _scan_options(args: argparse.Namespace, config: Dict[str, Any], ecosystem: Ecosystem) -> ScanOptions:
    settings = get_tracker_settings(config)
    cutoff = args.cutoff_year if args.cutoff_year is not None else settings["cutoff_year"]
    return ScanOptions(
        dedupe_mode=DedupeMode.PER_SOURCE if args.per_source else DedupeMode.PER_BINARY,
        include_unimportant=args.include_unimportant or settings["include_unimportant"],
        cutoff_year=cutoff,
        exclude_kernel=args.exclude_kernel,
        kernel_patterns=get_kernel_patterns(config, ecosystem),
    )


def cmd_scan(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    canonical = _normalized(args.input, args.os_db)
    if args.distro:
        override = DistroInfo.parse(args.distro)
        if canonical.distro is not None and canonical.distro != override:
            logger.warning("Overriding SBOM release %s with %s", canonical.distro.release_key, override.release_key)
        canonical = replace(canonical, distro=override)

    tracker_paths: List[Path] = list(args.tracker or [])
    if not tracker_paths:
        settings = get_tracker_settings(config)
        configured = settings[f"{canonical.ecosystem.value}_snapshot"]
        if configured is None:
            raise SbomTranslateError("No tracker snapshot given (use --tracker or the config file)")
        tracker_paths = [configured]

    db = load_tracker(tracker_paths[0])
    for path in tracker_paths[1:]:
        db = db.merge(load_tracker(path))

    report = scan(canonical, db, _scan_options(args, config, canonical.ecosystem))
    _log_warnings(report.warnings)
    fmt = OutputFormat.from_string(args.format) if args.format else get_output_format(config)
    _write_text(render_report(report, fmt), args.output)
    return 0


def cmd_diff(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    doc_a, doc_b = _load_document(args.sbom_a), _load_document(args.sbom_b)
    a = normalize(doc_a, detect_dialect(doc_a))
    b = normalize(doc_b, detect_dialect(doc_b))
    result = {
        "package_jaccard": package_jaccard(a, b),
        "purl_jaccard": purl_jaccard(doc_a, doc_b),
        **package_delta(a, b),
    }
    _write_text(dump_json(result), args.output)
    return 0


def cmd_eval(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    predicted = _read_cve_ids(args.report)
    truth = _read_cve_ids(args.truth)
    metrics = compare_to_truth(predicted, truth)
    df = metrics_to_dataframe({args.label: metrics}, decimals=args.decimals)

    fmt = OutputFormat.from_string(args.format)
    if fmt is OutputFormat.JSON:
        text = dump_json({"label": args.label, **metrics.to_dict()})
    elif fmt is OutputFormat.TABLE:
        text = df.to_string() + "\n"
    else:
        text = df.to_csv()
    _write_text(text, args.output)
    return 0


def cmd_stats(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    report = VulnReport.from_dict(json.loads(args.report.read_text(encoding="utf-8")))
    stats = duplication_stats(report)
    result = {"duplication": stats.to_dict(), "breakdown": cve_breakdown(report)}
    _write_text(dump_json(result), args.output)
    return 0


def cmd_detect(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    doc = _load_document(args.input)
    print(detect_dialect(doc).value)
    return 0


def cmd_validate(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    doc = _load_document(args.input)
    ecosystem = Ecosystem.from_string(args.ecosystem) if args.ecosystem else None
    rows = [{"element": spdx_id, **issue.to_dict()} for spdx_id, issue in purl_issues(doc, ecosystem)]

    fmt = OutputFormat.from_string(args.format)
    if fmt is OutputFormat.JSON:
        text = dump_json(rows)
    else:
        df = pd.DataFrame(rows, columns=["element", "category", "code", "message", "field"])
        if fmt is OutputFormat.CSV:
            text = df.to_csv(index=False)
        else:
            text = (df.to_string(index=False) if rows else "No issues") + "\n"
    _write_text(text, args.output)
    return 0


def fetch_snapshot(url: str, destination: Path) -> int:
    """
    Download a tracker snapshot to a file.

    Returns:
        Number of bytes written

    Raises:
        requests.RequestException: On network or HTTP errors
    """
    logger.info("Fetching %s", url)
    response = requests.get(url, timeout=FETCH_TIMEOUT_SECONDS)
    response.raise_for_status()
    destination.write_bytes(response.content)
    logger.info("Saved %d bytes to %s", len(response.content), destination)
    return len(response.content)


def cmd_fetch(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    urls = get_fetch_urls(config, logger=logger)
    if args.debian:
        url = urls["debian"]
    else:
        url = urls["alpine"].format(branch=args.alpine_branch.lstrip("v"), repository=args.repository)
    size = fetch_snapshot(url, args.output)
    print(f"Saved {size} bytes from {url} to {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with all subcommands."""
    parser = argparse.ArgumentParser(
        prog="sbom-translate",
        description="Translate OS-package SBOMs between tool dialects and scan them for CVEs."
    )
    parser.add_argument("--config", type=Path, help="Path to configuration file")
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable verbose logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="Generate a reference SBOM from a dpkg/apk database")
    p.add_argument("state_file", help="/var/lib/dpkg/status or /lib/apk/db/installed ('-' for stdin)")
    p.add_argument("--distro", help="Release, e.g. debian:12, bookworm, alpine:3.19")
    p.add_argument("--os-release", type=Path, help="Read the release from an os-release file")
    p.add_argument("--name", default="sbom", help="Document name")
    p.add_argument("-o", "--output", help="Output file (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("convert", help="Convert an SBOM to another tool's dialect")
    p.add_argument("input", help="SPDX JSON file ('-' for stdin)")
    p.add_argument("--to", required=True, help="Target dialect")
    p.add_argument("--os-db", type=Path, help="dpkg/apk database of the image, for source repair")
    p.add_argument("-o", "--output", help="Output file (default stdout); warnings go to <output>.warnings.json")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("scan", help="Match an SBOM against tracker snapshots")
    p.add_argument("input", help="SPDX JSON file ('-' for stdin)")
    p.add_argument("--tracker", type=Path, action="append", help="Tracker snapshot (repeatable)")
    p.add_argument("--distro", help="Release to scan against when the SBOM lacks one")
    p.add_argument("--os-db", type=Path, help="dpkg/apk database of the image, for source repair")
    p.add_argument("--per-source", action="store_true", help="Report each CVE once per source package")
    p.add_argument("--exclude-kernel", action="store_true", help="Drop findings on kernel packages")
    p.add_argument("--cutoff-year", type=int, help="Ignore CVEs assigned after this year")
    p.add_argument("--include-unimportant", action="store_true", help="Count CVEs marked unimportant")
    p.add_argument("--format", choices=[f.value for f in OutputFormat], help="Report format")
    p.add_argument("-o", "--output", help="Output file (default stdout)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("diff", help="Compare the package sets of two SBOMs")
    p.add_argument("sbom_a")
    p.add_argument("sbom_b")
    p.add_argument("-o", "--output", help="Output file (default stdout)")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("eval", help="Precision/recall of a scan against ground truth")
    p.add_argument("report", type=Path, help="Scan report JSON or CVE list")
    p.add_argument("truth", type=Path, help="Ground-truth scan report JSON or CVE list")
    p.add_argument("--label", default="sbom", help="Row label")
    p.add_argument("--decimals", type=int, default=2, help="Rounding of the ratio columns")
    p.add_argument("--format", choices=[f.value for f in OutputFormat], default="csv")
    p.add_argument("-o", "--output", help="Output file (default stdout)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("stats", help="Duplication statistics of a per-binary scan report")
    p.add_argument("report", type=Path, help="Scan report JSON")
    p.add_argument("-o", "--output", help="Output file (default stdout)")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("detect", help="Print the dialect of an SBOM")
    p.add_argument("input", help="SPDX JSON file ('-' for stdin)")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("validate", help="List pURL and SBOM compliance issues")
    p.add_argument("input", help="SPDX JSON file ('-' for stdin)")
    p.add_argument("--ecosystem", choices=[e.value for e in Ecosystem])
    p.add_argument("--format", choices=[f.value for f in OutputFormat], default="json")
    p.add_argument("-o", "--output", help="Output file (default stdout)")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("fetch", help="Download a tracker snapshot (network access)")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--debian", action="store_true", help="Debian Security Tracker JSON export")
    source.add_argument("--alpine-branch", help="Alpine secdb branch, e.g. 3.20")
    p.add_argument("--repository", default="main", help="Alpine repository (main or community)")
    p.add_argument("-o", "--output", type=Path, required=True, help="Snapshot file to write")
    p.set_defaults(func=cmd_fetch)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    try:
        config = load_config(args.config)
        return args.func(args, config)
    except (ValueError, OSError, requests.RequestException) as e:
        # SbomTranslateError is a ValueError
        print(f"Error: {e}", file=sys.stderr)
        return 1
    except Exception as e:
        logger.debug("Unhandled error", exc_info=True)
        print(f"Critical Error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
