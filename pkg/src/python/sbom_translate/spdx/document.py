"""
SPDX 2.x JSON document model.

Only the fields the translation layer reads or writes are modelled. Every
other key is kept verbatim in an `extras` mapping so that reading and then
writing a document loses nothing. Optional fields that are absent stay None
and are not written back.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Set, Tuple

from sbom_translate.errors import MalformedJson, MissingRequiredField
from sbom_translate.utils import dump_json

logger = logging.getLogger(__name__)

DOCUMENT_ID = "SPDXRef-DOCUMENT"
SPECIAL_ELEMENT_IDS = frozenset({"NOASSERTION", "NONE"})

_PACKAGE_FIELDS = (
    "SPDXID",
    "name",
    "versionInfo",
    "sourceInfo",
    "attributionTexts",
    "primaryPackagePurpose",
    "externalRefs",
)
_DOCUMENT_FIELDS = (
    "spdxVersion",
    "SPDXID",
    "name",
    "dataLicense",
    "documentNamespace",
    "creationInfo",
    "packages",
    "files",
    "relationships",
)


@dataclass(frozen=True)
class ExternalRef:
    """An SPDX package external reference, e.g. a pURL locator."""
    category: str
    type: str
    locator: str
    extras: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def purl(cls, locator: str) -> "ExternalRef":
        """Build a PACKAGE-MANAGER/purl reference."""
        return cls(category="PACKAGE-MANAGER", type="purl", locator=locator)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExternalRef":
        known = ("referenceCategory", "referenceType", "referenceLocator")
        return cls(
            category=data.get("referenceCategory", ""),
            type=data.get("referenceType", ""),
            locator=data.get("referenceLocator", ""),
            extras={k: v for k, v in data.items() if k not in known},
        )

    def to_dict(self) -> Dict[str, Any]:
        data = dict(self.extras)
        data.update({
            "referenceCategory": self.category,
            "referenceType": self.type,
            "referenceLocator": self.locator,
        })
        return data


@dataclass(frozen=True)
class SpdxPackage:
    """
    An SPDX package.

    Attributes:
        spdx_id: Element identifier ("SPDXRef-Package-...")
        name: Package name
        version_info: `versionInfo`
        source_info: `sourceInfo`; Trivy keeps the source package here
        attribution_texts: `attributionTexts`, order preserved
        primary_package_purpose: `primaryPackagePurpose` ("LIBRARY", "OPERATING-SYSTEM", ...)
        external_refs: `externalRefs`
        extras: All other keys, verbatim
    """
    spdx_id: str
    name: Optional[str] = None
    version_info: Optional[str] = None
    source_info: Optional[str] = None
    attribution_texts: Optional[Tuple[str, ...]] = None
    primary_package_purpose: Optional[str] = None
    external_refs: Optional[Tuple[ExternalRef, ...]] = None
    extras: Dict[str, Any] = field(default_factory=dict)

    @property
    def purl(self) -> Optional[str]:
        """Locator of the first pURL external reference, in document order."""
        for ref in self.external_refs or ():
            if ref.type.lower() == "purl":
                return ref.locator
        return None

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SpdxPackage":
        """
        Build from parsed JSON.

        Raises:
            MissingRequiredField: If SPDXID is missing
        """
        if not isinstance(data, dict):
            raise MissingRequiredField(f"Package entry is not an object: {data!r}")
        if not data.get("SPDXID"):
            raise MissingRequiredField(f"Package without SPDXID: {data.get('name')!r}")
        texts = data.get("attributionTexts")
        refs = data.get("externalRefs")
        return cls(
            spdx_id=data["SPDXID"],
            name=data.get("name"),
            version_info=data.get("versionInfo"),
            source_info=data.get("sourceInfo"),
            attribution_texts=tuple(texts) if texts is not None else None,
            primary_package_purpose=data.get("primaryPackagePurpose"),
            external_refs=tuple(ExternalRef.from_dict(r) for r in refs) if refs is not None else None,
            extras={k: v for k, v in data.items() if k not in _PACKAGE_FIELDS},
        )

    def to_dict(self) -> Dict[str, Any]:
        data = dict(self.extras)
        data["SPDXID"] = self.spdx_id
        optional = {
            "name": self.name,
            "versionInfo": self.version_info,
            "sourceInfo": self.source_info,
            "attributionTexts": list(self.attribution_texts) if self.attribution_texts is not None else None,
            "primaryPackagePurpose": self.primary_package_purpose,
            "externalRefs": [r.to_dict() for r in self.external_refs] if self.external_refs is not None else None,
        }
        data.update({k: v for k, v in optional.items() if v is not None})
        return data


@dataclass(frozen=True)
class SpdxFile:
    """An SPDX file entry; only the identifier is interpreted."""
    spdx_id: str
    extras: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SpdxFile":
        if not isinstance(data, dict) or not data.get("SPDXID"):
            raise MissingRequiredField(f"File without SPDXID: {data!r}")
        return cls(data["SPDXID"], {k: v for k, v in data.items() if k != "SPDXID"})

    def to_dict(self) -> Dict[str, Any]:
        data = dict(self.extras)
        data["SPDXID"] = self.spdx_id
        return data


@dataclass(frozen=True)
class SpdxRelationship:
    """An SPDX relationship such as DESCRIBES, CONTAINS or GENERATED_FROM."""
    element: str
    type: str
    related: str
    extras: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SpdxRelationship":
        known = ("spdxElementId", "relationshipType", "relatedSpdxElement")
        if not isinstance(data, dict) or any(k not in data for k in known):
            raise MissingRequiredField(f"Incomplete relationship: {data!r}")
        return cls(
            element=data["spdxElementId"],
            type=data["relationshipType"],
            related=data["relatedSpdxElement"],
            extras={k: v for k, v in data.items() if k not in known},
        )

    def to_dict(self) -> Dict[str, Any]:
        data = dict(self.extras)
        data.update({
            "spdxElementId": self.element,
            "relationshipType": self.type,
            "relatedSpdxElement": self.related,
        })
        return data


@dataclass(frozen=True)
class SpdxDocument:
    """
    An SPDX 2.x document.

    Attributes:
        spdx_version: "SPDX-2.3"
        name: Document name
        creators: `creationInfo.creators`, e.g. ["Tool: trivy-0.58.1"]
        packages: Packages in document order
        files: Files, None when the key was absent
        relationships: Relationships, None when the key was absent
        spdx_id: Document element id
        data_license: `dataLicense`
        document_namespace: `documentNamespace`
        created: `creationInfo.created`
        creation_comment: `creationInfo.comment`
        creation_extras: Other `creationInfo` keys
        extras: Other top-level keys (annotations, snippets, ...)
    """
    spdx_version: str
    name: str
    creators: Tuple[str, ...]
    packages: Tuple[SpdxPackage, ...]
    files: Optional[Tuple[SpdxFile, ...]] = None
    relationships: Optional[Tuple[SpdxRelationship, ...]] = None
    spdx_id: str = DOCUMENT_ID
    data_license: Optional[str] = "CC0-1.0"
    document_namespace: Optional[str] = None
    created: Optional[str] = None
    creation_comment: Optional[str] = None
    creation_extras: Dict[str, Any] = field(default_factory=dict)
    extras: Dict[str, Any] = field(default_factory=dict)

    def element_ids(self) -> Set[str]:
        """All element identifiers defined by this document."""
        ids = {self.spdx_id}
        ids.update(p.spdx_id for p in self.packages)
        ids.update(f.spdx_id for f in self.files or ())
        for snippet in self.extras.get("snippets") or ():
            if isinstance(snippet, dict) and snippet.get("SPDXID"):
                ids.add(snippet["SPDXID"])
        return ids

    def package(self, spdx_id: str) -> Optional[SpdxPackage]:
        """Get a package by SPDXID."""
        for pkg in self.packages:
            if pkg.spdx_id == spdx_id:
                return pkg
        return None

    def iter_relationships(self, rel_type: Optional[str] = None) -> Iterator[SpdxRelationship]:
        """Iterate relationships, optionally of one type only."""
        for rel in self.relationships or ():
            if rel_type is None or rel.type == rel_type:
                yield rel

    def validate(self) -> None:
        """
        Check referential integrity.

        Raises:
            MissingRequiredField: On duplicate package ids or dangling relationship ids
        """
        seen: Set[str] = set()
        for pkg in self.packages:
            if pkg.spdx_id in seen:
                raise MissingRequiredField(f"Duplicate package SPDXID: {pkg.spdx_id}")
            seen.add(pkg.spdx_id)

        ids = self.element_ids()
        for rel in self.relationships or ():
            for ref in (rel.element, rel.related):
                if ref in ids or ref in SPECIAL_ELEMENT_IDS or ref.startswith("DocumentRef-"):
                    continue
                raise MissingRequiredField(
                    f"Relationship {rel.type} references unknown element {ref!r}"
                )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to the SPDX JSON structure."""
        data = dict(self.extras)
        creation = dict(self.creation_extras)
        creation["creators"] = list(self.creators)
        if self.created is not None:
            creation["created"] = self.created
        if self.creation_comment is not None:
            creation["comment"] = self.creation_comment
        data.update({
            "spdxVersion": self.spdx_version,
            "SPDXID": self.spdx_id,
            "name": self.name,
            "creationInfo": creation,
            "packages": [p.to_dict() for p in self.packages],
        })
        if self.data_license is not None:
            data["dataLicense"] = self.data_license
        if self.document_namespace is not None:
            data["documentNamespace"] = self.document_namespace
        if self.files is not None:
            data["files"] = [f.to_dict() for f in self.files]
        if self.relationships is not None:
            data["relationships"] = [r.to_dict() for r in self.relationships]
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SpdxDocument":
        """
        Build from parsed JSON and check referential integrity.

        Raises:
            MissingRequiredField: If packages are missing or references dangle
        """
        if not isinstance(data, dict):
            raise MissingRequiredField("SPDX document is not a JSON object")
        if not isinstance(data.get("packages"), list):
            raise MissingRequiredField("SPDX document has no 'packages' array")

        creation = data.get("creationInfo") or {}
        files = data.get("files")
        relationships = data.get("relationships")
        doc = cls(
            spdx_version=data.get("spdxVersion", "SPDX-2.3"),
            name=data.get("name", ""),
            creators=tuple(creation.get("creators") or ()),
            packages=tuple(SpdxPackage.from_dict(p) for p in data["packages"]),
            files=tuple(SpdxFile.from_dict(f) for f in files) if files is not None else None,
            relationships=(
                tuple(SpdxRelationship.from_dict(r) for r in relationships)
                if relationships is not None else None
            ),
            spdx_id=data.get("SPDXID", DOCUMENT_ID),
            data_license=data.get("dataLicense"),
            document_namespace=data.get("documentNamespace"),
            created=creation.get("created"),
            creation_comment=creation.get("comment"),
            creation_extras={k: v for k, v in creation.items() if k not in ("creators", "created", "comment")},
            extras={k: v for k, v in data.items() if k not in _DOCUMENT_FIELDS},
        )
        doc.validate()
        return doc


def parse_spdx(text: str) -> SpdxDocument:
    """
    Parse an SPDX 2.x JSON document.

    Args:
        text: JSON text

    Returns:
        SpdxDocument

    Raises:
        MalformedJson: If the text is not JSON
        MissingRequiredField: If packages or SPDXIDs are missing or a
            relationship references an unknown element
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedJson(f"SPDX document is not valid JSON: {e}") from e
    doc = SpdxDocument.from_dict(data)
    logger.info("Parsed SPDX document %r with %d packages", doc.name, len(doc.packages))
    return doc


def serialize_spdx(doc: SpdxDocument) -> str:
    """Serialize to JSON with sorted keys and a trailing newline."""
    return dump_json(doc.to_dict())


def purl_packages(doc: SpdxDocument) -> List[Tuple[SpdxPackage, str]]:
    """Packages that carry a pURL, paired with the pURL text."""
    return [(p, p.purl) for p in doc.packages if p.purl]
