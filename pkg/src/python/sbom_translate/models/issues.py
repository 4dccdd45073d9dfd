"""
Compliance issues and translation warnings.

Both are plain data: validators and translators return lists of them
instead of raising, so a caller can report every problem in one pass.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from sbom_translate.models.enums import IssueCategory


@dataclass(frozen=True)
class ComplianceIssue:
    """
    A single deviation of a pURL or SBOM from the specifications.

    Attributes:
        category: Issue class (invalid format, incomplete, incorrect, format reliance)
        code: Stable short identifier such as "nonstandard-type"
        message: Human readable description
        field: The pURL or SPDX field that triggered the issue
    """
    category: IssueCategory
    code: str
    message: str
    field: str

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-friendly dictionary."""
        return {
            "category": self.category.value,
            "code": self.code,
            "message": self.message,
            "field": self.field,
        }


@dataclass(frozen=True)
class TranslationWarning:
    """
    Information lost or repaired while translating an SBOM.

    Attributes:
        code: Stable short identifier such as "distro-missing"
        message: Human readable description
        package: Name of the affected package, None for document-level warnings
        category: Issue class when the warning stems from a compliance problem
    """
    code: str
    message: str
    package: Optional[str] = None
    category: Optional[IssueCategory] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-friendly dictionary."""
        return {
            "code": self.code,
            "message": self.message,
            "package": self.package,
            "category": self.category.value if self.category else None,
        }
