"""
Set comparison and classification metrics.
"""

from dataclasses import dataclass
from typing import AbstractSet, Any, Dict, Hashable, List, Mapping

import pandas as pd

METRIC_COLUMNS = ["tp", "fp", "fn", "precision", "recall", "f1"]


def jaccard(a: AbstractSet[Hashable], b: AbstractSet[Hashable]) -> float:
    """
    Jaccard index |a & b| / |a | b|.

    Two empty sets are identical and score 1.0.
    """
    union = len(a | b)
    if union == 0:
        return 1.0
    return len(a & b) / union


@dataclass(frozen=True)
class Metrics:
    """
    Classification counts of predicted against true CVE ids.

    Attributes:
        tp: Predicted and true
        fp: Predicted but not true
        fn: True but not predicted
    """
    tp: int
    fp: int
    fn: int

    @property
    def precision(self) -> float:
        denominator = self.tp + self.fp
        return self.tp / denominator if denominator else 0.0

    @property
    def recall(self) -> float:
        denominator = self.tp + self.fn
        return self.tp / denominator if denominator else 0.0

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r else 0.0

    def to_dict(self) -> Dict[str, Any]:
        """Counts and ratios in table column order."""
        return {
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
        }


def compare_to_truth(predicted: AbstractSet[str], truth: AbstractSet[str]) -> Metrics:
    """
    Score a predicted CVE set against the ground truth.

    Args:
        predicted: CVE ids a scanner reported
        truth: CVE ids from the reference SBOM scan

    Returns:
        Metrics with tp/fp/fn counts
    """
    return Metrics(
        tp=len(predicted & truth),
        fp=len(predicted - truth),
        fn=len(truth - predicted),
    )


def metrics_to_dataframe(rows: Mapping[str, Metrics], decimals: int = 2) -> pd.DataFrame:
    """
    Tabulate metrics, one row per label.

    Args:
        rows: Label (dataset or tool) -> Metrics
        decimals: Rounding applied to the ratio columns

    Returns:
        DataFrame indexed by label with tp, fp, fn, precision, recall, f1
    """
    data: List[Dict[str, Any]] = []
    for label, m in rows.items():
        data.append({"label": label, **m.to_dict()})
    df = pd.DataFrame(data, columns=["label"] + METRIC_COLUMNS).set_index("label")
    return df.round({"precision": decimals, "recall": decimals, "f1": decimals})
