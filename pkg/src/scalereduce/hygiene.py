"""Pre-reduction data screening: replicated examples and gray examples.

A gray example shares its full attribute row with another example that has
the opposite decision. Row equality is exact value equality, no epsilon:
rating scale items are discrete codes and tolerance matching would silently
merge distinct responses. Rows are grouped by hashing their raw bytes
(negative zeros normalized first), which matches an elementwise == scan on
finite data.

These functions only report; nothing is removed. Whether to screen raw or
deduplicated rows is the caller's choice: both take plain matrices, so
feeding np.unique(...) output works the same way.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import EmptyDataset, IndexOutOfRange


@dataclass(frozen=True)
class DuplicateReport:
    total_examples: int
    distinct_examples: int
    duplicate_examples: int


@dataclass(frozen=True)
class GrayPair:
    """Two rows with identical attributes and different decisions; a < b."""

    row_index_a: int
    row_index_b: int
    attribute_values: tuple[float, ...]
    decision_a: object
    decision_b: object


def _as_matrix(attrs) -> np.ndarray:
    a = np.asarray(attrs, dtype=float)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise EmptyDataset("attribute matrix must have at least one row and column")
    # +0.0 maps -0.0 to +0.0 so byte keys agree with == comparison
    return np.ascontiguousarray(a + 0.0)


def _row_groups(a: np.ndarray) -> dict[bytes, list[int]]:
    groups: dict[bytes, list[int]] = defaultdict(list)
    for i in range(a.shape[0]):
        groups[a[i].tobytes()].append(i)
    return groups


def diff_examples(attrs) -> DuplicateReport:
    """Count distinct attribute rows and duplicates (total - distinct).

    The decision column is not part of the key; pass attributes only.
    """
    a = _as_matrix(attrs)
    groups = _row_groups(a)
    total = a.shape[0]
    distinct = len(groups)
    return DuplicateReport(
        total_examples=total,
        distinct_examples=distinct,
        duplicate_examples=total - distinct,
    )


def gray_examples(attrs, decision) -> list[GrayPair]:
    """All unordered row pairs with equal attributes and unequal decisions.

    Each pair appears once as (a, b) with a < b; the list is sorted by
    (a, b), so output is deterministic.
    """
    a = _as_matrix(attrs)
    d = np.asarray(decision).ravel()
    if d.shape[0] != a.shape[0]:
        raise ValueError(
            f"decision length {d.shape[0]} does not match {a.shape[0]} rows"
        )
    pairs: list[GrayPair] = []
    for indices in _row_groups(a).values():
        if len(indices) < 2:
            continue
        for i, j in combinations(indices, 2):
            if d[i] != d[j]:
                pairs.append(
                    GrayPair(
                        row_index_a=i,
                        row_index_b=j,
                        attribute_values=tuple(a[i].tolist()),
                        decision_a=d[i].item() if hasattr(d[i], "item") else d[i],
                        decision_b=d[j].item() if hasattr(d[j], "item") else d[j],
                    )
                )
    pairs.sort(key=lambda p: (p.row_index_a, p.row_index_b))
    return pairs


def gray_examples_for(attrs, decision, n: int) -> list[int]:
    """Rows sharing example n's full attribute row, any decision.

    Returns row n first, then the matching rows in ascending index order.
    A unique row yields [n]. The caller inspects the decisions to decide
    whether the replicas are gray.
    """
    a = _as_matrix(attrs)
    d = np.asarray(decision).ravel()
    if d.shape[0] != a.shape[0]:
        raise ValueError(
            f"decision length {d.shape[0]} does not match {a.shape[0]} rows"
        )
    if not 0 <= n < a.shape[0]:
        raise IndexOutOfRange(f"row index {n} out of range for {a.shape[0]} rows")
    key = a[n].tobytes()
    matches = [i for i in range(a.shape[0]) if i != n and a[i].tobytes() == key]
    return [n] + matches
