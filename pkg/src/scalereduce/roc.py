"""ROC curves and tie-aware AUC for a score vector against a binary decision.

Orientation is fixed throughout: a higher score ranks toward the positive
class. AUC uses the pairwise kernel

    psi(s_pos, s_neg) = 1 if s_pos > s_neg, 0.5 if equal, 0 otherwise

so it equals the Mann-Whitney probability that a random positive outranks a
random negative, with ties counted half. The fast evaluation below goes
through midranks and agrees with the O(P*N) pair enumeration exactly, not
just to rounding: both numerators are sums of half-integers and both divide
by the same P*N.

Everything here is a pure function of immutable inputs; concurrent calls
are safe.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from .dataset import ColumnSelection, Dataset, resolve_columns
from .errors import SingleClass


@dataclass(frozen=True)
class RocCurve:
    """ROC points in threshold-descending order, with trapezoidal area.

    fpr/tpr/thresholds are parallel arrays. The first point is (0, 0) at
    threshold +inf; one point follows per distinct score value, so the last
    point is always (1, 1) at the smallest score. A point's coordinates are
    the false/true positive rates of the classifier "score >= threshold".
    """

    fpr: np.ndarray
    tpr: np.ndarray
    thresholds: np.ndarray
    auc: float
    n_pos: int
    n_neg: int

    @property
    def points(self) -> list[tuple[float, float, float]]:
        """(fpr, tpr, threshold) triples, ordered."""
        return list(zip(self.fpr.tolist(), self.tpr.tolist(), self.thresholds.tolist()))


@dataclass(frozen=True)
class PlacementValues:
    """Per-observation means of the pairwise ranking kernel.

    v10[i] is the mean of psi(score_i, score_j) over negatives j, one entry
    per positive i; v01[j] is the mean over positives i, one entry per
    negative j. mean(v10) == mean(v01) == auc.
    """

    v10: np.ndarray
    v01: np.ndarray


def _split(scores, decision) -> tuple[np.ndarray, np.ndarray]:
    s = np.asarray(scores, dtype=float).ravel()
    d = np.asarray(decision, dtype=bool).ravel()
    if s.shape != d.shape:
        raise ValueError(
            f"scores length {s.size} does not match decision length {d.size}"
        )
    if d.all() or not d.any():
        raise SingleClass("need at least one positive and one negative example")
    return s, d


def auc(scores, decision) -> float:
    """Tie-aware AUC of scores against the binary decision.

    Midrank evaluation, O(m log m): with R the sum of the positives'
    average ranks in the combined sample,

        auc = (R - P*(P+1)/2) / (P*N)
    """
    s, d = _split(scores, decision)
    n_pos = int(d.sum())
    n_neg = d.size - n_pos
    ranks = rankdata(s, method="average")
    rank_sum = float(ranks[d].sum())
    return (rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)


def roc_curve(scores, decision) -> RocCurve:
    """ROC curve with one point per distinct score value.

    Tied scores collapse to a single point, which makes the trapezoidal
    area equal to the tie-aware Mann-Whitney AUC.
    """
    s, d = _split(scores, decision)
    n_pos = int(d.sum())
    n_neg = d.size - n_pos

    order = np.argsort(-s, kind="stable")
    s_desc = s[order]
    d_desc = d[order]
    cum_tp = np.cumsum(d_desc)
    cum_fp = np.cumsum(~d_desc)
    # last index of each run of equal scores
    run_end = np.nonzero(np.append(s_desc[:-1] != s_desc[1:], True))[0]

    fpr = np.concatenate(([0.0], cum_fp[run_end] / n_neg))
    tpr = np.concatenate(([0.0], cum_tp[run_end] / n_pos))
    thresholds = np.concatenate(([np.inf], s_desc[run_end]))

    area = float(np.sum(np.diff(fpr) * (tpr[1:] + tpr[:-1])) / 2.0)
    return RocCurve(
        fpr=fpr, tpr=tpr, thresholds=thresholds,
        auc=area, n_pos=n_pos, n_neg=n_neg,
    )


def placements(scores, decision) -> PlacementValues:
    """Placement values v10 (per positive) and v01 (per negative).

    Computed from midranks: for positive i with combined-sample rank R_i
    and within-positives rank r_i, v10[i] = (R_i - r_i) / N, and
    symmetrically v01[j] = 1 - (R_j - r_j) / P for negatives. Entries are
    in row order of the input within each class.
    """
    s, d = _split(scores, decision)
    n_pos = int(d.sum())
    n_neg = d.size - n_pos
    ranks_all = rankdata(s, method="average")
    ranks_pos = rankdata(s[d], method="average")
    ranks_neg = rankdata(s[~d], method="average")
    v10 = (ranks_all[d] - ranks_pos) / n_neg
    v01 = 1.0 - (ranks_all[~d] - ranks_neg) / n_pos
    return PlacementValues(v10=v10, v01=v01)


def sum_scores(ds: Dataset, cols: ColumnSelection) -> np.ndarray:
    """Row-wise unweighted sum of the selected columns."""
    idx = resolve_columns(ds, cols)
    total = np.zeros(ds.n_rows)
    for i in idx:
        total += ds.attributes[:, i]
    return total
