"""Tests for the AUC difference of two correlated ROC curves.

Both curves are built from the same examples (same decision vector), e.g.
the reduced-scale sum and that sum plus one more item, so the comparison
must account for the correlation. Two methods:

* delong_test: asymptotic normal test. With placement values v10 (one per
  positive) and v01 (one per negative) for each score vector,

      Var(auc_r)  = var(v10_r)/P + var(v01_r)/N
      Cov(a1, a2) = cov(v10_1, v10_2)/P + cov(v01_1, v01_2)/N
      z = (auc_1 - auc_2) / sqrt(Var1 + Var2 - 2 Cov)

  using unbiased sample (co)variances (P-1, N-1 denominators).

* bootstrap_test: stratified resampling. Each replicate redraws P positives
  and N negatives with replacement, keeping scores_1/scores_2 paired within
  each drawn row; z = (auc_1 - auc_2) / sd of the replicate AUC differences.
  Fully determined by the seed.

Zero-difference convention: when auc_1 equals auc_2 exactly the result is
z = 0, p = 1, whatever the variance would be; this avoids 0/0 on identical
curves.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import norm, rankdata

from .dataset import Dataset
from .errors import DegenerateVariance, NoNextAttribute
from .reduction import reduce_ranking, total_auc
from .roc import _split, auc, placements, sum_scores

ALTERNATIVES = ("two-sided", "less", "greater")


@dataclass(frozen=True)
class PairedRocTest:
    """Outcome of a correlated-ROC AUC comparison.

    z is signed by auc_1 - auc_2. For alternative "greater" the alternative
    hypothesis is auc_1 > auc_2; "less" the reverse. n_boot and seed are
    set for bootstrap results only.
    """

    method: str
    auc_1: float
    auc_2: float
    z: float
    p_value: float
    alternative: str
    n_boot: int | None = None
    seed: int | None = None


def _p_value(z: float, alternative: str) -> float:
    if alternative == "two-sided":
        return float(2.0 * norm.sf(abs(z)))
    if alternative == "greater":
        return float(norm.sf(z))
    if alternative == "less":
        return float(norm.cdf(z))
    raise ValueError(f"alternative must be one of {ALTERNATIVES}, got {alternative!r}")


def _check_alternative(alternative: str) -> None:
    if alternative not in ALTERNATIVES:
        raise ValueError(
            f"alternative must be one of {ALTERNATIVES}, got {alternative!r}"
        )


def delong_test(
    scores_1, scores_2, decision, alternative: str = "two-sided"
) -> PairedRocTest:
    """Asymptotic test for a difference of two correlated AUCs."""
    _check_alternative(alternative)
    s1, d = _split(scores_1, decision)
    s2, _ = _split(scores_2, decision)
    if s1.shape != s2.shape:
        raise ValueError("score vectors must have the same length")

    auc_1 = auc(s1, d)
    auc_2 = auc(s2, d)
    if auc_1 == auc_2:
        return PairedRocTest(
            method="delong", auc_1=auc_1, auc_2=auc_2,
            z=0.0, p_value=1.0, alternative=alternative,
        )

    n_pos = int(d.sum())
    n_neg = d.size - n_pos
    if n_pos < 2 or n_neg < 2:
        raise DegenerateVariance(
            "need at least two positives and two negatives to estimate variance"
        )
    p1 = placements(s1, d)
    p2 = placements(s2, d)
    s10 = np.cov(p1.v10, p2.v10, ddof=1)
    s01 = np.cov(p1.v01, p2.v01, ddof=1)
    var_1 = s10[0, 0] / n_pos + s01[0, 0] / n_neg
    var_2 = s10[1, 1] / n_pos + s01[1, 1] / n_neg
    cov_12 = s10[0, 1] / n_pos + s01[0, 1] / n_neg
    var_diff = var_1 + var_2 - 2.0 * cov_12
    if var_diff <= 0.0:
        raise DegenerateVariance(
            f"variance of the AUC difference is {var_diff!r} with unequal AUCs"
        )
    z = (auc_1 - auc_2) / np.sqrt(var_diff)
    return PairedRocTest(
        method="delong", auc_1=auc_1, auc_2=auc_2,
        z=float(z), p_value=_p_value(float(z), alternative),
        alternative=alternative,
    )


def _auc_by_row(scores: np.ndarray, n_pos: int) -> np.ndarray:
    """Row-wise tie-aware AUC of an (n_boot, m) matrix whose first n_pos
    columns are the positives."""
    n_neg = scores.shape[1] - n_pos
    ranks = rankdata(scores, method="average", axis=1)
    rank_sum = ranks[:, :n_pos].sum(axis=1)
    return (rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)


def bootstrap_test(
    scores_1,
    scores_2,
    decision,
    alternative: str = "two-sided",
    n_boot: int = 2000,
    seed: int | None = None,
) -> PairedRocTest:
    """Stratified-bootstrap test for a difference of two correlated AUCs."""
    _check_alternative(alternative)
    if n_boot < 1:
        raise ValueError(f"n_boot must be >= 1, got {n_boot}")
    if seed is None:
        raise ValueError("bootstrap_test requires an explicit seed")
    s1, d = _split(scores_1, decision)
    s2, _ = _split(scores_2, decision)
    if s1.shape != s2.shape:
        raise ValueError("score vectors must have the same length")

    auc_1 = auc(s1, d)
    auc_2 = auc(s2, d)
    if auc_1 == auc_2:
        return PairedRocTest(
            method="bootstrap", auc_1=auc_1, auc_2=auc_2,
            z=0.0, p_value=1.0, alternative=alternative,
            n_boot=n_boot, seed=seed,
        )

    pos = np.nonzero(d)[0]
    neg = np.nonzero(~d)[0]
    n_pos, n_neg = pos.size, neg.size
    rng = np.random.default_rng(seed)
    pos_draw = rng.integers(0, n_pos, size=(n_boot, n_pos))
    neg_draw = rng.integers(0, n_neg, size=(n_boot, n_neg))

    s1_pos, s1_neg = s1[pos], s1[neg]
    s2_pos, s2_neg = s2[pos], s2[neg]
    rep_1 = np.concatenate((s1_pos[pos_draw], s1_neg[neg_draw]), axis=1)
    rep_2 = np.concatenate((s2_pos[pos_draw], s2_neg[neg_draw]), axis=1)
    diffs = _auc_by_row(rep_1, n_pos) - _auc_by_row(rep_2, n_pos)

    sd = float(diffs.std(ddof=1)) if n_boot > 1 else 0.0
    if not np.isfinite(sd) or sd <= 0.0:
        raise DegenerateVariance(
            "bootstrap AUC differences have zero spread with unequal AUCs"
        )
    z = (auc_1 - auc_2) / sd
    return PairedRocTest(
        method="bootstrap", auc_1=auc_1, auc_2=auc_2,
        z=float(z), p_value=_p_value(float(z), alternative),
        alternative=alternative, n_boot=n_boot, seed=seed,
    )


def check_attr_for_inclusion(
    ds: Dataset,
    method: str = "delong",
    alternative: str = "two-sided",
    n_boot: int = 2000,
    seed: int | None = None,
) -> PairedRocTest:
    """Should one more item join the reduced scale?

    Runs the reduction, sums the retained prefix (scores_1), adds the next
    item in ranking order (scores_2) and tests the AUC difference with the
    chosen method. The next item is exactly the one whose addition first
    failed to improve the running AUC.
    """
    ranking = total_auc(ds)
    scale = reduce_ranking(ranking)
    kept = len(scale.items)
    if kept == ds.n_items:
        raise NoNextAttribute(
            "the scale was not reducible: the reduction retained every "
            "item, so there is no next attribute whose inclusion could be "
            "tested"
        )
    next_label = ranking.order[kept]
    scores_1 = sum_scores(ds, scale.items)
    scores_2 = scores_1 + ds.column(next_label)
    if method == "delong":
        return delong_test(scores_1, scores_2, ds.decision, alternative)
    if method == "bootstrap":
        return bootstrap_test(
            scores_1, scores_2, ds.decision, alternative, n_boot=n_boot, seed=seed
        )
    raise ValueError(f"method must be 'delong' or 'bootstrap', got {method!r}")
