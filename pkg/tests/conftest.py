import numpy as np
import pytest

from scalereduce import Dataset

DATA_DIR = __import__("pathlib").Path(__file__).parent / "data"


def random_scores_decision(rng, m_max=40, score_levels=6):
    """Integer scores (deliberate ties) and a decision with both classes."""
    m = int(rng.integers(4, m_max + 1))
    scores = rng.integers(0, score_levels, size=m).astype(float)
    decision = rng.integers(0, 2, size=m).astype(bool)
    if decision.all():
        decision[rng.integers(0, m)] = False
    if not decision.any():
        decision[rng.integers(0, m)] = True
    return scores, decision


def random_dataset(rng, n_max=8, m_max=30, score_levels=4, signal=True):
    """Small random rating-scale dataset with integer item scores."""
    n = int(rng.integers(1, n_max + 1))
    m = int(rng.integers(6, m_max + 1))
    decision = rng.integers(0, 2, size=m).astype(bool)
    if decision.all():
        decision[rng.integers(0, m)] = False
    if not decision.any():
        decision[rng.integers(0, m)] = True
    attrs = rng.integers(0, score_levels, size=(m, n)).astype(float)
    if signal:
        # nudge some items toward the decision so rankings are non-trivial
        for j in range(n):
            if rng.random() < 0.7:
                attrs[decision, j] += rng.integers(0, 2)
    labels = tuple(f"q{j + 1:02d}" for j in range(n))
    return Dataset(attributes=attrs, labels=labels, decision=decision)


def write_csv(path, header, rows):
    lines = [",".join(header)]
    lines += [",".join(str(c) for c in row) for row in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


@pytest.fixture
def tiny_csv(tmp_path):
    """3-column file, 5 complete rows, binary 0/1 decision."""
    return write_csv(
        tmp_path / "tiny.csv",
        ["a", "b", "d"],
        [
            [1, 4, 0],
            [2, 3, 0],
            [3, 2, 1],
            [4, 1, 1],
            [5, 0, 1],
        ],
    )
