"""Generate the frozen 21-item fixture used by the reduction tests.

Writes tests/data/scale21.csv (synthetic latent-trait rating scale data)
and tests/data/scale21_expected.json. Expected values are computed here by
direct pair enumeration and explicit prefix sums only; the library under
test is deliberately not imported.

Run from the repository root: python3 tools/gen_scale21_fixture.py
"""

import json
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "tests" / "data"

N_ITEMS = 21
N_ROWS = 160
SEED = 20240817


def auc_pairs(scores, decision):
    pos = [s for s, d in zip(scores, decision) if d]
    neg = [s for s, d in zip(scores, decision) if not d]
    total = 0.0
    for sp in pos:
        for sn in neg:
            total += 1.0 if sp > sn else (0.5 if sp == sn else 0.0)
    return total / (len(pos) * len(neg))


def make_data(rng):
    trait = rng.normal(0.0, 1.0, size=N_ROWS)
    decision = (trait + rng.normal(0.0, 0.8, size=N_ROWS)) > 0.3
    # force both classes, just in case the draw is extreme
    if decision.all():
        decision[0] = False
    if not decision.any():
        decision[0] = True
    discrimination = rng.uniform(0.25, 1.4, size=N_ITEMS)
    attrs = np.empty((N_ROWS, N_ITEMS))
    for j in range(N_ITEMS):
        raw = discrimination[j] * trait + rng.normal(0.0, 1.0, size=N_ROWS)
        attrs[:, j] = np.clip(np.round(raw + 1.5), 0, 3)
    return attrs, decision.astype(int)


def main():
    rng = np.random.default_rng(SEED)
    attrs, decision = make_data(rng)
    labels = [f"q{j + 1:02d}" for j in range(N_ITEMS)]

    header = labels + ["verdict"]
    lines = [",".join(header)]
    for i in range(N_ROWS):
        cells = [f"{int(v)}" for v in attrs[i]] + [str(int(decision[i]))]
        lines.append(",".join(cells))
    DATA.mkdir(parents=True, exist_ok=True)
    (DATA / "scale21.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")

    singles = {lab: auc_pairs(attrs[:, j], decision) for j, lab in enumerate(labels)}
    order = sorted(range(N_ITEMS), key=lambda j: -singles[labels[j]])
    running = []
    for k in range(1, N_ITEMS + 1):
        total = attrs[:, order[:k]].sum(axis=1)
        running.append(auc_pairs(total, decision))

    keep = 1
    while keep < N_ITEMS and running[keep] > running[keep - 1]:
        keep += 1

    expected = {
        "decision_column": "verdict",
        "n_rows": N_ROWS,
        "single_auc": singles,
        "order": [labels[j] for j in order],
        "running_auc": running,
        "reduced_items": [labels[j] for j in order[:keep]],
        "achieved_auc": running[keep - 1],
        "stop_reason": "first-decrease" if keep < N_ITEMS else "exhausted-all-items",
    }
    (DATA / "scale21_expected.json").write_text(
        json.dumps(expected, indent=2) + "\n", encoding="utf-8"
    )
    print(f"reduced to {keep} of {N_ITEMS} items: {expected['reduced_items']}")
    print(f"achieved AUC {expected['achieved_auc']:.7f}")


if __name__ == "__main__":
    main()
