"""Regenerates the synthetic fixtures in data/fixtures.

None of these numbers describe a real manifold. They only exercise the
circular-consistency batteries.
"""

import json
import math
import pathlib

import numpy as np

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "fixtures"


def small():
    return {
        "label": "synthetic-3 (not a real manifold)",
        "oriented": True,
        "l_max": 2.0,
        "entries": [
            {"length": 1.0, "angle": 0.7, "spin_sign": 1, "multiplicity": 1},
            {"length": 1.3, "angle": 2.5, "spin_sign": -1, "multiplicity": 1},
            {"length": 1.9, "angle": 4.0, "spin_sign": 1, "multiplicity": 2},
        ],
    }


def large():
    rng = np.random.default_rng(20240607)
    # Lengths drawn with density ~ e^{2L} on [0.8, 3.2].
    u = rng.uniform(size=25)
    lo, hi = 0.8, 3.2
    lengths = 0.5 * np.log(np.exp(2 * lo) + u * (np.exp(2 * hi) - np.exp(2 * lo)))
    entries = []
    for length in sorted(lengths):
        entries.append(
            {
                "length": round(float(length), 12),
                "angle": round(float(rng.uniform(0.0, math.pi)), 12),
                "spin_sign": int(rng.choice([1, -1])),
                "multiplicity": int(rng.choice([1, 1, 1, 2])),
            }
        )
    return {"label": "synthetic-25 (not a real manifold)", "oriented": False, "l_max": 3.3,
            "entries": entries}


def invariants():
    rng = np.random.default_rng(7)
    eta = {str(k): round(float(rng.uniform(-1.0, 1.0)), 12) for k in range(1, 11)}
    return {"label": "synthetic invariants (arbitrary values)", "volume": 2.1, "cs": 0.137,
            "eta": eta}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, doc in [("synthetic3.json", small()), ("synthetic25.json", large()),
                      ("invariants.json", invariants())]:
        (OUT / name).write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main()
