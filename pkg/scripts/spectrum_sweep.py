"""Boost spectrum over a q grid, written as plot-ready CSV.

    python scripts/spectrum_sweep.py --q-min 0.5 --q-max 2 --steps 31 --l-max 2 > sweep.csv
"""

import csv
import sys
from dataclasses import dataclass
from fractions import Fraction

from qlorentz import spectra

from _config import parse_config


@dataclass
class SweepConfig:
    q_min: float = 0.5
    q_max: float = 2.0
    steps: int = 31
    l_max: str = "2"
    t: float = 1.0
    mass: float = 1.0


def sweep(cfg: SweepConfig):
    l_max = Fraction(cfg.l_max)
    for q0 in spectra.grid(cfg.q_min, cfg.q_max, cfg.steps):
        params = spectra.Params(q0, cfg.t, mass=cfg.mass)
        for row in spectra.spectrum(l_max, params):
            lo, hi = spectra.interval_roots(cfg.t, row.gamma, q0).interval()
            yield {"q": q0, **{k: float(v) for k, v in row.as_dict().items()}, "x3_lo": lo + 0.0, "x3_hi": hi + 0.0}


def main():
    cfg = parse_config(SweepConfig, __doc__)
    rows = list(sweep(cfg))
    w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)


if __name__ == "__main__":
    main()
