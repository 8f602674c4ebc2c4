"""Exact q-deformed lifetime shift against the first-order formula.

For each velocity and kappa, prints the exact shift, the first-order term
and the ratio of residuals when kappa is halved (about 4 for a correct
first-order term).
"""

import csv
import sys
from dataclasses import dataclass

from qlorentz import spectra

from _config import parse_config


@dataclass
class LifetimeConfig:
    t_cl: float = 1.0
    v_min: float = 0.0
    v_max: float = 0.95
    v_steps: int = 20
    kappas: tuple = ("0.04", "0.02", "0.01", "0.005")
    sign: int = 1


def main():
    cfg = parse_config(LifetimeConfig, __doc__)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["v_cl", "kappa", "q", "exact_shift", "first_order", "residual", "residual_ratio"])
    for v in spectra.grid(cfg.v_min, cfg.v_max, cfg.v_steps):
        for k in map(float, cfg.kappas):
            rep = spectra.lifetime_report(cfg.t_cl, v, k, cfg.sign)
            ratio = rep.ratio if rep.residual else ""
            w.writerow([v, k, 1 + cfg.sign * k, rep.exact, rep.first_order, rep.residual, ratio])


if __name__ == "__main__":
    main()
