"""Run the identity catalog at several q values and report timings."""

import sys
from dataclasses import dataclass

from qlorentz import identities, so3q, spectra

from _config import parse_config


@dataclass
class VerifyConfig:
    qs: tuple = ("3/2", "1/2", "4/5", "2", "0.7", "1.3")


def main():
    cfg = parse_config(VerifyConfig, __doc__)
    failed = 0
    for text in cfg.qs:
        q0 = spectra.as_number(text)
        results = identities.run_all(q0)
        bad = [r for r in results if not r.ok]
        failed += len(bad)
        total = sum(r.seconds for r in results)
        print(f"q = {text}: {len(results) - len(bad)}/{len(results)} PASS in {total:.2f}s")
        for r in bad:
            print("  " + r.line())
    print("SU_q(2) relations used:")
    for line in so3q.so3_report().lines():
        print("  " + line)
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
