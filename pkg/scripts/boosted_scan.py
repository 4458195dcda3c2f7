#!/usr/bin/env python3
"""Boosted-profile families and d''(omega) convexity scans.

For each (beta, sigma) the scan sweeps omega in (c^2/(4 lam), omega_max) at
several speeds; a sign change of d'' marks the critical frequency omega_c.
"""
import argparse
from pathlib import Path

from fnls.cli import ExperimentConfig, run

SETS = [
    (0.3, 1.0, (0.5, 1.0, 2.0), 3.0),
    (0.8, 1.0, (1.0, 1.5, 2.0), 3.0),
    (0.1, 1.5, (0.5, 1.0, 2.0), 3.0),
    (0.5, 1.5, (1.0, 2.0), 2.2),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=20)
    ap.add_argument("--out-root", default="out/d_scans")
    args = ap.parse_args()

    for beta, sigma, speeds, omega_max in SETS:
        for c in speeds:
            out = Path(args.out_root) / f"beta_{beta}_sigma_{sigma}_c_{c}"
            cfg = ExperimentConfig(experiment="d-scan", a=-200.0, b=200.0,
                                   N=2 ** 13, beta=beta, sigma=sigma, c=c,
                                   omega_max=omega_max, points=args.points,
                                   tol=1e-12, out_dir=str(out))
            code = run(cfg)
            manifest = (out / "manifest.txt").read_text()
            omega_c = next((ln.split(": ")[1] for ln in manifest.splitlines()
                            if ln.startswith("omega_c:")), "none")
            print(f"beta={beta} sigma={sigma} c={c}: omega_c={omega_c} "
                  f"(exit {code})")


if __name__ == "__main__":
    main()
