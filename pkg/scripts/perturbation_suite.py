#!/usr/bin/env python3
"""Perturbed standing-wave evolutions across the stability regimes.

Evolves r*Q for the subcritical / critical / supercritical cases and prints
one verdict per run.  The chi-norm and L_inf histories land in out/.
"""
import argparse
from pathlib import Path

from fnls.cli import ExperimentConfig, run

CASES = [
    # (beta, r)  subcritical, critical, supercritical
    (0.4, 0.9), (0.4, 1.1),
    (0.5, 0.9), (0.5, 1.1),
    (0.8, 0.9), (0.8, 1.1),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--T", type=float, default=10.0)
    ap.add_argument("--M", type=int, default=2000)
    ap.add_argument("--out-root", default="out/perturbation")
    args = ap.parse_args()

    for beta, r in CASES:
        out = Path(args.out_root) / f"beta_{beta:.1f}_r_{r:.1f}"
        cfg = ExperimentConfig(experiment="perturb", a=-200.0, b=200.0,
                               N=2 ** 13, beta=beta, sigma=1.0, omega=1.0,
                               r=r, T=args.T, M=args.M, mass_drift_cap=1e-2,
                               tol=1e-12, out_dir=str(out))
        code = run(cfg)
        verdict = [line.split(": ", 1)[1]
                   for line in (out / "manifest.txt").read_text().splitlines()
                   if line.startswith("verdict:")][0]
        print(f"beta={beta} r={r}: {verdict} (exit {code})")


if __name__ == "__main__":
    main()
