#!/usr/bin/env python3
"""Compute standing-wave profiles over a range of nonlocality exponents.

Desk-scale defaults; profiles grow more peaked with beta. Pass
--full-scale for the production mesh (N = 2^18 on [-1000, 1000]).
"""
import argparse
from pathlib import Path

from fnls.cli import ExperimentConfig, run


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--betas", type=float, nargs="+",
                    default=[-0.4, -0.2, 0.0, 0.4, 0.8, 1.2])
    ap.add_argument("--sigma", type=float, default=1.0)
    ap.add_argument("--omega", type=float, default=1.0)
    ap.add_argument("--out-root", default="out/ground_states")
    ap.add_argument("--full-scale", action="store_true",
                    help="x in [-1000, 1000] with N = 2^18")
    args = ap.parse_args()

    if args.full_scale:
        a, b, N = -1000.0, 1000.0, 2 ** 18
    else:
        a, b, N = -100.0, 100.0, 2 ** 13

    for beta in args.betas:
        out = Path(args.out_root) / f"beta_{beta:+.2f}"
        cfg = ExperimentConfig(experiment="ground-state", a=a, b=b, N=N,
                               beta=beta, sigma=args.sigma, omega=args.omega,
                               tol=1e-13, out_dir=str(out))
        code = run(cfg)
        print(f"beta={beta:+.2f}: exit {code} -> {out}")


if __name__ == "__main__":
    main()
