#!/usr/bin/env python3
"""Small-dispersion experiments: focusing first-break times plus a defocusing
square-up run.  L_inf histories and break times land in out/."""
import argparse
from pathlib import Path

from fnls.cli import ExperimentConfig, run

RUNS = [
    # name, zeta, beta, phase, T, M
    ("focus_beta15", 1.0, 1.5, "zero", 0.5, 8000),
    ("focus_beta10", 1.0, 1.0, "zero", 1.2, 7500),
    ("focus_beta15_phase", 1.0, 1.5, "2sech", 0.35, 5600),
    ("defocus_beta15", -1.0, 1.5, "zero", 1.0, 16000),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--epsilon", type=float, default=0.1)
    ap.add_argument("--out-root", default="out/semiclassical")
    args = ap.parse_args()

    for name, zeta, beta, phase, T, M in RUNS:
        out = Path(args.out_root) / name
        cfg = ExperimentConfig(experiment="semiclassical", a=-50.0, b=50.0,
                               N=2 ** 13, zeta=zeta, beta=beta, sigma=1.0,
                               epsilon=args.epsilon, phase=phase,
                               T=T, M=M, mass_drift_cap=1e-2,
                               out_dir=str(out))
        code = run(cfg)
        manifest = (out / "manifest.txt").read_text()
        tb = next((ln.split(": ")[1] for ln in manifest.splitlines()
                   if ln.startswith("break_time:")), "none")
        print(f"{name}: break_time={tb} (exit {code})")


if __name__ == "__main__":
    main()
