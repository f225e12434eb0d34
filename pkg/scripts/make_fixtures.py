#!/usr/bin/env python3
"""Write the seeded synthetic input series used by the demos into data/."""
import argparse
from pathlib import Path

from phasesurrogate.io import fmt
from phasesurrogate.synthetic import ar1_signal, no_like_signal


def write(path, values, name):
    lines = [f"t,{name}"] + [f"{i},{fmt(v)}" for i, v in enumerate(values)]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {path} ({len(values)} rows)")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    write(args.out / "ar1_745.csv", ar1_signal(745, phi=0.8, seed=args.seed).values, "value")
    write(args.out / "no_like_365.csv", no_like_signal(365, seed=args.seed).values, "no")


if __name__ == "__main__":
    main()
