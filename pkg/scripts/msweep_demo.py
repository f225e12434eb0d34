#!/usr/bin/env python3
"""Print how batch statistics move as more low-frequency phases are kept."""
import argparse

from phasesurrogate import GeneratorConfig, batch_metrics, generate_batch
from phasesurrogate.io import read_series_csv
from phasesurrogate.report import msweep_md_lines
from phasesurrogate.synthetic import ar1_signal, no_like_signal


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--input", help="CSV source; defaults to a seeded AR(1) series of length 745")
    ap.add_argument("--signal", choices=("ar1", "no_like"), default="ar1")
    ap.add_argument("--m-values", default="1,3,10,40,100,200")
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--repair", choices=("none", "resample", "clamp"), default="none")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if args.input:
        source = read_series_csv(args.input)
    else:
        source = ar1_signal(745, seed=args.seed) if args.signal == "ar1" else no_like_signal(365, seed=args.seed)
    reports = {}
    for m in (int(v) for v in args.m_values.split(",")):
        if m > source.n // 2:
            print(f"skipping m={m}: series has only {source.n} samples")
            continue
        cfg = GeneratorConfig(m=m, repair_mode=args.repair, seed=args.seed, count=args.count)
        reports[m] = batch_metrics(generate_batch(source, cfg), source, label=f"m={m}")
    print("\n".join(msweep_md_lines(reports)))


if __name__ == "__main__":
    main()
