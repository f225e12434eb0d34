"""Command line interface.

Subcommands: ``generate``, ``report``, ``msweep``, ``baseline``.
Exit codes: 0 success, 2 usage or validation error, 3 runtime failure
(non-convergent repair, numerical residue).
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .baselines import arma_batch, fit_ar_yule_walker
from .errors import SurrogateError, ValidationError, LengthMismatch
from .generator import generate_batch
from .io import (
    SURROGATE_FILE,
    read_series_csv,
    read_surrogates,
    run_hash,
    sha256_file,
    write_manifest,
    write_surrogates,
)
from .metrics import batch_metrics
from .report import msweep_csv_lines, msweep_md_lines, write_acf_csv, write_hist_csv, write_table_csv, write_table_md
from .types import GeneratorConfig, validate_series

log = logging.getLogger("phasesurrogate")

EMIT_CHOICES = ("table.csv", "table.md", "acf.csv", "hist.csv")


def _input_args(p, column=True):
    p.add_argument("--input", required=True, type=Path, help="source CSV file")
    if column:
        p.add_argument("--column", default=None, help="column name or index (default: last column)")
        p.add_argument("--missing", choices=("error", "interpolate"), default="error",
                       help="missing-cell policy (default: error)")


def _seed(text):
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _m_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad m list {text!r}") from None


def build_parser():
    parser = argparse.ArgumentParser(prog="phasesurrogate", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a batch of surrogates")
    _input_args(g)
    g.add_argument("--m", type=int, required=True, help="phases kept after the DC phase")
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--seed", type=_seed, default=0)
    g.add_argument("--repair", choices=("none", "resample", "clamp"), default="none")
    g.add_argument("--max-repair-iters", type=int, default=1000)
    g.add_argument("--out", type=Path, required=True)
    g.add_argument("--format", choices=("wide", "long"), default="wide")
    g.add_argument("--threads", type=int, default=1)

    r = sub.add_parser("report", help="compare a surrogate file against its source")
    _input_args(r)
    r.add_argument("--surrogates", type=Path, required=True, help="surrogate CSV or the directory holding it")
    r.add_argument("--max-lag", type=int, default=10)
    r.add_argument("--out", type=Path, required=True)
    r.add_argument("--emit", nargs="+", choices=EMIT_CHOICES, default=list(EMIT_CHOICES))
    r.add_argument("--bins", type=int, default=30, help="histogram bins shared by all series")
    r.add_argument("--label", default="Fourier")
    r.add_argument("--threads", type=int, default=1)

    s = sub.add_parser("msweep", help="aggregate statistics for several m values")
    _input_args(s)
    s.add_argument("--m-values", type=_m_list, default=[3, 40, 100])
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--seed", type=_seed, default=0)
    s.add_argument("--repair", choices=("none", "resample", "clamp"), default="none")
    s.add_argument("--max-repair-iters", type=int, default=1000)
    s.add_argument("--out", type=Path, required=True)
    s.add_argument("--threads", type=int, default=1)

    b = sub.add_parser("baseline", help="AR(p) Yule-Walker baseline batch and report")
    _input_args(b)
    b.add_argument("--ar-order", type=int, default=1)
    b.add_argument("--count", type=int, default=100)
    b.add_argument("--seed", type=_seed, default=0)
    b.add_argument("--out", type=Path, required=True)
    b.add_argument("--format", choices=("wide", "long"), default="wide")
    b.add_argument("--threads", type=int, default=1)
    return parser


def _read_source(args):
    policy = "linear_interpolate" if args.missing == "interpolate" else "error"
    return read_series_csv(args.input, column=args.column, missing_policy=policy)


def _manifest(args, command, flags: dict):
    digest = sha256_file(args.input)
    entries = {
        "command": command,
        "tool_version": __version__,
        "source": str(args.input),
        "input_sha256": digest,
    }
    entries.update({k: ",".join(map(str, v)) if isinstance(v, list) else v for k, v in flags.items()})
    entries["run_hash"] = run_hash(digest, {"command": command, **flags})
    write_manifest(args.out, entries)


def cmd_generate(args):
    source = _read_source(args)
    config = GeneratorConfig(
        m=args.m,
        repair_mode=args.repair,
        max_repair_iterations=args.max_repair_iters,
        seed=args.seed,
        count=args.count,
    )
    batch = generate_batch(source, config, workers=args.threads)
    args.out.mkdir(parents=True, exist_ok=True)
    write_surrogates(args.out / SURROGATE_FILE, batch.as_array(), args.format)
    flags = dict(column=args.column, missing=args.missing, m=args.m, repair_mode=args.repair,
                 max_repair_iterations=args.max_repair_iters, seed=args.seed, count=args.count,
                 format=args.format)
    _manifest(args, "generate", flags)
    return 0


def cmd_report(args):
    source = _read_source(args)
    values = read_surrogates(args.surrogates)
    if values.shape[1] != source.n:
        raise LengthMismatch(source.n, values.shape[1])
    surrogates = [validate_series(v) for v in values]
    args.out.mkdir(parents=True, exist_ok=True)
    emit = set(args.emit)
    if emit & {"table.csv", "table.md"}:
        report = batch_metrics(surrogates, source, label=args.label, workers=args.threads)
        if "table.csv" in emit:
            write_table_csv(args.out / "table.csv", [report])
        if "table.md" in emit:
            write_table_md(args.out / "table.md", [report])
    series = {"source": source.values}
    series.update({f"sample_{i}": v for i, v in enumerate(values)})
    if "acf.csv" in emit:
        write_acf_csv(args.out / "acf.csv", series, max_lag=args.max_lag)
    if "hist.csv" in emit:
        write_hist_csv(args.out / "hist.csv", series, bins=args.bins)
    flags = dict(column=args.column, missing=args.missing, surrogates_sha256=sha256_file(
        args.surrogates / SURROGATE_FILE if args.surrogates.is_dir() else args.surrogates),
        max_lag=args.max_lag, emit=sorted(emit), bins=args.bins, label=args.label)
    _manifest(args, "report", flags)
    return 0


def cmd_msweep(args):
    source = _read_source(args)
    if not args.m_values:
        raise ValidationError("--m-values is empty")
    configs = [
        GeneratorConfig(m=m, repair_mode=args.repair, max_repair_iterations=args.max_repair_iters,
                        seed=args.seed, count=args.count)
        for m in args.m_values
    ]
    for c in configs:
        c.check_length(source.n)
    reports = {}
    for c in configs:
        batch = generate_batch(source, c, workers=args.threads)
        reports[c.m] = batch_metrics(batch, source, label=f"m={c.m}", workers=args.threads)
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "msweep.csv").write_text("\n".join(msweep_csv_lines(reports)) + "\n", encoding="utf-8")
    (args.out / "msweep.md").write_text("\n".join(msweep_md_lines(reports)) + "\n", encoding="utf-8")
    flags = dict(column=args.column, missing=args.missing, m_values=args.m_values, repair_mode=args.repair,
                 max_repair_iterations=args.max_repair_iters, seed=args.seed, count=args.count)
    _manifest(args, "msweep", flags)
    return 0


def cmd_baseline(args):
    source = _read_source(args)
    if args.count < 1:
        raise ValidationError("--count must be >= 1")
    model = fit_ar_yule_walker(source, args.ar_order)
    batch = arma_batch(model, source.n, args.count, args.seed)
    label = f"AR({args.ar_order}) (Yule-Walker)"
    note = f"fitted {model.describe()}"
    report = batch_metrics(batch, source, label=label, workers=args.threads, notes=(note,))
    args.out.mkdir(parents=True, exist_ok=True)
    write_surrogates(args.out / SURROGATE_FILE, np.vstack([b.values for b in batch]), args.format)
    write_table_csv(args.out / "table.csv", [report])
    write_table_md(args.out / "table.md", [report])
    flags = dict(column=args.column, missing=args.missing, ar_order=args.ar_order, seed=args.seed,
                 count=args.count, format=args.format)
    _manifest(args, "baseline", {**flags, "model": model.describe()})
    return 0


COMMANDS = {"generate": cmd_generate, "report": cmd_report, "msweep": cmd_msweep, "baseline": cmd_baseline}


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args)
    except (ValidationError, FileNotFoundError, IsADirectoryError) as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 2
    except SurrogateError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
