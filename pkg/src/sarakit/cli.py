"""Command-line front end.

Subcommands: `run` (undersampling sweep), `radio` (masked-Fourier demo),
`snr` (score two images), `mask gen` / `mask show` (sampling patterns).
Every flag mirrors a key in a flat `key = value` config file; flags given on
the command line override the file.
"""

import argparse
import sys
from pathlib import Path

from . import harness, imageio, measurement
from .errors import ConfigError
from .harness import DATA_DIR, ExperimentSpec


def parse_config_file(path) -> dict:
    """Flat `key = value` lines; '#' starts a comment; blank lines ignored."""
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = line.split("=", 1)
        values[key.strip()] = value.strip()
    return values


_SPEC_KEYS = {
    "image": ("image_path", str),
    "ratios": ("ratios", lambda s: tuple(float(r) for r in s.split(","))),
    "isnr": ("input_snr_db", lambda s: None if s.lower() in ("inf", "none") else float(s)),
    "algos": ("algorithms", lambda s: tuple(a.strip() for a in s.split(","))),
    "trials": ("trials", int),
    "seed": ("seed", int),
    "out": ("output_dir", str),
    "dict": ("dict_spec", str),
    "levels": ("levels", int),
    "nmax": ("n_max", int),
    "max_iters": ("max_iters", int),
}


def _add_spec_flags(parser):
    parser.add_argument("--config", help="flat key=value config file")
    parser.add_argument("--image", help="ground-truth PGM (square, dyadic side)")
    parser.add_argument("--ratios", help="comma-separated M/N values")
    parser.add_argument("--isnr", help="input SNR in dB, or 'inf' for noiseless")
    parser.add_argument("--algos", help="comma-separated algorithm names")
    parser.add_argument("--trials", help="trials per ratio")
    parser.add_argument("--seed", help="master seed")
    parser.add_argument("--out", help="output directory")
    parser.add_argument("--dict", dest="dict", help="frame list, e.g. dirac,db1,...,db8")
    parser.add_argument("--levels", help="wavelet decomposition depth")
    parser.add_argument("--nmax", help="max reweighting iterations")
    parser.add_argument("--max-iters", dest="max_iters", help="inner solver iteration cap")


def build_spec(args, default_image) -> ExperimentSpec:
    raw = parse_config_file(args.config) if args.config else {}
    for flag in _SPEC_KEYS:
        value = getattr(args, flag, None)
        if value is not None:
            raw[flag] = value
    kwargs = {}
    for flag, (attr, conv) in _SPEC_KEYS.items():
        if flag in raw:
            kwargs[attr] = conv(raw[flag])
    kwargs.setdefault("image_path", str(default_image))
    return ExperimentSpec(**kwargs)


def _print_rows(rows):
    for r in sorted(rows, key=lambda r: (r.algorithm, r.ratio, r.trial)):
        print(f"{r.algorithm:10s} ratio={r.ratio:<6g} trial={r.trial} "
              f"snr={r.snr_db:8.3f} dB iters={r.solver_iters} converged={r.converged}")


def cmd_run(args):
    spec = build_spec(args, DATA_DIR / "photo64.pgm")
    rows = harness.run_experiment(spec)
    _print_rows(rows)
    print(f"results written to {Path(spec.output_dir) / 'results.csv'}")


def cmd_radio(args):
    spec = build_spec(args, DATA_DIR / "galaxy64.pgm")
    rows = harness.run_radio_demo(spec)
    _print_rows(rows)
    print(f"results written to {Path(spec.output_dir) / 'results.csv'}")


def cmd_snr(args):
    ref = imageio.read_pgm(args.reference)
    est = imageio.read_pgm(args.estimate)
    print(f"{harness.snr_db(ref, est):.6f}")


def cmd_mask_gen(args):
    side = int(args.side)
    target = int(args.m) if args.m else harness.radio_target_m(side)
    cfg = measurement.FourierMaskConfig(seed=int(args.seed), image_side=side,
                                        target_m=target)
    mask = measurement.generate_ellipse_mask(cfg)
    measurement.save_mask(args.out, mask, side)
    print(f"wrote {mask.size} mask cells to {args.out}")


def cmd_mask_show(args):
    side = int(args.side)
    mask = measurement.load_mask(args.path, side)
    grid = [["."] * side for _ in range(side)]
    for flat in mask:
        grid[flat // side][flat % side] = "#"
    print("\n".join("".join(row) for row in grid))
    print(f"{mask.size} cells")


def main(argv=None):
    parser = argparse.ArgumentParser(prog="sarakit",
                                     description="compressive imaging benchmark harness")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="spread-spectrum undersampling sweep")
    _add_spec_flags(p_run)
    p_run.set_defaults(func=cmd_run)

    p_radio = sub.add_parser("radio", help="masked-Fourier radio-style demo")
    _add_spec_flags(p_radio)
    p_radio.set_defaults(func=cmd_radio)

    p_snr = sub.add_parser("snr", help="recovery SNR between two PGM images")
    p_snr.add_argument("reference")
    p_snr.add_argument("estimate")
    p_snr.set_defaults(func=cmd_snr)

    p_mask = sub.add_parser("mask", help="sampling-pattern utilities")
    mask_sub = p_mask.add_subparsers(dest="mask_command", required=True)
    p_gen = mask_sub.add_parser("gen", help="generate an ellipse-arc mask")
    p_gen.add_argument("--side", required=True, help="grid side length")
    p_gen.add_argument("--m", help="number of cells (default: paper-scaled)")
    p_gen.add_argument("--seed", default="0")
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=cmd_mask_gen)
    p_show = mask_sub.add_parser("show", help="render a mask file as ASCII")
    p_show.add_argument("path")
    p_show.add_argument("--side", required=True)
    p_show.set_defaults(func=cmd_mask_show)

    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
