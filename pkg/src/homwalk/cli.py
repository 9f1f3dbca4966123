"""
Command-line front end: each subcommand writes plot-ready CSV plus a JSON
mirror, and appends a line to ``manifest.jsonl`` beside the output.
"""

import argparse
import json
import math
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .decoherence import decohered_distribution
from .fock_walk import (
    TwoModeFock,
    basis_state,
    distribution_variance,
    evolve,
    evolve_theta,
    BeamSplitter,
    perfect_state_transfer_fidelity,
    theta_of_r,
    variance_approx,
    variance_exact,
    walk_distribution,
)
from .photonics_mc import ExperimentConfig, run_experiment
from .records import RunManifest, table_to_csv, write_table, output_paths
from .spin_chain import (
    AmbiguousZeroModeError,
    edge_envelope,
    eigensystem,
    generalized_ssh_couplings,
    near_zero_mode,
    ssh_couplings,
    zero_energy_mode,
)
from .topology import classify


def parse_grid(text):
    """``start:stop:steps`` (inclusive linspace) or a comma-separated list."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"grid must be start:stop:steps, got {text!r}")
        start, stop, steps = float(parts[0]), float(parts[1]), int(parts[2])
        if steps < 1:
            raise argparse.ArgumentTypeError("grid needs at least one step")
        return np.linspace(start, stop, steps)
    try:
        return np.array([float(v) for v in text.split(",") if v.strip()])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(args, columns, rows, params, seed=None, extra=None, started=None):
    if args.output is None:
        sys.stdout.write(table_to_csv(columns, rows))
        return
    manifest = RunManifest(
        subcommand=args.command,
        parameters=params,
        seed=seed,
        version=__version__,
        started_at=RunManifest.now(),
        wall_clock_s=round(time.perf_counter() - started, 6) if started else 0.0,
    )
    write_table(args.output, columns, rows, manifest, extra)
    manifest_path = args.manifest or output_paths(args.output)[0].parent / "manifest.jsonl"
    manifest.append_to(manifest_path)


def cmd_walk(args, started):
    S, l, r = args.total_photons, args.input_photons, args.reflectivity
    if l is None:
        l = S // 2
    probs = walk_distribution(S, l, r)
    # the distribution must not depend on the phase; take it from the amplitudes
    out = evolve(TwoModeFock(S, l), BeamSplitter(r, args.phase))
    if np.max(np.abs(np.abs(out) ** 2 - probs)) > 1e-9:
        raise RuntimeError("phase dependence detected in walk distribution")
    k = np.arange(S + 1)
    columns = ["k", "Delta_k", "probability"]
    with_env = S > 0 and 2 * l == S and r == 0.5
    env = edge_envelope(k, S) if with_env else None
    if with_env:
        columns.append("envelope")
    rows = []
    for i in k:
        row = [int(i), int(S - 2 * i), probs[i]]
        if with_env:
            row.append(env[i] if np.isfinite(env[i]) else math.nan)
        rows.append(row)
    params = {"total_photons": S, "input_photons": l, "reflectivity": r, "phase": args.phase}
    _emit(args, columns, rows, params, started=started)


def _transfer_state(args):
    S = args.total_photons
    if args.random_state:
        rng = np.random.default_rng(args.seed)
        psi = rng.normal(size=S + 1) + 1j * rng.normal(size=S + 1)
        return psi / np.linalg.norm(psi)
    return basis_state(S, args.input_photons)


def cmd_transfer(args, started):
    S = args.total_photons
    psi = _transfer_state(args)
    rows = []
    for r in args.reflectivity_grid:
        r = float(min(max(r, 0.0), 1.0))
        out = evolve(psi, BeamSplitter(r))
        fid = perfect_state_transfer_fidelity(psi, r)
        rows.append([r, fid] + list(np.abs(out) ** 2))
    columns = ["r", "fidelity"] + [f"p_{k}" for k in range(S + 1)]
    params = {
        "total_photons": S,
        "input_photons": None if args.random_state else args.input_photons,
        "random_state": args.random_state,
        "reflectivity_grid": list(map(float, args.reflectivity_grid)),
    }
    _emit(args, columns, rows, params, seed=args.seed if args.random_state else None,
          started=started)


def _chain(args):
    if args.model == "generalized":
        return generalized_ssh_couplings(args.total_photons)
    return ssh_couplings(args.total_photons, args.coupling, args.delta)


def cmd_spectrum(args, started):
    spec = _chain(args)
    S = spec.S
    w, _ = eigensystem(spec)
    kind = "zero"
    try:
        mode = zero_energy_mode(spec, args.tolerance)
    except AmbiguousZeroModeError:
        mode, kind = None, "degenerate"
    if mode is None:
        mode, kind = near_zero_mode(spec), ("near-zero" if kind == "zero" else kind)
    k = np.arange(S + 1)
    env = edge_envelope(k, S) if args.model == "generalized" else np.full(S + 1, math.nan)
    rows = [
        [int(i), w[i], mode.amps[i], mode.probabilities[i],
         env[i] if np.isfinite(env[i]) else math.nan]
        for i in k
    ]
    columns = ["site", "eigenvalue", "mode_amplitude", "mode_probability", "envelope"]
    loc = mode.localisation
    extra = {"mode": {"kind": kind, "energy": mode.energy,
                      "localisation": loc if isinstance(loc, str) else float(loc)}}
    params = {"model": args.model, "total_photons": S, "sites": S + 1,
              "delta": args.delta, "coupling": args.coupling}
    _emit(args, columns, rows, params, extra=extra, started=started)


def cmd_variance(args, started):
    S = args.total_photons
    if args.position is not None:
        l = TwoModeFock.from_delta(S, args.position).l
    else:
        l = args.input_photons
    if args.theta_grid is not None:
        thetas = args.theta_grid
    else:
        thetas = np.array([theta_of_r(float(r)) for r in args.reflectivity_grid])
    psi = basis_state(S, l)
    rows = []
    for t in thetas:
        empirical = distribution_variance(np.abs(evolve_theta(psi, t)) ** 2)
        rows.append([t, math.sin(t / 2) ** 2, variance_exact(S, l, theta=t),
                     variance_approx(S, l, theta=t), empirical])
    columns = ["theta", "r", "variance_exact", "variance_approx", "variance_empirical"]
    params = {"total_photons": S, "input_photons": l, "Delta": S - 2 * l,
              "thetas": list(map(float, thetas))}
    _emit(args, columns, rows, params, started=started)


def cmd_decohere(args, started):
    S, l, r = args.total_photons, args.input_photons, args.reflectivity
    if l is None:
        l = S // 2
    rows = []
    for y in args.y_grid:
        probs = decohered_distribution(S, l, float(y), r)
        rows.extend([float(y), int(k), probs[k]] for k in range(S + 1))
    params = {"total_photons": S, "input_photons": l, "reflectivity": r,
              "y_grid": list(map(float, args.y_grid))}
    _emit(args, ["y", "k", "probability"], rows, params, started=started)


def cmd_classify(args, started):
    if args.model == "single-site":
        H = np.zeros((1, 1))
    else:
        H = _chain(args).matrix()
    if args.diagonal_noise:
        rng = np.random.default_rng(args.seed)
        H = H + np.diag(args.diagonal_noise * rng.uniform(-1, 1, H.shape[0]))
    report = classify(H).to_dict()
    params = {"model": args.model, "total_photons": args.total_photons, "delta": args.delta,
              "diagonal_noise": args.diagonal_noise}
    if args.output is None:
        print(json.dumps(report, indent=2))
        return
    manifest = RunManifest("classify", params, seed=args.seed, version=__version__,
                           started_at=RunManifest.now(),
                           wall_clock_s=round(time.perf_counter() - started, 6))
    _, json_path = output_paths(args.output)
    json_path.parent.mkdir(parents=True, exist_ok=True)
    manifest.outputs = [str(json_path)]
    json_path.write_text(json.dumps({**report, "manifest": vars(manifest)}, indent=2) + "\n")
    manifest.append_to(args.manifest or json_path.parent / "manifest.jsonl")


def cmd_experiment(args, started):
    cfg = ExperimentConfig.from_file(args.config)
    if args.seed is not None:
        cfg.rng_seed = args.seed
    record = run_experiment(cfg, method=args.method)
    rows = [list(row) for row in record.rows()]
    extra = {k: v for k, v in record.to_dict().items() if k not in ("columns", "rows")}
    extra["config"] = cfg.to_dict()
    _emit(args, list(record.columns), rows, cfg.to_dict(), seed=cfg.rng_seed, extra=extra,
          started=started)


def build_parser():
    parser = argparse.ArgumentParser(prog="homwalk", description=__doc__.strip())
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", "-o", help="output path; .csv and .json are written")
        p.add_argument("--manifest", help="manifest JSONL (default: manifest.jsonl next to output)")
        return p

    p = common(sub.add_parser("walk", help="output distribution of one walk"))
    p.add_argument("--total-photons", "-S", type=int, required=True)
    p.add_argument("--input-photons", "-l", type=int, help="photons in mode a (default S/2)")
    p.add_argument("--reflectivity", "-r", type=float, required=True)
    p.add_argument("--phase", type=float, default=math.pi / 2)
    p.set_defaults(func=cmd_walk)

    p = common(sub.add_parser("transfer", help="state-transfer sweep over reflectivity"))
    p.add_argument("--total-photons", "-S", type=int, required=True)
    p.add_argument("--input-photons", "-l", type=int, default=0)
    p.add_argument("--random-state", action="store_true", help="random superposition input")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reflectivity-grid", type=parse_grid, default=parse_grid("0:1:21"))
    p.set_defaults(func=cmd_transfer)

    p = common(sub.add_parser("spectrum", help="chain eigenvalues and (near-)zero mode"))
    p.add_argument("--model", choices=["generalized", "ssh"], default="generalized")
    p.add_argument("--total-photons", "-S", type=int, required=True,
                   help="number of couplings; the chain has S+1 sites")
    p.add_argument("--delta", type=float, default=0.0)
    p.add_argument("--coupling", type=float, default=1.0, help="SSH energy scale J")
    p.add_argument("--tolerance", type=float)
    p.set_defaults(func=cmd_spectrum)

    p = common(sub.add_parser("variance", help="variance versus walk time"))
    p.add_argument("--total-photons", "-S", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--input-photons", "-l", type=int, default=0)
    g.add_argument("--position", type=int, help="initial walker position Delta = S - 2l")
    g2 = p.add_mutually_exclusive_group(required=True)
    g2.add_argument("--theta-grid", type=parse_grid)
    g2.add_argument("--reflectivity-grid", type=parse_grid)
    p.set_defaults(func=cmd_variance)

    p = common(sub.add_parser("decohere", help="distinguishability sweep"))
    p.add_argument("--total-photons", "-S", type=int, required=True)
    p.add_argument("--input-photons", "-l", type=int)
    p.add_argument("--reflectivity", "-r", type=float, default=0.5)
    p.add_argument("--y-grid", type=parse_grid, required=True)
    p.set_defaults(func=cmd_decohere)

    p = common(sub.add_parser("classify", help="Altland-Zirnbauer class of a chain"))
    p.add_argument("--model", choices=["generalized", "ssh", "single-site"],
                   default="generalized")
    p.add_argument("--total-photons", "-S", type=int, default=1)
    p.add_argument("--delta", type=float, default=0.0)
    p.add_argument("--coupling", type=float, default=1.0)
    p.add_argument("--diagonal-noise", type=float, default=0.0,
                   help="add uniform random on-site energies of this amplitude")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_classify)

    p = common(sub.add_parser("experiment", help="Monte-Carlo photon-counting run"))
    p.add_argument("--config", required=True, type=Path)
    p.add_argument("--seed", type=int, help="override rng_seed from the config")
    p.add_argument("--method", choices=["aggregate", "pulse"], default="aggregate")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        args.func(args, started)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"homwalk {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
