"""Command line front end.

Subcommands: ``schmidt``, ``modular``, ``kms-verify``, ``cone``, ``ineq``,
``campaign``. Matrices travel as JSON objects with fields (in this order)
``rows``, ``cols``, ``data``, where data is a row-major list of
``[re, im]`` pairs; ``-`` reads the payload from stdin.

Exit codes: 0 all checks pass, 1 checks ran but failed, 2 payload parse
error, 3 domain error (singular state, bad shapes, non-PSD input),
4 usage error (bad flags, unknown suite).

The environment variable ``MODKIT_TOL`` overrides the default residual
tolerance; an explicit ``--tol`` beats the environment.

Reports with ``--json`` are deterministic for a fixed (seed, dimension,
samples) apart from the ``wall_time`` field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from . import campaigns
from .errors import ModkitError, ParseError, UnknownSuite
from .kms import (
    centralizer_basis,
    gibbs_hamiltonian,
    kms_boundary_defect,
    state_invariance_defect,
)
from .modular import (
    modular_conjugation,
    relative_modular_operator,
    relative_modular_power,
    relative_s_matrix,
    verify_tomita_takesaki,
)
from .sampling import complex_gaussian, random_faithful_density
from .schmidt import is_cyclic_separating, schmidt_decompose
from .states import DensityMatrix
from .vecops import vec

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_USAGE = 4

DEFAULT_TOL = 1e-10


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage failures exit with the documented code 4."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_matrix(source: str) -> np.ndarray:
    """Read a {rows, cols, data} JSON payload from a path or stdin ('-')."""
    try:
        text = sys.stdin.read() if source == "-" else open(source).read()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {source}: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError("matrix payload must be a JSON object")
    try:
        rows, cols, data = int(obj["rows"]), int(obj["cols"]), obj["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("payload needs integer 'rows'/'cols' and 'data'") from exc
    if rows < 1 or cols < 1:
        raise ParseError(f"dimensions must be positive, got {rows} x {cols}")
    if not isinstance(data, list) or len(data) != rows * cols:
        raise ParseError(
            f"'data' must list rows*cols = {rows * cols} entries, got "
            f"{len(data) if isinstance(data, list) else type(data).__name__}"
        )
    try:
        flat = np.array([complex(re, im) for re, im in data])
    except (TypeError, ValueError) as exc:
        raise ParseError("'data' entries must be [re, im] pairs") from exc
    if not np.all(np.isfinite(flat.real)) or not np.all(np.isfinite(flat.imag)):
        raise ParseError("matrix entries must be finite")
    return flat.reshape(rows, cols)


def dump_matrix(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=complex)
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "data": [[float(z.real), float(z.imag)] for z in m.ravel()],
    }


def _emit(obj: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        for key, value in obj.items():
            print(f"{key}: {value}")


def _resolve_tol_optional(flag_value: float | None) -> float | None:
    """Flag beats MODKIT_TOL beats None (each check then uses its default)."""
    if flag_value is not None:
        return flag_value
    env = os.environ.get("MODKIT_TOL")
    if env is not None:
        try:
            return float(env)
        except ValueError as exc:
            raise UnknownSuite(f"MODKIT_TOL is not a number: {env!r}") from exc
    return None


def _resolve_tol(flag_value: float | None) -> float:
    resolved = _resolve_tol_optional(flag_value)
    return DEFAULT_TOL if resolved is None else resolved


def cmd_schmidt(args) -> int:
    m = load_matrix(args.input)
    u = vec(m)
    data = schmidt_decompose(u, rank_tol=args.rank_tol)
    square = u.dim_left == u.dim_right
    out = {
        "dims": [u.dim_left, u.dim_right],
        "rank": data.rank,
        "coefficients": [round(float(c), 12) for c in data.coefficients],
        "cyclic_separating": bool(is_cyclic_separating(u, args.rank_tol))
        if square
        else None,
    }
    _emit(out, args.json)
    return EXIT_OK


def cmd_modular(args) -> int:
    tol = _resolve_tol(args.tol)
    phi = DensityMatrix(load_matrix(args.phi))
    omega = DensityMatrix(load_matrix(args.omega))
    delta = relative_modular_operator(phi, omega)
    spectrum = np.linalg.eigvalsh(delta.matrix)

    s_op = relative_s_matrix(phi, omega)
    cross = s_op.adjoint().compose(s_op).distance(delta)
    polar = modular_conjugation(omega.dim).compose(
        relative_modular_power(phi, omega, 0.5)
    ).distance(s_op)

    out = {
        "dimension": omega.dim,
        "delta_spectrum": [round(float(v), 12) for v in spectrum],
        "cross_route_residual": float(cross),
        "polar_residual": float(polar),
        "tolerance": tol,
    }
    ok = cross < tol and polar < tol

    if args.verify:
        rng = np.random.default_rng(args.seed)
        samples = [complex_gaussian(rng, omega.dim) for _ in range(args.samples)]
        t_grid = args.t if args.t else [0.3, 1.0, 2.7]
        report = verify_tomita_takesaki(omega, samples, t_grid, tol=tol)
        out["tt_max_commutant_residual"] = report.max_commutant_residual
        out["tt_max_flow_residual"] = report.max_flow_residual
        out["tt_passed"] = report.passed
        ok = ok and report.passed

    out["passed"] = bool(ok)
    _emit(out, args.json)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_kms_verify(args) -> int:
    tol = _resolve_tol(args.tol)
    rng = np.random.default_rng(args.seed)
    if args.omega is not None:
        density = DensityMatrix(load_matrix(args.omega))
    else:
        density = random_faithful_density(rng, args.dim)
    sys_ = gibbs_hamiltonian(density, args.beta)

    t_grid = (-2.0, -1.0, 0.0, 1.0, 2.0)
    boundary = 0.0
    invariance = 0.0
    for _ in range(args.samples):
        a = complex_gaussian(rng, density.dim)
        b = complex_gaussian(rng, density.dim)
        for t in t_grid:
            boundary = max(boundary, kms_boundary_defect(sys_, a, b, t))
            invariance = max(invariance, state_invariance_defect(sys_, a, t))

    basis = centralizer_basis(density)
    commutant_dim = _commutant_dimension(density.matrix)
    ok = boundary < tol and invariance < 1e-12 and len(basis) == commutant_dim
    out = {
        "dimension": density.dim,
        "beta": args.beta,
        "samples": args.samples,
        "max_boundary_defect": float(boundary),
        "max_invariance_defect": float(invariance),
        "centralizer_dimension": len(basis),
        "commutant_dimension": commutant_dim,
        "tolerance": tol,
        "passed": bool(ok),
    }
    _emit(out, args.json)
    return EXIT_OK if ok else EXIT_FAIL


def _commutant_dimension(d: np.ndarray, tol: float = 1e-8) -> int:
    """Nullity of B -> BD - DB computed from the dense d^2 x d^2 map.

    Cutoff is absolute at density-matrix scale, so a numerically zero map
    (flat spectrum) counts as fully null.
    """
    n = d.shape[0]
    eye = np.eye(n)
    k = np.kron(eye, d.T) - np.kron(d, eye)
    sigma = np.linalg.svd(k, compute_uv=False)
    return int(np.count_nonzero(sigma <= tol * max(1.0, float(sigma[0]))))


def _suite_exit(results, as_json, seed, dimension, samples, started) -> int:
    failures = sum(r.failures for r in results)
    checks = sum(r.checks for r in results)
    worst = min(r.worst_slack for r in results)
    if len(results) == 1:
        out = results[0].to_dict()
    else:
        out = {
            "suite": "all",
            "seed": seed,
            "dimension": dimension,
            "samples": samples,
            "checks": checks,
            "failures": failures,
            "worst_slack": worst,
            "suites": [r.to_dict() for r in results],
        }
    out["wall_time"] = round(time.perf_counter() - started, 6)
    _emit(out, as_json)
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_cone(args) -> int:
    started = time.perf_counter()
    results = campaigns.run_suite(
        "cone", args.seed, args.dim, args.samples, _resolve_tol_optional(args.tol)
    )
    return _suite_exit(results, args.json, args.seed, args.dim, args.samples, started)


def cmd_ineq(args) -> int:
    started = time.perf_counter()
    results = campaigns.run_suite(
        "inequalities",
        args.seed,
        args.dim,
        args.samples,
        _resolve_tol_optional(args.tol),
    )
    return _suite_exit(results, args.json, args.seed, args.dim, args.samples, started)


def cmd_campaign(args) -> int:
    started = time.perf_counter()
    results = campaigns.run_suite(
        args.suite, args.seed, args.dim, args.samples, _resolve_tol_optional(args.tol)
    )
    return _suite_exit(results, args.json, args.seed, args.dim, args.samples, started)


def _dim_arg(text: str) -> int:
    value = int(text)
    if not 2 <= value <= 16:
        raise argparse.ArgumentTypeError("dimension must lie in [2, 16]")
    return value


def _samples_arg(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("samples must be >= 1")
    return value


def _add_common(p, dim_default=4, samples_default=50):
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.add_argument(
        "--dim", type=_dim_arg, default=dim_default, help="matrix dimension (2..16)"
    )
    p.add_argument(
        "--samples",
        type=_samples_arg,
        default=samples_default,
        help="instances to draw",
    )
    p.add_argument(
        "--tol",
        type=float,
        default=None,
        help="residual tolerance override (beats MODKIT_TOL)",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> _Parser:
    parser = _Parser(prog="modkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schmidt", parents=[], help="Schmidt data of vec(input)")
    p.add_argument("input", help="matrix JSON file, or - for stdin")
    p.add_argument("--rank-tol", type=float, default=1e-10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_schmidt)

    p = sub.add_parser("modular", help="relative modular data for two densities")
    p.add_argument("phi", help="density JSON file, or -")
    p.add_argument("omega", help="density JSON file (must be faithful), or -")
    p.add_argument("--t", type=float, action="append", help="flow times for --verify")
    p.add_argument("--verify", action="store_true", help="run Tomita-Takesaki checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=8)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_modular)

    p = sub.add_parser("kms-verify", help="KMS boundary and centralizer checks")
    p.add_argument("omega", nargs="?", default=None, help="density JSON file")
    p.add_argument("--beta", type=float, default=1.0)
    _add_common(p)
    p.set_defaults(func=cmd_kms_verify)

    p = sub.add_parser("cone", help="natural positive cone property campaign")
    _add_common(p)
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("ineq", help="trace inequality campaign")
    _add_common(p, samples_default=100)
    p.set_defaults(func=cmd_ineq)

    p = sub.add_parser("campaign", help="named verification campaign")
    p.add_argument(
        "--suite",
        default="all",
        help=f"one of {', '.join(campaigns.SUITE_NAMES)}",
    )
    _add_common(p, samples_default=100)
    p.set_defaults(func=cmd_campaign)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"modkit: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnknownSuite as exc:
        print(f"modkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ModkitError as exc:
        print(f"modkit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
