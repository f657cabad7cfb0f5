"""Command-line surface: reproducible, machine-readable analyses on stdout.

Every subcommand prints its result to stdout (JSON by default; CSV for
grids) and keeps diagnostics on stderr, controlled by the UTP_LOG
environment variable (quiet | info | debug).  Exit codes: 0 success,
2 usage error, 1 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import re
import sys

import numpy as np

from .gamesim import GameConfig, run_game, transcript_to_json
from .linalg import ConvergenceError
from .operators import (
    UnitaryBasis,
    UnitaryOperator,
    clock_shift_pair,
    identity,
    is_muub,
    is_perfectly_distinguishable,
    matrix_from_literal,
    omega,
    pauli,
)
from .saturation import (
    muub_certify_by_saturation,
    search_min_uncertainty,
    su2_basis,
    su2_overlap_surface,
    sweep_to_csv,
)
from .testers import (
    MesMeasurement,
    Povm,
    ProjectiveMeasurement,
    PureState,
    Tester,
    _vector_from_literal,
    bell_basis,
    computational_basis,
    outcome_distribution,
    povm_from_projective,
)
from .uncertainty import (
    mes_bound,
    pair_uncertainty,
    povm_bound,
    projective_bound,
    shannon_entropy,
)

log = logging.getLogger("utp")

OPERATOR_NAMES = (
    "identity",
    "i",
    "pauli-x",
    "pauli-y",
    "pauli-z",
    "clock",
    "shift",
    "omega-minus",
    "omega-plus",
)


class UsageError(ValueError):
    """Bad command-line input."""


def parse_angle(text: str) -> float:
    """Radians from a numeric literal or a pi expression like ``pi/4`` or ``3*pi/2``."""
    t = text.strip().replace(" ", "").lower()
    m = re.fullmatch(r"([+-]?\d*\.?\d*)\*?pi(?:/(\d*\.?\d+))?", t)
    if m:
        coef_text = m.group(1)
        if coef_text in ("", "+"):
            coef = 1.0
        elif coef_text == "-":
            coef = -1.0
        else:
            coef = float(coef_text)
        div = float(m.group(2)) if m.group(2) else 1.0
        return coef * math.pi / div
    try:
        return float(t)
    except ValueError:
        raise UsageError(f"cannot parse angle {text!r}; use radians or a pi literal like pi/4")


def _load_json_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}")


def resolve_operator(spec: str, dim: int) -> UnitaryOperator:
    """Named operator from the registry, or a matrix literal from a JSON file."""
    name = spec.lower()
    if name in ("identity", "i"):
        return identity(dim)
    if name in ("pauli-x", "pauli-y", "pauli-z"):
        if dim != 2:
            raise UsageError(f"{spec} is a qubit operator; got --dim {dim}")
        return pauli(name[-1])
    if name in ("omega-minus", "omega-plus"):
        if dim != 2:
            raise UsageError(f"{spec} is a qubit operator; got --dim {dim}")
        return omega(-1 if name.endswith("minus") else +1)
    if name == "clock":
        return clock_shift_pair(dim)[0]
    if name == "shift":
        return clock_shift_pair(dim)[1]
    if os.path.exists(spec):
        return UnitaryOperator(matrix_from_literal(_load_json_file(spec)))
    raise UsageError(
        f"unknown operator name {spec!r}; expected one of {', '.join(OPERATOR_NAMES)} "
        "or a JSON file path"
    )


def resolve_projective(spec: str, dim: int) -> ProjectiveMeasurement:
    name = spec.lower()
    if name == "computational":
        return computational_basis(dim)
    if name.startswith("su2:"):
        parts = spec[4:].split(",")
        if len(parts) != 2:
            raise UsageError("su2 measurement needs two angles, e.g. su2:pi/4,0")
        if dim != 2:
            raise UsageError(f"su2 measurement is qubit-only; got --dim {dim}")
        return su2_basis(parse_angle(parts[0]), parse_angle(parts[1]))
    if os.path.exists(spec):
        data = _load_json_file(spec)
        try:
            states = data["states"]
        except (KeyError, TypeError):
            raise UsageError(f"{spec} does not hold a projective measurement (missing 'states')")
        return ProjectiveMeasurement(
            tuple(PureState(_vector_from_literal(s)) for s in states)
        )
    raise UsageError(
        f"unknown measurement {spec!r}; expected computational, su2:theta,phi, "
        "or a JSON file path"
    )


def resolve_povm(spec: str, dim: int) -> Povm:
    if os.path.exists(spec):
        data = _load_json_file(spec)
        if isinstance(data, dict) and "elements" in data:
            return Povm(tuple(matrix_from_literal(e) for e in data["elements"]))
    return povm_from_projective(resolve_projective(spec, dim))


def resolve_mes(spec: str, dim: int) -> MesMeasurement:
    if spec.lower() == "bell":
        return bell_basis(dim)
    if os.path.exists(spec):
        data = _load_json_file(spec)
        try:
            return MesMeasurement(
                int(data["local_dim"]),
                tuple(PureState(_vector_from_literal(s)) for s in data["states"]),
            )
        except (KeyError, TypeError) as exc:
            raise UsageError(f"{spec} does not hold an MES measurement: {exc}")
    raise UsageError(f"unknown MES measurement {spec!r}; expected bell or a JSON file path")


def resolve_input(spec: str, m: ProjectiveMeasurement) -> PureState:
    name = spec.lower()
    if name.startswith("chi:"):
        k = _parse_index(spec[4:], m.dim, "chi")
        return m.states[k]
    if name.startswith("e:"):
        k = _parse_index(spec[2:], m.dim, "e")
        amps = np.zeros(m.dim, dtype=complex)
        amps[k] = 1.0
        return PureState(amps)
    if os.path.exists(spec):
        return PureState(_vector_from_literal(_load_json_file(spec)))
    raise UsageError(
        f"unknown input state {spec!r}; expected chi:K, e:K, or a JSON file path"
    )


def _parse_index(text: str, dim: int, label: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise UsageError(f"{label}:K needs an integer index, got {text!r}")
    if not (0 <= k < dim):
        raise UsageError(f"{label} index {k} out of range for dimension {dim}")
    return k


def _base(args) -> float:
    return 2.0 if args.log_base == "2" else math.e


def _unit(args) -> str:
    return "bits" if args.log_base == "2" else "nats"


def _json_line(payload: dict) -> str:
    return json.dumps(payload) + "\n"


def _operator_pair(args) -> tuple[UnitaryOperator, UnitaryOperator]:
    v = resolve_operator(args.v, args.dim)
    w = resolve_operator(args.w, args.dim)
    if v.dim != w.dim:
        raise UsageError(f"dimension mismatch: --v is {v.dim}-dimensional, --w is {w.dim}")
    return v, w


def cmd_bound(args) -> str:
    v, w = _operator_pair(args)
    m = resolve_projective(args.measurement, v.dim)
    b = projective_bound(m, v, w, _base(args))
    return _json_line({f"bound_{_unit(args)}": b.value, "argmax": list(b.argmax)})


def cmd_entropy(args) -> str:
    v, w = _operator_pair(args)
    m = resolve_projective(args.measurement, v.dim)
    t = Tester.projective(resolve_input(args.input, m), m)
    base = _base(args)
    hv = shannon_entropy(outcome_distribution(t, v), base).value
    hw = shannon_entropy(outcome_distribution(t, w), base).value
    unit = _unit(args)
    return _json_line(
        {
            f"pair_uncertainty_{unit}": pair_uncertainty(t, v, w, base).value,
            f"h_v_{unit}": hv,
            f"h_w_{unit}": hw,
        }
    )


def cmd_sweep(args) -> str:
    records = su2_overlap_surface(args.pair, args.grid)
    log.info("sweep %s over %d points", args.pair, len(records))
    if args.output == "json":
        return _json_line(
            {
                "records": [
                    {
                        "theta": r.theta,
                        "phi": r.phi,
                        "max_overlap": r.max_overlap,
                        "diag_overlap": r.diag_overlap,
                        "bound_bits": r.bound_bits,
                    }
                    for r in records
                ]
            }
        )
    return sweep_to_csv(records)


def cmd_search(args) -> str:
    v, w = _operator_pair(args)
    m = resolve_projective(args.measurement, v.dim)
    report = search_min_uncertainty(
        m, v, w, budget=args.budget, seed=args.seed, restarts=args.restarts, base=_base(args)
    )
    unit = _unit(args)
    amps = report.tester.input.amplitudes
    return _json_line(
        {
            f"achieved_{unit}": report.achieved.value,
            f"bound_{unit}": report.bound.value,
            f"gap_{unit}": report.gap,
            "trivial": report.trivial,
            "method": report.method,
            "input_re": amps.real.tolist(),
            "input_im": amps.imag.tolist(),
        }
    )


def _resolve_basis(spec: str, dim: int) -> UnitaryBasis:
    names = [part for part in spec.split(",") if part]
    if len(names) < 2:
        raise UsageError(f"basis spec {spec!r} needs at least two comma-separated operators")
    return UnitaryBasis(tuple(resolve_operator(name, dim) for name in names))


def cmd_muub_check(args) -> str:
    b1 = _resolve_basis(args.basis1, args.dim)
    b2 = _resolve_basis(args.basis2, args.dim)
    flag, kappa = is_muub(b1, b2, args.tol)
    cert = muub_certify_by_saturation(
        b1, b2, tol=args.tol, budget=args.budget, restarts=args.restarts, seed=args.seed
    )
    return _json_line({"certified": cert.certified, "kappa": kappa if flag else None})


def cmd_distinguish(args) -> str:
    v, w = _operator_pair(args)
    return _json_line({"distinguishable": is_perfectly_distinguishable(v, w, args.tol)})


def cmd_game(args) -> str:
    v, w = _operator_pair(args)
    m = resolve_projective(args.measurement, v.dim)
    t = Tester.projective(resolve_input(args.input, m), m)
    cfg = GameConfig(
        tester=t, v=v, w=w, trials=args.trials, seed=args.seed, operator_bias=args.bias
    )
    transcript = run_game(cfg)
    if args.output == "csv":
        lines = ["outcome,count_v,count_w"]
        for k in range(transcript.counts_v.size):
            lines.append(f"{k},{transcript.counts_v[k]},{transcript.counts_w[k]}")
        return "\n".join(lines) + "\n"
    return transcript_to_json(transcript) + "\n"


def cmd_povm_bound(args) -> str:
    v, w = _operator_pair(args)
    m = resolve_povm(args.measurement, v.dim)
    b = povm_bound(m, v, w, _base(args))
    return _json_line({f"bound_{_unit(args)}": b.value, "argmax": list(b.argmax)})


def cmd_mes_bound(args) -> str:
    v, w = _operator_pair(args)
    m = resolve_mes(args.measurement, v.dim)
    b = mes_bound(m, v, w, _base(args))
    return _json_line({f"bound_{_unit(args)}": b.value, "argmax": list(b.argmax)})


def _add_common(p: argparse.ArgumentParser, *, operators: bool = True) -> None:
    if operators:
        p.add_argument("--v", required=True, help="first operator (name or JSON path)")
        p.add_argument("--w", required=True, help="second operator (name or JSON path)")
        p.add_argument("--dim", type=int, default=2, help="dimension for named operators")
    p.add_argument("--log-base", choices=("2", "e"), default="2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="utp",
        description="Entropic uncertainty of unitary-operator pairs under quantum testers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="projective measurement-only entropic bound")
    _add_common(p)
    p.add_argument("--measurement", required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("entropy", help="pair uncertainty of a concrete tester")
    _add_common(p)
    p.add_argument("--measurement", required=True)
    p.add_argument("--input", required=True, help="input state: chi:K, e:K, or JSON path")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("sweep", help="overlap surface over the (theta, phi) grid")
    p.add_argument("--pair", required=True, choices=("i-sigmay", "i-omega"))
    p.add_argument("--grid", type=int, default=101, help="points per axis")
    p.add_argument("--output", choices=("csv", "json"), default="csv")
    p.add_argument("--log-base", choices=("2", "e"), default="2")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("search", help="minimize pair uncertainty over pure inputs")
    _add_common(p)
    p.add_argument("--measurement", required=True)
    p.add_argument("--budget", type=int, default=5000)
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("muub-check", help="mutual unbiasedness of two unitary bases")
    p.add_argument("--basis1", required=True, help="comma-separated operator names")
    p.add_argument("--basis2", required=True)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--budget", type=int, default=5000)
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--log-base", choices=("2", "e"), default="2")
    p.set_defaults(func=cmd_muub_check)

    p = sub.add_parser("distinguish", help="single-shot perfect distinguishability")
    _add_common(p)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("game", help="Monte Carlo guessing game")
    _add_common(p)
    p.add_argument("--measurement", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bias", type=float, default=0.5)
    p.add_argument("--output", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_game)

    p = sub.add_parser("povm-bound", help="POVM entropic bound")
    _add_common(p)
    p.add_argument("--measurement", required=True, help="projective name or POVM JSON path")
    p.set_defaults(func=cmd_povm_bound)

    p = sub.add_parser("mes-bound", help="MES-measurement entropic bound")
    _add_common(p)
    p.add_argument("--measurement", default="bell", help="bell (default) or JSON path")
    p.set_defaults(func=cmd_mes_bound)

    return parser


def _configure_logging() -> None:
    level = {"quiet": logging.WARNING, "info": logging.INFO, "debug": logging.DEBUG}.get(
        os.environ.get("UTP_LOG", "quiet").lower(), logging.WARNING
    )
    # rebuild the handler each invocation so it tracks the current stderr
    for handler in list(log.handlers):
        log.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
    log.addHandler(handler)
    log.setLevel(level)
    log.propagate = False


def run(argv) -> int:
    """Parse and execute one invocation; returns the process exit code."""
    _configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage to stderr
        return int(exc.code or 0)
    try:
        output = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(output)
    return 0


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
