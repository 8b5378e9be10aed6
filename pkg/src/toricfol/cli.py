"""Command-line front end: ``python -m toricfol <command> FAN [options]``.

Exit status 0 on success, 1 on a mathematical failure (for example a ring
requested for an incomplete fan), 2 on malformed input.  A non-polytopal
verdict is a successful report.  Text output is a rendering of the JSON.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import fileio
from .complexes import SimplicialComplex
from .dga import build_model, frolicher_check, model_cohomology
from .facering import build_presentation, hodge_diamond, quotient_basis, ring_report
from .fan import FanError, is_polytopal
from .fileio import InputError
from .foliation import leaf_census
from .pipeline import certificate_json, chow_pipeline, polytopalize
from .subdivision import rational_stellar_subdivision

COMMANDS = ("validate", "hvector", "ring", "hodge", "leaves", "subdivide", "polytopalize",
            "chow", "dolbeault")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("fan", help="fan file (JSON)")
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="report format (default: text)")
    p = argparse.ArgumentParser(
        prog="toricfol",
        description="Exact computations on marked simplicial fans. Scalars are limited to "
                    "Q and Q(sqrt(d)); indices are 1-based.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("validate", parents=[common],
                       help="simpliciality, fan condition, completeness")
    v.add_argument("--polytopal", action="store_true", help="also decide polytopality")
    sub.add_parser("hvector", parents=[common], help="f- and h-vector of the complex")
    sub.add_parser("ring", parents=[common], help="presentation, Groebner basis, dims, pairing")
    sub.add_parser("hodge", parents=[common], help="basic Hodge diamond and Betti numbers")
    sub.add_parser("leaves", parents=[common], help="leaf type for every face")
    s = sub.add_parser("subdivide", parents=[common], help="one rational stellar subdivision")
    s.add_argument("--face", required=True, help="comma-separated vertices of the cone")
    s.add_argument("--weights", required=True, help="comma-separated positive integers")
    s.add_argument("--output", help="write the subdivided fan to this file")
    pp = sub.add_parser("polytopalize", parents=[common],
                        help="stellar subdivisions ending in a polytopal fan (n <= 3)")
    pp.add_argument("--output", help="write the final fan to this file")
    c = sub.add_parser("chow", parents=[common], help="polytopalize and extend h")
    c.add_argument("--h", required=True, dest="h_file", help="h file (JSON list of vectors)")
    c.add_argument("--output", help="write the final fan to this file")
    d = sub.add_parser("dolbeault", parents=[common], help="cohomology of the finite model")
    d.add_argument("--delta", action="append", default=[],
                   help="coefficients of one delta_t in v_1..v_m; repeat s times")
    return p


def _write_fan(path, fan):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(fileio.dump_json(fileio.fan_to_json(fan)))
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None


def _fan_header(fan) -> dict:
    return {"m": fan.m, "n": fan.n, "ghosts": sorted(fan.complex.ghosts),
            "discriminant": fan.discriminant}


def run_command(args) -> dict:
    """Execute a parsed command and return its JSON report."""
    data = fileio.read_json_file(args.fan)
    fan = fileio.fan_from_json(data, args.fan)
    cmd = args.command
    if cmd == "validate":
        out = {"fan": _fan_header(fan)}
        out.update(fileio.report_to_json(fan.report))
        if args.polytopal:
            if not fan.report.ok:
                raise FanError("polytopality needs a complete simplicial fan")
            out["polytopal"] = certificate_json(is_polytopal(fan))
        return out
    if cmd == "hvector":
        K: SimplicialComplex = fan.complex
        return {"fan": _fan_header(fan), "dim": K.dim, "f_vector": list(K.f_vector()),
                "h_vector": list(K.h_vector())}
    if cmd == "ring":
        return ring_report(fan)
    if cmd == "hodge":
        return hodge_diamond(fan).to_json()
    if cmd == "leaves":
        return leaf_census(fan).to_json()
    if cmd == "subdivide":
        face = fileio.parse_int_list(args.face, "--face")
        weights = fileio.parse_int_list(args.weights, "--weights")
        if not fan.complex.is_face(face) or len(set(face)) != len(face):
            raise InputError(f"--face: {face} is not a face of the fan")
        if len(weights) != len(face) or any(w < 1 for w in weights):
            raise InputError(f"--weights: need {len(face)} positive integers, got {weights}")
        new_fan, step = rational_stellar_subdivision(fan, face, weights)
        if args.output:
            _write_fan(args.output, new_fan)
        return {"step_log": fileio.step_log([step], fan.m), "fan": fileio.fan_to_json(new_fan)}
    if cmd == "polytopalize":
        result = polytopalize(fan)
        if args.output:
            _write_fan(args.output, result.fan)
        return result.to_json()
    if cmd == "chow":
        h = fileio.h_from_json(fileio.read_json_file(args.h_file), fan.m, args.h_file)
        result = chow_pipeline(fan, h)
        if args.output:
            _write_fan(args.output, result.fan)
        return result.to_json()
    if cmd == "dolbeault":
        deltas = [fileio.parse_scalar_list(t, "--delta") for t in args.delta]
        for t in deltas:
            if len(t) != fan.m:
                raise InputError(f"--delta: {len(t)} coefficients given, need m = {fan.m}")
        if (fan.m - fan.n) % 2 == 0 and len(deltas) != (fan.m - fan.n) // 2:
            raise InputError(f"--delta: {len(deltas)} given, the model needs one per exterior "
                             f"generator, s = {(fan.m - fan.n) // 2}")
        qb = quotient_basis(build_presentation(fan))
        model = build_model(qb, deltas)
        table = model_cohomology(model)
        fr = frolicher_check(table, model.s)
        return {"ring_dims": list(qb.dims), "s": model.s, "model_dimension": model.dimension,
                "dolbeault": table.to_json(),
                "euler_characteristic": fr.euler, "h00": fr.h00, "consistent": fr.ok}
    raise InputError(f"unknown command {cmd!r}")  # pragma: no cover - argparse restricts


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        out = run_command(args)
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    except (FanError, ValueError, ArithmeticError) as e:
        print(f"failure: {e}", file=sys.stderr)
        return 1
    if args.format == "json":
        sys.stdout.write(fileio.dump_json(out))
    else:
        sys.stdout.write(fileio.render_text(out))
    return 0
