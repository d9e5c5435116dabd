"""Command line interface: ``cevatri <subcommand> ...``.

Exit codes: 0 success, 2 invalid geometry or input, 3 failed precondition
(Brocard mismatch, equilateral input, ...), 4 internal verification failure.
"""

from __future__ import annotations

import argparse
import csv
import enum
import io
import json
import math
import random
import sys
from dataclasses import dataclass

from . import __version__
from .ceva import (
    apply,
    apply_hajja,
    iterate,
    reconstruct,
    execute_plan,
    right_ceva_param,
    similarity,
    param_similarity,
)
from .errors import (
    BrocardMismatch,
    EquilateralInput,
    GammaOutOfRange,
    InvalidTriangle,
    IsotropicVector,
    NoSolution,
    ParamOutsideInterval,
    VerificationError,
)
from .extgroup import INF, ext, norm
from .geom_oracle import cevian_lengths, embed
from .render import render_svg
from .triangle import (
    Triangle,
    TriangleClass,
    brocard_angle,
    classify,
    cone_angle,
    fundamental_interval,
    hajja_sigma,
    kappa,
    mu_nu,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PRECONDITION = 3
EXIT_VERIFICATION = 4


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = 1e-9
    output_format: str = "json"
    seed: int = 0

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")


class UsageError(ValueError):
    pass


def parse_rho(text: str):
    """A real number or the literal ``inf`` (any case)."""
    t = text.strip()
    if t.lower() == "inf":
        return INF
    try:
        v = float(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a real number or 'inf': {text!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"not a real number or 'inf': {text!r}")
    return ext(v)


def _json_default(obj):
    if obj is INF:
        return "inf"
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, enum.Enum):
        return obj.value
    if hasattr(obj, "item"):  # numpy scalars
        return obj.item()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _plain(obj):
    """Turn INF into the string "inf" everywhere, keep everything else."""
    if obj is INF:
        return "inf"
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def _triangle(values) -> Triangle:
    return Triangle(*values)


def _relation(rel) -> dict:
    return {"kind": rel.kind.value, "ratio": rel.ratio}


# ------------------------------------------------------------------ commands


def cmd_classify(args, cfg: RunConfig):
    T = _triangle(args.sides)
    cls = classify(T)
    rec = {
        "valid": True,
        "class": cls.value,
        "gamma": cone_angle(T),
        "omega": brocard_angle(T),
        "sigma": hajja_sigma(T),
    }
    if cls is TriangleClass.EQUILATERAL:
        rec.update(kappa=None, mu=None, nu=None, interval=None)
    else:
        mu, nu = mu_nu(T)
        rec.update(kappa=kappa(T), mu=mu, nu=nu, interval=list(fundamental_interval(T)))
    return {"sides": list(T.sides)}, [rec]


def _row(rho, S: Triangle) -> dict:
    return {"rho": rho, "x": S.a, "y": S.b, "z": S.c, "class": classify(S).value}


def cmd_apply(args, cfg: RunConfig):
    T = _triangle(args.sides)
    n = args.iterate
    if args.hajja:
        S = T
        for _ in range(n):
            S = apply_hajja(S, args.rho)
    else:
        S = iterate(T, args.rho, n)
    rec = _row(args.rho, S)
    rec["squares"] = list(S.squares)
    rec["similarity_to_input"] = _relation(similarity(S, T, cfg.tolerance))
    inp = {"sides": list(T.sides), "rho": args.rho, "iterate": n, "hajja": args.hajja}
    return inp, [rec]


def cmd_similar(args, cfg: RunConfig):
    T = _triangle(args.sides[:3])
    if len(args.sides) == 6:
        V = _triangle(args.sides[3:])
        rel = similarity(T, V, cfg.tolerance)
        return {"T": list(T.sides), "V": list(V.sides)}, [_relation(rel)]
    if args.rho is None or args.tau is None:
        raise UsageError("give six sides, or three sides with --rho and --tau")
    rel = param_similarity(T, args.rho, args.tau, cfg.tolerance)
    return {"T": list(T.sides), "rho": args.rho, "tau": args.tau}, [_relation(rel)]


def cmd_reconstruct(args, cfg: RunConfig):
    T = _triangle(args.sides[:3])
    V = _triangle(args.sides[3:])
    plan = reconstruct(T, V, cfg.tolerance)
    out = execute_plan(T, plan)
    rec = {
        "rho": plan.rho,
        "n0": plan.n0,
        "xi": plan.xi,
        "scale": plan.scale,
        "total_ops": plan.total_ops,
        "result": list(out.sides),
    }
    return {"T": list(T.sides), "V": list(V.sides)}, [rec]


def cmd_right_ceva(args, cfg: RunConfig):
    T = _triangle(args.sides)
    rho = right_ceva_param(T, cfg.tolerance)
    rec = {"exists": rho is not None, "rho": rho}
    if rho is not None:
        rec["result"] = list(apply(T, rho).sides)
    return {"sides": list(T.sides)}, [rec]


def cmd_render(args, cfg: RunConfig):
    T = _triangle(args.sides)
    return {"sides": list(T.sides), "rho": list(args.rho)}, render_svg(T, args.rho)


def _random_triangle(rng: random.Random) -> Triangle:
    while True:
        pts = [(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3)]
        (ax, ay), (bx, by), (cx, cy) = pts
        area2 = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
        if area2 < 0:
            pts[1], pts[2] = pts[2], pts[1]
        A, B, C = pts
        a, b, c = math.dist(B, C), math.dist(C, A), math.dist(A, B)
        # skip needle-like triangles whose invariants are poorly conditioned
        if abs(area2) > 0.05 * max(a, b, c) ** 2:
            return Triangle(a, b, c)


def cmd_sweep(args, cfg: RunConfig):
    if args.random:
        rng = random.Random(cfg.seed)
        rows = []
        for i in range(args.random):
            T = _random_triangle(rng)
            rho = rng.uniform(-3.0, 3.0)
            S = apply(T, rho)
            twice = apply(S, rho)
            n2 = norm(rho) ** 2
            binary = max(abs(u - n2 * v) / (n2 * v) for u, v in zip(twice.sides, T.sides))
            oracle = max(abs(u - v) / v for u, v in zip(cevian_lengths(embed(T), rho), S.sides))
            rows.append(
                {
                    "index": i,
                    "sides": list(T.sides),
                    "rho": rho,
                    "binary_similarity_error": binary,
                    "oracle_error": oracle,
                    "ok": binary <= cfg.tolerance and oracle <= cfg.tolerance,
                }
            )
        return {"random": args.random, "seed": cfg.seed}, rows
    if args.sides is None:
        raise UsageError("sweep needs three sides or --random N")
    T = _triangle(args.sides)
    if args.steps < 1:
        raise UsageError("--steps must be at least 1")
    rows = []
    for k in range(args.steps + 1):
        rho = args.rho_min + (args.rho_max - args.rho_min) * k / args.steps
        rows.append(_row(rho, apply(T, rho)))
    inp = {"sides": list(T.sides), "rho_min": args.rho_min, "rho_max": args.rho_max, "steps": args.steps}
    return inp, rows


# -------------------------------------------------------------------- output


def _emit_csv(rows, out) -> None:
    if not rows:
        return
    writer = csv.writer(out, lineterminator="\n")
    if all({"rho", "x", "y", "z", "class"} <= r.keys() for r in rows):
        writer.writerow(["rho", "x", "y", "z", "class"])
        for r in rows:
            writer.writerow([_plain(r[k]) for k in ("rho", "x", "y", "z", "class")])
        return
    keys = list(rows[0].keys())
    writer.writerow(keys)
    for r in rows:
        writer.writerow([json.dumps(_plain(r.get(k)), default=_json_default) for k in keys])


def _emit_text(inp, rows, out) -> None:
    for r in rows:
        out.write(" ".join(f"{k}={json.dumps(_plain(v), default=_json_default)}" for k, v in r.items()))
        out.write("\n")


def emit(command: str, inp, results, cfg: RunConfig, out) -> None:
    if command == "render":
        if cfg.output_format != "svg" and cfg.output_format != "json":
            raise UsageError("render supports --format svg or json")
        if cfg.output_format == "svg":
            out.write(results)
            return
        results = [{"svg": results}]
    elif cfg.output_format == "svg":
        raise UsageError("--format svg is only available for render")
    if cfg.output_format == "json":
        doc = {
            "input": _plain(inp),
            "results": _plain(results),
            "config": {"tolerance": cfg.tolerance, "format": cfg.output_format, "seed": cfg.seed},
            "version": __version__,
        }
        out.write(json.dumps(doc, default=_json_default, indent=2))
        out.write("\n")
    elif cfg.output_format == "csv":
        _emit_csv(results, out)
    else:
        _emit_text(inp, results, out)


# -------------------------------------------------------------------- parser


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS
    p.add_argument("--tolerance", type=float, default=d if suppress else 1e-9, help="relative tolerance")
    p.add_argument(
        "--format",
        dest="output_format",
        choices=("json", "csv", "svg", "text"),
        default=d if suppress else None,
        help="output format (default json, svg for render)",
    )
    p.add_argument("--seed", type=int, default=d if suppress else 0, help="seed for random sweeps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cevatri", description="Ceva triangles: operators, similarity, reconstruction")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a triangle and report its invariants")
    p.add_argument("sides", type=float, nargs=3)

    p = sub.add_parser("apply", parents=[common], help="apply a Ceva (or Hajja) operator")
    p.add_argument("sides", type=float, nargs=3)
    p.add_argument("--rho", type=parse_rho, required=True)
    p.add_argument("--iterate", type=int, default=1, metavar="N")
    p.add_argument("--hajja", action="store_true")

    p = sub.add_parser("similar", parents=[common], help="similarity of two triangles or two Ceva triangles")
    p.add_argument("sides", type=float, nargs="+", help="three sides, or six for a pair")
    p.add_argument("--rho", type=parse_rho)
    p.add_argument("--tau", type=parse_rho)

    p = sub.add_parser("reconstruct", parents=[common], help="build V from T with Ceva operators")
    p.add_argument("sides", type=float, nargs=6, metavar="SIDE")

    p = sub.add_parser("right-ceva", parents=[common], help="find a right-angled Ceva triangle")
    p.add_argument("sides", type=float, nargs=3)

    p = sub.add_parser("render", parents=[common], help="SVG of T and some Ceva triangles")
    p.add_argument("sides", type=float, nargs=3)
    p.add_argument("--rho", type=parse_rho, action="append", default=[])

    p = sub.add_parser("sweep", parents=[common], help="parameter grid or random property sweep")
    p.add_argument("sides", type=float, nargs="*")
    p.add_argument("--rho-min", type=float, default=0.0)
    p.add_argument("--rho-max", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--random", type=int, default=0, metavar="N")
    return parser


_COMMANDS = {
    "classify": cmd_classify,
    "apply": cmd_apply,
    "similar": cmd_similar,
    "reconstruct": cmd_reconstruct,
    "right-ceva": cmd_right_ceva,
    "render": cmd_render,
    "sweep": cmd_sweep,
}


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    args = build_parser().parse_args(argv)
    if args.command == "sweep":
        if args.sides and len(args.sides) != 3:
            print("error: sweep takes exactly three sides", file=err)
            return EXIT_INVALID
        args.sides = args.sides or None
    if args.command == "similar" and len(args.sides) not in (3, 6):
        print("error: similar takes three or six sides", file=err)
        return EXIT_INVALID
    fmt = args.output_format or ("svg" if args.command == "render" else "json")
    try:
        cfg = RunConfig(args.tolerance, fmt, args.seed)
        inp, results = _COMMANDS[args.command](args, cfg)
        buf = io.StringIO()
        emit(args.command, inp, results, cfg, buf)
    except InvalidTriangle as e:
        print(f"error: invalid triangle: {e}", file=err)
        if e.inequality:
            print(f"failing inequality: {e.inequality}", file=err)
        return EXIT_INVALID
    except BrocardMismatch as e:
        print(f"error: {e}", file=err)
        print(f"omega_T={e.omega_t!r}", file=err)
        print(f"omega_V={e.omega_v!r}", file=err)
        return EXIT_PRECONDITION
    except (EquilateralInput, IsotropicVector, ParamOutsideInterval, NoSolution, GammaOutOfRange) as e:
        print(f"error: {e}", file=err)
        return EXIT_PRECONDITION
    except VerificationError as e:
        print(f"error: verification failed: {e}", file=err)
        return EXIT_VERIFICATION
    except ValueError as e:
        print(f"error: {e}", file=err)
        return EXIT_INVALID
    out.write(buf.getvalue())
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
