"""Command-line front end.

Every subcommand builds its whole output in memory and writes it once, so a
configuration error (exit 2) never leaves partial output behind.  Exit 1 means
an invariant check ran and failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .io import (
    FunctionFileError,
    classification_to_dict,
    coefficients_csv,
    function_to_dict,
    load_function,
)
from .monna import ball_image, rho
from .mra import membership_scale, project
from .padic import PAdic, PAdicError, check_prime, enumerate_cosets, format_literal, parse_padic
from .schwartz import Ball, integral, norm_sq
from .verification import SUITES, run_suite
from .vladimirov import VladimirovParams, eigenvalue, eigenvalue_check
from .wavelets import (
    WaveletIndex,
    WindowError,
    affine_value,
    basis_value,
    classify_affine,
    coefficient_table,
    support_window,
    tail_energy,
)

EIGEN_TOL = 1e-10


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class CommandConfig:
    command: str
    p: int
    precision: int
    seed: int
    fmt: str
    out: Path | None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> CommandConfig:
        try:
            p = check_prime(args.p)
        except PAdicError as exc:
            raise ConfigError(str(exc)) from exc
        if args.precision < 8:
            raise ConfigError(f"--precision must be at least 8 (got {args.precision})")
        return cls(args.command, p, args.precision, args.seed, args.format, args.out)


@dataclass
class Result:
    """Rendered output, exit status and an optional ``(path, text)`` side file."""
    text: str
    status: int = 0
    sidecar: tuple[Path, str] | None = None


def render_json(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _literal(cfg: CommandConfig, text: str) -> PAdic:
    return parse_padic(text, cfg.p, cfg.precision)


def _point(cfg: CommandConfig, text: str):
    x = _literal(cfg, text)
    return x.rational if x.rational is not None else x


def _require_json(cfg: CommandConfig) -> None:
    if cfg.fmt != "json":
        raise ConfigError(f"{cfg.command} supports --format json only")


def _csv_rows(header: Sequence[str], rows: list[Sequence[Any]]) -> str:
    lines = [",".join(header)]
    lines += [",".join(str(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _f17(x: float) -> str:
    return f"{x:.17g}"


# -- subcommands --------------------------------------------------------------------

def cmd_classify(cfg: CommandConfig, args: argparse.Namespace) -> Result:
    _require_json(cfg)
    a = _literal(cfg, args.a)
    if a.is_zero_to_precision or a.exact_zero:
        raise ConfigError("dilation a must be nonzero")
    b = _literal(cfg, args.b)
    return Result(render_json(classification_to_dict(classify_affine(a, b))))


def _parse_index(cfg: CommandConfig, text: str) -> WaveletIndex:
    try:
        g, n, j = text.split(",")
        return WaveletIndex.of(int(g), Fraction(n), int(j), cfg.p)
    except ValueError as exc:
        raise ConfigError(f"--index expects gamma,n,j (got {text!r}): {exc}") from exc


def cmd_wavelet(cfg: CommandConfig, args: argparse.Namespace) -> Result:
    if (args.index is None) == (args.a is None):
        raise ConfigError("give either --index or --a/--b")
    points = [(t, _point(cfg, t)) for t in args.x]
    if args.index is not None:
        idx = _parse_index(cfg, args.index)
        values = [basis_value(idx, x) for _, x in points]
        head: dict[str, Any] = {"index": {"gamma": idx.gamma, "n": format_literal(idx.n), "j": idx.j}}
    else:
        a, b = _point(cfg, args.a), _point(cfg, args.b or "0")
        if a == 0:
            raise ConfigError("dilation a must be nonzero")
        values = [affine_value(a, b, x, cfg.p) for _, x in points]
        head = {"a": args.a, "b": args.b or "0"}
    if cfg.fmt == "csv":
        rows = [(t, _f17(v.real), _f17(v.imag)) for (t, _), v in zip(points, values)]
        return Result(_csv_rows(("x", "re", "im"), rows))
    head.update(p=cfg.p, values=[{"x": t, "value": [v.real, v.imag]}
                                 for (t, _), v in zip(points, values)])
    return Result(render_json(head))


def cmd_coeffs(cfg: CommandConfig, args: argparse.Namespace) -> Result:
    f = load_function(args.file)
    if f.prime != cfg.p:
        raise ConfigError(f"function file has p={f.prime}, command has --p {cfg.p}")
    lo, hi = support_window(f)
    lo = lo if args.gamma_min is None else args.gamma_min
    hi = hi if args.gamma_max is None else args.gamma_max
    table = coefficient_table(f, lo, hi)
    total = integral(f)
    try:
        tail = tail_energy(f, hi) if total != 0 else 0.0
    except WindowError:
        tail = None
    sidecar = {
        "p": cfg.p,
        "gamma_min": lo,
        "gamma_max": hi,
        "norm_sq": norm_sq(f),
        "partial_parseval": table.energy(),
        "analytic_tail": tail,
        "integral": [total.real, total.imag],
        "rows": len(table),
    }
    if cfg.fmt == "json":
        sidecar["coefficients"] = [
            {"gamma": i.gamma, "n": format_literal(i.n), "j": i.j, "coeff": [c.real, c.imag]}
            for i, c in table]
        return Result(render_json(sidecar))
    csv_text = coefficients_csv(table)
    sidecar_path = args.sidecar or (cfg.out.with_name(cfg.out.name + ".json") if cfg.out else None)
    return Result(csv_text, sidecar=(sidecar_path, render_json(sidecar)) if sidecar_path else None)


def cmd_spectrum(cfg: CommandConfig, args: argparse.Namespace) -> Result:
    if args.alpha <= 0:
        raise ConfigError("--alpha must be positive")
    params = VladimirovParams(args.alpha, cfg.p)
    cases = []
    for g in range(args.gamma_min, args.gamma_max + 1):
        for n in enumerate_cosets(cfg.p, args.cosets):
            for j in range(1, cfg.p):
                idx = WaveletIndex(g, n, j)
                err = eigenvalue_check(idx, params, args.samples, cfg.seed)
                cases.append({"gamma": g, "n": format_literal(n), "j": j,
                              "eigenvalue": eigenvalue(g, params), "max_rel_err": err})
    status = 0 if all(c["max_rel_err"] <= EIGEN_TOL for c in cases) else 1
    if cfg.fmt == "csv":
        rows = [(c["gamma"], c["n"], c["j"], _f17(c["eigenvalue"]), _f17(c["max_rel_err"]))
                for c in cases]
        return Result(_csv_rows(("gamma", "n_literal", "j", "eigenvalue", "max_rel_err"), rows), status)
    return Result(render_json({"p": cfg.p, "alpha": args.alpha, "cases": cases}), status)


def cmd_monna(cfg: CommandConfig, args: argparse.Namespace) -> Result:
    _require_json(cfg)
    if (args.x is None) == (args.ball is None):
        raise ConfigError("give exactly one of --x or --ball")
    if args.x is not None:
        x = _literal(cfg, args.x)
        return Result(render_json({"x": args.x, "rho": str(rho(x))}))
    try:
        centre_text, scale_text = args.ball.rsplit(",", 1)
        scale = int(scale_text)
    except ValueError as exc:
        raise ConfigError(f"--ball expects <center>,<scale> (got {args.ball!r})") from exc
    centre = _literal(cfg, centre_text)
    if centre.rational is None:
        raise ConfigError("ball centre must be an exact literal")
    image = ball_image(Ball(cfg.p, scale, centre.residue(scale)))
    return Result(render_json({"ball": args.ball, "left": str(image.left), "right": str(image.right)}))


def cmd_project(cfg: CommandConfig, args: argparse.Namespace) -> Result:
    _require_json(cfg)
    f = load_function(args.file)
    if f.prime != cfg.p:
        raise ConfigError(f"function file has p={f.prime}, command has --p {cfg.p}")
    pg = project(f, args.gamma)
    out = function_to_dict(pg)
    out["gamma"] = args.gamma
    out["membership_scale"] = membership_scale(pg)
    return Result(render_json(out))


def cmd_verify(cfg: CommandConfig, args: argparse.Namespace) -> Result:
    _require_json(cfg)
    report = run_suite(args.suite, cfg.p, cfg.seed)
    return Result(render_json(report), 0 if report["passed"] else 1)


COMMANDS = {
    "classify": cmd_classify,
    "wavelet": cmd_wavelet,
    "coeffs": cmd_coeffs,
    "spectrum": cmd_spectrum,
    "monna": cmd_monna,
    "project": cmd_project,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=2, help="prime (default 2)")
    common.add_argument("--precision", type=int, default=32, help="p-adic digits kept (>= 8)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--out", type=Path, default=None, help="write here instead of stdout")

    parser = argparse.ArgumentParser(prog="padicwave", description="p-adic wavelet toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", parents=[common], help="identify psi^{a,b} with a basis wavelet")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)

    s = sub.add_parser("wavelet", parents=[common], help="evaluate a wavelet at points")
    s.add_argument("--index", help="gamma,n,j of a basis wavelet")
    s.add_argument("--a")
    s.add_argument("--b")
    s.add_argument("--x", action="append", required=True, help="evaluation point (repeatable)")

    s = sub.add_parser("coeffs", parents=[common], help="support-localized coefficient table")
    s.add_argument("file", type=Path)
    s.add_argument("--gamma-min", type=int)
    s.add_argument("--gamma-max", type=int)
    s.add_argument("--sidecar", type=Path, help="JSON summary path (default <out>.json)")

    s = sub.add_parser("spectrum", parents=[common], help="Vladimirov eigenvalue table")
    s.add_argument("--alpha", type=float, default=1.0)
    s.add_argument("--gamma-min", type=int, default=-3)
    s.add_argument("--gamma-max", type=int, default=3)
    s.add_argument("--cosets", type=int, default=5)
    s.add_argument("--samples", type=int, default=20)

    s = sub.add_parser("monna", parents=[common], help="Monna map of a point or a ball")
    s.add_argument("--x")
    s.add_argument("--ball", help="<center>,<scale>")

    s = sub.add_parser("project", parents=[common], help="MRA projection onto V_gamma")
    s.add_argument("file", type=Path)
    s.add_argument("--gamma", type=int, required=True)

    s = sub.add_parser("verify", parents=[common], help="run invariant suites")
    s.add_argument("--suite", choices=("all",) + SUITES, default="all")
    return parser


DEFAULT_FORMAT = {"coeffs": "csv"}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = DEFAULT_FORMAT.get(args.command, "json")
    try:
        cfg = CommandConfig.from_args(args)
        result = COMMANDS[args.command](cfg, args)
    except (ConfigError, PAdicError, FunctionFileError, WindowError, ValueError, OSError) as exc:
        print(f"padicwave {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if cfg.out is not None:
        cfg.out.write_text(result.text)
    else:
        sys.stdout.write(result.text)
    if result.sidecar:
        result.sidecar[0].write_text(result.sidecar[1])
    return result.status


if __name__ == "__main__":
    sys.exit(main())
