"""Command-line interface.

    wsl sweep-qubits [--functions all|id,...] [--eps 0.0078125] [--n 7..13]
                     [--modes correct,incomplete] --out FILE.csv
    wsl sweep-eps    [--functions ...] [--n 12] [--eps-grid 2^-3..2^-10]
                     [--modes ...] --out FILE.csv
    wsl run          --function ID --n N --eps E --mode M
    wsl dump-circuit --function ID --n N --eps E --mode M [--out FILE]

Epsilon values may be written as plain decimals or as powers like 2^-7.
Exit codes: 0 success, 2 domain error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import bench
from .circuit import build_wsl_circuit, to_text
from .errors import DomainError
from .functions import FUNCTION_IDS, FunctionSpec, discretize
from .walsh import truncation_order, walsh_transform_fast


def _parse_eps(token: str) -> float:
    token = token.strip()
    try:
        if "^" in token:
            base, _, exponent = token.partition("^")
            value = float(base) ** int(exponent)
        else:
            value = float(token)
    except ValueError as exc:
        raise DomainError(f"cannot parse epsilon {token!r}") from exc
    if not 0.0 < value < 1.0:
        raise DomainError(f"epsilon must lie in (0, 1), got {token!r}")
    return value


def _parse_eps_grid(text: str) -> tuple[float, ...]:
    if ".." in text:
        lo_tok, _, hi_tok = text.partition("..")
        lo, hi = _parse_eps(lo_tok), _parse_eps(hi_tok)
        if "^" not in lo_tok or "^" not in hi_tok:
            raise DomainError(f"epsilon ranges need power notation, e.g. 2^-3..2^-10: {text!r}")
        base = float(lo_tok.partition("^")[0])
        e_lo, e_hi = int(lo_tok.partition("^")[2]), int(hi_tok.partition("^")[2])
        step = 1 if e_hi >= e_lo else -1
        return tuple(sorted(base**e for e in range(e_lo, e_hi + step, step)))
    return tuple(sorted(_parse_eps(tok) for tok in text.split(",") if tok.strip()))


def _parse_qubits(text: str) -> tuple[int, ...]:
    try:
        if ".." in text:
            lo, _, hi = text.partition("..")
            values = tuple(range(int(lo), int(hi) + 1))
        else:
            values = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise DomainError(f"cannot parse qubit list {text!r}") from exc
    if not values or min(values) < 1:
        raise DomainError(f"qubit counts must be >= 1, got {text!r}")
    return values


def _parse_functions(text: str) -> list[FunctionSpec]:
    if text == "all":
        return [FunctionSpec(fid) for fid in FUNCTION_IDS]
    return [FunctionSpec(tok.strip()) for tok in text.split(",") if tok.strip()]


def _parse_modes(text: str) -> tuple[str, ...]:
    modes = tuple(tok.strip() for tok in text.split(",") if tok.strip())
    if not modes:
        raise DomainError("at least one mode is required")
    return modes


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wsl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sweep_q = sub.add_parser("sweep-qubits", help="infidelity vs register size")
    sweep_q.add_argument("--functions", default="all")
    sweep_q.add_argument("--eps", default="0.0078125")
    sweep_q.add_argument("--n", default="7..13")
    sweep_q.add_argument("--modes", default="correct,incomplete")
    sweep_q.add_argument("--out", required=True)

    sweep_e = sub.add_parser("sweep-eps", help="infidelity vs epsilon")
    sweep_e.add_argument("--functions", default="all")
    sweep_e.add_argument("--n", default="12")
    sweep_e.add_argument("--eps-grid", default="2^-3..2^-10")
    sweep_e.add_argument("--modes", default="correct,incomplete")
    sweep_e.add_argument("--out", required=True)

    single = sub.add_parser("run", help="one experiment, record on stdout")
    single.add_argument("--function", required=True)
    single.add_argument("--n", type=int, required=True)
    single.add_argument("--eps", required=True)
    single.add_argument("--mode", default="correct")

    dump = sub.add_parser("dump-circuit", help="emit the loader circuit as text")
    dump.add_argument("--function", required=True)
    dump.add_argument("--n", type=int, required=True)
    dump.add_argument("--eps", required=True)
    dump.add_argument("--mode", default="correct")
    dump.add_argument("--out", default=None)

    return parser


def _dispatch(args: argparse.Namespace) -> None:
    if args.command == "sweep-qubits":
        records = bench.sweep_qubits(
            _parse_functions(args.functions),
            n_list=_parse_qubits(args.n),
            eps=_parse_eps(args.eps),
            modes=_parse_modes(args.modes),
        )
        bench.emit_csv(records, args.out)
    elif args.command == "sweep-eps":
        records = bench.sweep_epsilon(
            _parse_functions(args.functions),
            n=_parse_qubits(args.n)[0],
            eps_list=_parse_eps_grid(getattr(args, "eps_grid")),
            modes=_parse_modes(args.modes),
        )
        bench.emit_csv(records, args.out)
    elif args.command == "run":
        eps = _parse_eps(args.eps)
        record = bench.run_experiment(FunctionSpec(args.function), args.n, eps, eps, args.mode)
        sys.stdout.write(bench.render_csv([record]))
    elif args.command == "dump-circuit":
        eps = _parse_eps(args.eps)
        target = discretize(FunctionSpec(args.function), args.n)
        spectrum = walsh_transform_fast(target, truncation_order(eps, args.n), eps1=eps)
        text = to_text(build_wsl_circuit(spectrum, eps, args.n, args.mode))
        if args.out is None:
            sys.stdout.write(text)
        else:
            try:
                with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
                    handle.write(text)
            except OSError as exc:
                raise OSError(f"failed to write circuit to {args.out}: {exc}") from exc


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        _dispatch(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
