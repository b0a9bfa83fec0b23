"""render_figs --csv FILE --kind qubits|epsilon --out FILE.svg"""

from __future__ import annotations

import argparse
import sys

from .errors import DomainError, SchemaError
from .render import render
from .series import KINDS


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="render_figs", description=__doc__)
    parser.add_argument("--csv", required=True, help="sweep CSV from the wsl harness")
    parser.add_argument("--kind", required=True, choices=KINDS)
    parser.add_argument("--out", required=True, help="output SVG path")
    args = parser.parse_args(argv)
    try:
        render(args.csv, args.kind, args.out)
    except (DomainError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
