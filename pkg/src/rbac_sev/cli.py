"""Command-line front end; a thin client over the service layer.

Commands: validate, analyze, rank, explain, gen, dot. A path of ``-``
reads the policy from standard input, so commands compose in pipes
(``rbac-sev gen ... | rbac-sev analyze -``).

Exit status contract:
  0  success
  1  I/O error, syntax error, bad usage or generator parameters
  2  policy validation failure (diagnostics on standard error)
  3  unknown permission (explain)
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import service
from .errors import (
    InvalidParams,
    PolicySyntaxError,
    PolicyValidationError,
    UnknownPermission,
)
from .schemas import AnalyzeResponse, GenRequest


class _ArgumentParser(argparse.ArgumentParser):
    """argparse, but usage errors exit 1 (2 is taken by validation failures)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _precision(value: str) -> int:
    digits = int(value)
    if not 1 <= digits <= 12:
        raise argparse.ArgumentTypeError("precision must be between 1 and 12")
    return digits


def _add_io_flags(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--precision", type=_precision, default=None,
                       help="decimal places for severities (1-12, default 4)")
    group.add_argument("--exact", action="store_true",
                       help="print exact fractions instead of decimals")


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="rbac-sev",
        description="Severity levels of RBAC permissions from the role hierarchy.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a policy file, print a summary")
    p.add_argument("path", help="policy file or - for stdin")

    for name, help_text in (
        ("analyze", "rank permissions with carrier and level metadata"),
        ("rank", "rank permissions by severity"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("table", "csv", "json"), default="table")
        _add_io_flags(p)
        p.add_argument("path", help="policy file or - for stdin")

    p = sub.add_parser("explain", help="per-path severity breakdown of one permission")
    p.add_argument("--perm", required=True, help="permission id to explain")
    _add_io_flags(p)
    p.add_argument("path", help="policy file or - for stdin")

    p = sub.add_parser("gen", help="generate a random valid policy")
    p.add_argument("--roles", type=int, required=True)
    p.add_argument("--perms", type=int, required=True)
    p.add_argument("--max-children", type=int, default=4)
    p.add_argument("--max-leaf-perms", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("dot", help="export the hierarchy as Graphviz DOT")
    p.add_argument("--view", choices=("tree", "extended", "merged"), default="tree")
    p.add_argument("path", help="policy file or - for stdin")
    return parser


def _read_policy(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _print_diagnostics(diagnostics) -> None:
    for d in diagnostics:
        location = f":{d.line}" if d.line is not None else ""
        print(f"{d.code}{location}: {d.message}", file=sys.stderr)


def _severity_table(resp: AnalyzeResponse, args, metadata: bool) -> str:
    from .render import render_csv, render_table

    if metadata:
        header = ["permission", "severity", "num_roles", "min_level", "max_level"]
        rows = [
            [r.permission, r.severity_exact if args.exact else r.severity,
             str(r.num_roles), str(r.min_level), str(r.max_level)]
            for r in resp.permissions
        ]
    else:
        header = ["permission", "severity"]
        rows = [
            [r.permission, r.severity_exact if args.exact else r.severity]
            for r in resp.permissions
        ]
    if args.format == "csv":
        return render_csv(header, rows)
    return render_table(header, rows)


def _json_dump(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _run(args: argparse.Namespace) -> int:
    if args.command == "gen":
        try:
            request = GenRequest(
                roles=args.roles, perms=args.perms,
                max_children=args.max_children,
                max_leaf_perms=args.max_leaf_perms, seed=args.seed,
            )
        except ValueError as exc:
            print(f"rbac-sev: invalid parameters: {exc}", file=sys.stderr)
            return 1
        sys.stdout.write(service.generate(request))
        return 0

    text = _read_policy(args.path)

    if args.command == "validate":
        resp = service.validate_policy(text)
        _print_diagnostics(resp.diagnostics)
        if not resp.ok:
            return 1 if all(d.code == "syntax" for d in resp.diagnostics) else 2
        print(f"ok: {resp.roles} roles, {resp.permissions} permissions, depth {resp.depth}")
        return 0

    if args.command in ("analyze", "rank"):
        precision = args.precision if args.precision is not None else 4
        resp = service.analyze_policy(text, precision)
        if args.format == "json":
            if args.command == "analyze":
                payload = resp.model_dump()
            else:
                payload = {"permissions": [
                    {"permission": r.permission, "severity": r.severity,
                     "severity_exact": r.severity_exact}
                    for r in resp.permissions
                ]}
            sys.stdout.write(_json_dump(payload))
        else:
            sys.stdout.write(_severity_table(resp, args, metadata=args.command == "analyze"))
        return 0

    if args.command == "explain":
        precision = args.precision if args.precision is not None else 4
        resp = service.explain_permission(text, args.perm, precision)
        for path in resp.paths:
            value = path.product_exact if args.exact else path.product
            print(" -> ".join(path.roles) + f" : {value}")
        print(f"total : {resp.total_exact if args.exact else resp.total}")
        return 0

    if args.command == "dot":
        sys.stdout.write(service.policy_dot(text, args.view))
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args)
    except OSError as exc:
        print(f"rbac-sev: {exc}", file=sys.stderr)
        return 1
    except PolicySyntaxError as exc:
        _print_diagnostics(exc.diagnostics)
        return 1
    except PolicyValidationError as exc:
        _print_diagnostics(exc.diagnostics)
        return 2
    except UnknownPermission as exc:
        print(f"rbac-sev: {exc}", file=sys.stderr)
        return 3
    except InvalidParams as exc:
        print(f"rbac-sev: invalid parameters: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
