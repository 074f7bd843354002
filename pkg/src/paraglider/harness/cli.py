"""Command line entry point ``paraglider``.

Exit codes: 0 when every check passed, 1 when a campaign found violations,
2 for usage and input errors (bad graph6, non-member passed to ``color``).
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
from pathlib import Path

from ..errors import CertificateError, InputError
from . import campaigns

CONFIG_KEYS = {"jobs": int, "seed": int, "n_max": int, "json": bool, "trace": bool, "plot_dir": str}


def read_config(path: str) -> dict:
    """``key = value`` lines (``#`` comments allowed) for the global flags."""
    cp = configparser.ConfigParser()
    try:
        cp.read_string("[run]\n" + Path(path).read_text())
    except (OSError, configparser.Error) as e:
        raise InputError(f"cannot read config {path}: {e}") from None
    out = {}
    for key, raw in cp["run"].items():
        key = key.replace("-", "_")
        if key not in CONFIG_KEYS:
            raise InputError(f"unknown config key {key!r}")
        raw = raw.strip().strip('"')
        if CONFIG_KEYS[key] is bool:
            out[key] = raw.lower() in ("1", "true", "yes", "on")
        else:
            out[key] = CONFIG_KEYS[key](raw)
    return out


def build_parser(defaults: dict | None = None) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--n-max", dest="n_max", type=int, default=8)
    common.add_argument("--trace", action="store_true", help="include colouring traces")
    common.add_argument("--plot-dir", dest="plot_dir", default=None, help="write figures here")
    common.add_argument("--config", default=None, help="key=value file with defaults for these flags")
    common.set_defaults(**(defaults or {}))

    p = argparse.ArgumentParser(prog="paraglider", description="Colour and check (P5, paraglider)-free graphs.")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", parents=[common], help="membership, structure case and certificates")
    c.add_argument("inputs", nargs="*", help="graph6 strings or atlas:<tag>; stdin when empty")
    c = sub.add_parser("color", parents=[common], help="certified colouring")
    c.add_argument("inputs", nargs="*", help="graph6 strings or atlas:<tag>; stdin when empty")
    sub.add_parser("verify-base", parents=[common], help="exhaustive check of the Clebsch complement")
    c = sub.add_parser("sweep", parents=[common], help="check every free graph of a graph6 stream")
    c.add_argument("stream", nargs="?", help="graph6 file, '-' for stdin; default: vendored corpus up to --n-max")
    c.add_argument("--random", type=int, default=0, metavar="COUNT", help="sweep COUNT seeded random free graphs instead")
    c = sub.add_parser("family", parents=[common], help="table for the tightness graphs G_k")
    c.add_argument("--k-max", dest="k_max", type=int, default=9)
    c.add_argument("--oracle-max", dest="oracle_max", type=int, default=7)
    c = sub.add_parser("atlas", parents=[common], help="named graphs")
    c.add_argument("action", choices=["dump"])
    c.add_argument("tags", nargs="*")
    return p


def parse_args(argv) -> argparse.Namespace:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    defaults = read_config(known.config) if known.config else None
    return build_parser(defaults).parse_args(argv)


def _inputs(items: list[str]) -> list[str]:
    if items:
        return items
    return [ln.strip() for ln in sys.stdin if ln.strip().removeprefix(">>graph6<<")]


def run(args) -> int:
    if args.command == "atlas":
        for entry in campaigns.atlas_dump(args.tags):
            if args.json:
                print(json.dumps(entry))
            else:
                print(f"{entry['graph6']}\t{entry['tag']}")
        return 0
    if args.command == "check":
        rep = campaigns.cmd_check(_inputs(args.inputs))
        cols = ["input", "n", "member", "outcome", "certificate"]
    elif args.command == "color":
        rep = campaigns.cmd_color(_inputs(args.inputs), args.trace)
        cols = ["input", "n", "omega", "k", "bound"]
    elif args.command == "verify-base":
        rep = campaigns.cmd_verify_base()
        cols = None
    elif args.command == "sweep":
        if args.random:
            rep = campaigns.cmd_sweep_random(args.random, args.n_max, args.seed, args.jobs)
        elif args.stream is None:
            rep = campaigns.cmd_sweep(campaigns.corpus_lines(args.n_max), args.n_max, args.jobs)
        elif args.stream == "-":
            rep = campaigns.cmd_sweep(sys.stdin.readlines(), args.n_max, args.jobs)
        else:
            try:
                text = Path(args.stream).read_text()
            except OSError as e:
                raise InputError(str(e)) from None
            rep = campaigns.cmd_sweep(text.splitlines(), args.n_max, args.jobs)
        cols = ["line", "graph6", "status", "n", "omega", "chi", "k", "bound", "outcome"]
    else:
        rep = campaigns.cmd_family(args.k_max, args.oracle_max)
        cols = None
    if args.json:
        print(json.dumps(rep.to_json(), indent=1))
    else:
        print(rep.to_text(cols))
    if args.plot_dir:
        from .plots import render

        path = render(rep, args.plot_dir)
        if path is not None:
            print(f"figure: {path}", file=sys.stderr)
    return 0 if rep.ok else 1


def main(argv=None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        return run(args)
    except (InputError, CertificateError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
