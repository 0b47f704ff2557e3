#!env python3
# AUTHOR INFORMATION ##########################################################
# file    : cli.py
# brief   : radmax command line interface
#
# author  : radmax contributors
# created : 2026-09-22 17:20:48
# changed : 2026-10-18 19:02:33
# DESCRIPTION #################################################################
#
# This project is following the PEP8 style guide:
#
#    https://www.python.org/dev/peps/pep-0008/)
#
# COPYRIGHT ###################################################################
# Copyright 2026 radmax contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
###############################################################################

# REQUIRED PYTHON MODULES #####################################################
import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Optional

from radmax import config
from radmax.constructions import ConstructionParams, build_radially_maximal
from radmax.exceptions import DisconnectedGraphError, NotRadiallyMaximalError, RadmaxError
from radmax.graphs import FORMATS, Graph, dumps, from_dot, from_edgelist, from_graph6, parse_graph
from radmax.maximality import (
    certificate,
    find_counterexample_edge,
    radial_saturation,
    verify_H_witnesses,
)
from radmax.search import check_bound_upto, min_order_nonselfcentered
from radmax.util import construction_dot

logger = logging.getLogger("radmax")

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2

_READERS = {"graph6": from_graph6, "dot": from_dot, "edgelist": from_edgelist}


@dataclass
class CommandOutcome:
    """
    Exit code (0 claim holds, 1 claim refuted, 2 usage or infeasibility
    error) and the text written to standard output.
    """

    code: int
    payload: str = ""


# function definitions ########################################################
def _read_graph(source: str, fmt: Optional[str] = None) -> Graph:
    if source == "-":
        text = sys.stdin.read()
    elif os.path.isfile(source):
        with open(source, "r") as f:
            text = f.read()
    else:
        text = source
    if fmt is None:
        return parse_graph(text)
    return _READERS[fmt](text)


def construct(args: argparse.Namespace) -> CommandOutcome:
    params = ConstructionParams(args.r, args.d, args.n)
    c = build_radially_maximal(params)
    if args.format == "dot":
        payload = construction_dot(c)
    else:
        payload = dumps(c.graph, args.format)
    sidecar = json.dumps(c.summary(), indent=2) + "\n"
    if args.sidecar:
        with open(args.sidecar, "w") as f:
            f.write(sidecar)
    else:
        sys.stderr.write(sidecar)
    return CommandOutcome(EXIT_OK, payload)


def verify(args: argparse.Namespace) -> CommandOutcome:
    g = _read_graph(args.graph, args.input_format)
    if not g.is_connected():
        raise DisconnectedGraphError(
            "graph is disconnected: its radius is infinite, so radial "
            "maximality is undefined"
        )
    if g.is_complete():
        logger.warning("complete graphs are not radially maximal")
        return CommandOutcome(EXIT_REFUTED)
    if args.certificate:
        try:
            cert = certificate(g)
        except NotRadiallyMaximalError as e:
            logger.warning("%s", e)
            return CommandOutcome(EXIT_REFUTED)
        return CommandOutcome(EXIT_OK, cert.to_json(indent=2) + "\n")
    edge = find_counterexample_edge(g)
    if edge is not None:
        logger.warning("adding %d-%d keeps the radius", *edge)
        return CommandOutcome(EXIT_REFUTED)
    return CommandOutcome(EXIT_OK)


def search(args: argparse.Namespace) -> CommandOutcome:
    if args.shard is not None and not 0 <= args.shard < args.shards:
        raise RadmaxError(f"--shard {args.shard} outside 0..{args.shards - 1}")
    kwargs = dict(
        shards=args.shards,
        shard=args.shard,
        workers=args.workers,
        collect_witnesses=not args.no_witnesses,
    )
    if args.radius is None:
        report = check_bound_upto(args.order, **kwargs)
    else:
        report = min_order_nonselfcentered(args.radius, args.order, **kwargs)
    code = EXIT_OK if report.holds else EXIT_REFUTED
    return CommandOutcome(code, report.to_json(indent=2) + "\n")


def convert(args: argparse.Namespace) -> CommandOutcome:
    g = _read_graph(args.graph, args.input_format)
    return CommandOutcome(EXIT_OK, dumps(g, args.to))


def saturate(args: argparse.Namespace) -> CommandOutcome:
    g = _read_graph(args.graph, args.input_format)
    return CommandOutcome(EXIT_OK, dumps(radial_saturation(g), args.format))


def witnesses(args: argparse.Namespace) -> CommandOutcome:
    report = verify_H_witnesses(args.r, args.d)
    code = EXIT_OK if report.passed else EXIT_REFUTED
    return CommandOutcome(code, report.to_json(indent=2) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radmax",
        description="Construct and verify radially maximal graphs.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="more log output on stderr"
    )
    parser.add_argument(
        "--max-order", type=int, default=None, help="override RADMAX_MAX_ORDER"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a graph of radius r, diameter d, order n")
    p.add_argument("-r", type=int, required=True, help="radius")
    p.add_argument("-d", type=int, required=True, help="diameter")
    p.add_argument("-n", type=int, required=True, help="order")
    p.add_argument("--format", choices=FORMATS, default="graph6")
    p.add_argument("--sidecar", help="write the JSON label map here (default: stderr)")
    p.set_defaults(func=construct)

    p = sub.add_parser("verify", help="decide radial maximality")
    p.add_argument("graph", help="graph6 string, file path or - for stdin")
    p.add_argument("--from", dest="input_format", choices=FORMATS, default=None)
    p.add_argument("--certificate", action="store_true", help="print the JSON certificate")
    p.set_defaults(func=verify)

    p = sub.add_parser("search", help="exhaustive search over labeled graphs")
    p.add_argument("--order", type=int, required=True, help="largest order searched")
    p.add_argument(
        "--radius",
        type=int,
        default=None,
        help="count non-self-centered radially maximal graphs of this radius",
    )
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--shard", type=int, default=None, help="run only this shard")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--no-witnesses", action="store_true", help="skip witness collection")
    p.set_defaults(func=search)

    p = sub.add_parser("convert", help="convert between graph6, DOT and edge lists")
    p.add_argument("graph", help="input graph, file path or - for stdin")
    p.add_argument("--from", dest="input_format", choices=FORMATS, default=None)
    p.add_argument("--to", choices=FORMATS, required=True)
    p.set_defaults(func=convert)

    p = sub.add_parser("saturate", help="radially maximal supergraph with the same radius")
    p.add_argument("graph", help="input graph, file path or - for stdin")
    p.add_argument("--from", dest="input_format", choices=FORMATS, default=None)
    p.add_argument("--format", choices=FORMATS, default="graph6")
    p.set_defaults(func=saturate)

    p = sub.add_parser("witnesses", help="check the central vertex facts of H(r,d)")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(func=witnesses)
    return parser


def run(argv: Optional[List[str]] = None) -> CommandOutcome:
    """
    Parses the arguments and runs the command. Library and file errors
    become exit code 2 with the message on stderr.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return CommandOutcome(EXIT_USAGE if e.code else EXIT_OK)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )
    try:
        if args.max_order is not None:
            config.set_max_order(args.max_order)
        return args.func(args)
    except (RadmaxError, ValueError, OSError) as e:
        sys.stderr.write(f"radmax {args.command}: {e}\n")
        return CommandOutcome(EXIT_USAGE)
    finally:
        config.reset()


def main(argv: Optional[List[str]] = None) -> int:
    outcome = run(argv)
    sys.stdout.write(outcome.payload)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
