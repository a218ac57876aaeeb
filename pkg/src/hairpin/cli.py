"""
Command line interface.

Every subcommand reads one instance file and prints a JSON report, or the
words of the completion for ``enumerate``, on stdout. Diagnostics go to
stderr. The exit status is 0 on success, 2 for invalid input or exceeded
limits and 3 when a cross-check fails.

"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
from typing import Any

from .alphabet import canonical_order
from .bridges import build_bridge_nfa
from .decider import BOTH, Orientation, decide
from .exceptions import CrossCheckFailed, HairpinError, InvalidInstance, LimitExceeded
from .grammar import build_grammar, check_kappa, count_by_length, enumerate_grammar
from .instance_file import parse_instance
from .oracle import HairpinInstance, check_length
from .version import version as hairpin_version


__all__ = ["main"]


ORIENTATIONS = {
	"both": BOTH,
	"forward": (Orientation.FORWARD,),
	"mirrored": (Orientation.MIRRORED,),
}


def emit(report: Any) -> None:
	sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def write_text(path: str, text: str) -> None:
	if path == "-":
		sys.stdout.write(text)
		return
	with open(path, "w", encoding="utf-8") as handle:
		handle.write(text)


def run_decide(inst: HairpinInstance, args: argparse.Namespace) -> None:
	orientations = ORIENTATIONS[args.orientation]
	verdict = decide(inst, orientations, fast_path=not args.no_fast_path)
	if args.export_bridges is not None:
		write_text(args.export_bridges, build_bridge_nfa(orientations[0].orient(inst)).export())
	emit({"kappa": inst.kappa, **verdict.as_dict(inst.alphabet)})


def run_grammar(inst: HairpinInstance, args: argparse.Namespace) -> None:
	g = build_grammar(inst)
	if args.export is not None:
		write_text(args.export, g.export())
	emit(
		{
			"axioms": len(g.axioms),
			"nonterminals": len(g.nonterminals),
			"rules": len(g.rules),
			"counts": count_by_length(g, args.max_len),
		}
	)


def run_growth(inst: HairpinInstance, args: argparse.Namespace) -> None:
	from .growth import growth_report
	from .series import grammar_generating_function

	verdict = decide(inst, ORIENTATIONS[args.orientation], fast_path=not args.no_fast_path)
	report = growth_report(inst, verdict, args.tolerance)
	emit(
		{
			"verdict": verdict.verdict.value,
			"series": grammar_generating_function(build_grammar(inst)).as_dict(),
			**report.as_dict(),
		}
	)


def run_enumerate(inst: HairpinInstance, args: argparse.Namespace) -> None:
	check_length(args.max_len)
	words = canonical_order(enumerate_grammar(build_grammar(inst), args.max_len))
	sys.stdout.write("".join(inst.alphabet.render(w) + "\n" for w in words))


def run_check(inst: HairpinInstance, args: argparse.Namespace) -> None:
	from .checks import run_checks

	results = run_checks(inst, args.max_len, ORIENTATIONS[args.orientation], args.tolerance)
	emit({"max_len": args.max_len, "checks": results})
	failed = [name for name, ok in results.items() if not ok]
	if failed:
		raise CrossCheckFailed(failed)


COMMANDS = {
	"decide": run_decide,
	"grammar": run_grammar,
	"growth": run_growth,
	"enumerate": run_enumerate,
	"check": run_check,
}


def build_parser() -> argparse.ArgumentParser:
	parser = argparse.ArgumentParser(
		prog="hairpin",
		description="Regularity, grammar and growth of hairpin completions.",
	)
	parser.add_argument("--version", action="version", version=f"hairpin {hairpin_version}")

	common = argparse.ArgumentParser(add_help=False)
	common.add_argument("instance", metavar="<instance>", help="JSON instance file")
	common.add_argument("--kappa", type=int, help="override the minimum bonding length")
	common.add_argument("--max-len", type=int, default=8, help="length bound for words (default: 8)")
	common.add_argument("--tolerance", type=float, help="tolerance of growth comparisons")
	common.add_argument(
		"--no-fast-path",
		action="store_true",
		help="use the direct scans of the pumping tests",
	)
	common.add_argument("--orientation", choices=sorted(ORIENTATIONS), default="both")
	common.add_argument("-v", "--verbose", action="count", default=0)

	commands = parser.add_subparsers(dest="command", metavar="<command>", required=True)
	decide_parser = commands.add_parser("decide", parents=[common], help="decide regularity")
	decide_parser.add_argument("--export-bridges", metavar="<path>", help="write the bridge automaton")
	grammar_parser = commands.add_parser("grammar", parents=[common], help="build the linear grammar")
	grammar_parser.add_argument("--export", metavar="<path>", help="write the rules")
	commands.add_parser("growth", parents=[common], help="compare growth indicators")
	commands.add_parser("enumerate", parents=[common], help="list words up to --max-len")
	commands.add_parser("check", parents=[common], help="cross-validate every construction")
	return parser


def main(argv: list[str] | None = None) -> int:
	args = build_parser().parse_args(argv)
	level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
	logging.basicConfig(
		stream=sys.stderr,
		level=level,
		format="%(levelname)s %(name)s: %(message)s",
	)

	try:
		inst = parse_instance(args.instance)
		if args.kappa is not None:
			inst = dataclasses.replace(inst, kappa=args.kappa)
		check_kappa(inst.kappa)
		COMMANDS[args.command](inst, args)
	except (InvalidInstance, LimitExceeded) as exc:
		sys.stderr.write(f"error: {exc}\n")
		return 2
	except CrossCheckFailed as exc:
		sys.stderr.write(f"error: {exc}\n")
		return 3
	except HairpinError as exc:  # pragma: no cover
		sys.stderr.write(f"error: {exc}\n")
		return 1
	return 0
