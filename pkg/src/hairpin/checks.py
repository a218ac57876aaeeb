"""
Cross-validation of every construction against brute force.

Each check compares two independent computations on words up to a length
bound and reports a boolean under a stable name.

"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from .bridges import PairLanguage, build_bridge_nfa, extract_pair_languages, unique_path_check
from .decider import BOTH, Orientation, RegularityVerdict, decide, validate_witness
from .grammar import build_grammar, count_by_length, count_derivations, enumerate_grammar
from .oracle import HairpinInstance, check_length, oracle_hairpin_set
from .typing import LoggerLike, Word


__all__ = ["CHECKS", "pair_words", "run_checks"]


CHECKS = (
	"oracle_vs_grammar",
	"counts",
	"unambiguous",
	"decomposition",
	"unique_paths",
	"fast_path",
	"orientation_symmetry",
	"witness",
	"growth_bounds",
	"growth_identity",
	"series",
)


def pair_words(pair: PairLanguage, max_len: int) -> set[Word]:
	"""Return the words ``v β bar(v)`` of a pair language of length at most ``max_len``."""
	bar_word = pair.r_language.alphabet.bar_word
	betas = list(pair.b_language.words(max_len))
	words = set()
	for v in pair.r_language.words(max_len // 2):
		room = max_len - 2 * len(v)
		words.update(v + beta + bar_word(v) for beta in betas if len(beta) <= room)
	return words


def _same_decision(left: RegularityVerdict, right: RegularityVerdict) -> bool:
	return (left.verdict, left.fired, left.orientation, left.witness) == (
		right.verdict,
		right.fired,
		right.orientation,
		right.witness,
	)


def run_checks(
	inst: HairpinInstance,
	max_len: int,
	orientations: Sequence[Orientation] = BOTH,
	tolerance: float | None = None,
	logger: LoggerLike | None = None,
) -> dict[str, bool]:
	"""
	Run every cross-check on ``inst`` and return the outcome per check name.

	Raises:
		LimitExceeded: If ``max_len`` is above the enumeration cap.

	"""
	if logger is None:
		logger = logging.getLogger("hairpin.checks")
	check_length(max_len)
	# Imported here so that deciding doesn't load numpy and sympy.
	from .growth import growth_report
	from .series import grammar_generating_function, pair_series

	results: dict[str, bool] = {}
	expected = oracle_hairpin_set(inst, max_len)
	g = build_grammar(inst, logger=logger)
	generated = enumerate_grammar(g, max_len)
	results["oracle_vs_grammar"] = generated == expected

	counts = count_by_length(g, max_len)
	oracle_counts = [0] * (max_len + 1)
	for w in expected:
		oracle_counts[len(w)] += 1
	results["counts"] = counts == oracle_counts
	results["unambiguous"] = all(count_derivations(g, w) == 1 for w in expected)

	a = build_bridge_nfa(inst, logger=logger)
	pairs = extract_pair_languages(a, inst)
	union: set[Word] = set()
	total = 0
	for pair in pairs:
		words = pair_words(pair, max_len)
		union |= words
		total += len(words)
	results["decomposition"] = union == expected and total == len(union)

	path_len = min(max_len, 6 if len(inst.alphabet) <= 2 else 4)
	results["unique_paths"] = unique_path_check(a, inst.alphabet.words(path_len))

	verdict = decide(inst, orientations, logger=logger)
	results["fast_path"] = _same_decision(verdict, decide(inst, orientations, fast_path=False, logger=logger))
	results["orientation_symmetry"] = (
		decide(inst, logger=logger).verdict is decide(inst.mirrored(), logger=logger).verdict
	)
	results["witness"] = validate_witness(verdict, inst)

	report = growth_report(inst, verdict, tolerance, logger=logger)
	results["growth_bounds"] = report.bounds_ok and report.regular_equality_ok is not False
	results["growth_identity"] = report.identity_ok

	series = grammar_generating_function(g)
	composed = [0] * (max_len + 1)
	for pair in pairs:
		for m, c in enumerate(pair_series(pair).coefficients(max_len + 1)):
			composed[m] += c
	results["series"] = series.coefficients(max_len + 1) == counts == composed

	for name, ok in results.items():
		if not ok:
			logger.error("check %s failed", name)
	return results
