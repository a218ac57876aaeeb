from __future__ import annotations

import logging
import math
import random

import pytest

from hairpin.automata import Dfa
from hairpin.decider import decide
from hairpin.growth import (
	Formable,
	GrowthClass,
	GrowthKind,
	growth_indicator,
	growth_report,
	hairpin_pattern,
	prefix_closure,
	restrict_hairpin_formable,
)
from hairpin.exceptions import LimitExceeded

from .utils import AB, TWO, make_dfa, random_dfa, random_instance, universal


def test_universal_language():
	growth = growth_indicator(universal(AB))
	assert growth.kind is GrowthKind.EXPONENTIAL
	assert growth.indicator == pytest.approx(4.0, abs=1e-9)
	assert growth.converged


def test_polynomial_language():
	d = make_dfa(AB, 4, [(0, "a", 1), (1, "a", 1), (1, "b", 2), (2, "A", 3), (3, "A", 3)], [3])
	assert growth_indicator(d) == GrowthClass(GrowthKind.POLYNOMIAL, 1.0)


def test_finite_language(single_word_instance):
	assert growth_indicator(single_word_instance.dfa1) == GrowthClass(GrowthKind.FINITE, 0.0)
	assert growth_indicator(Dfa.empty(AB)).kind is GrowthKind.FINITE


def test_golden_ratio():
	# Words over {a, A} without two consecutive A.
	d = make_dfa(TWO, 2, [(0, "a", 0), (0, "A", 1), (1, "a", 0)], [0, 1])
	growth = growth_indicator(d)
	assert growth.indicator == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-9)


def test_exact_tolerance():
	growth = growth_indicator(universal(AB), tolerance=0.0)
	assert growth == GrowthClass(GrowthKind.EXPONENTIAL, 4.0, 0.0, True)


def test_iteration_cap(caplog):
	d = make_dfa(TWO, 2, [(0, "a", 0), (0, "A", 1), (1, "a", 0)], [0, 1])
	with caplog.at_level(logging.WARNING, logger="hairpin.growth"):
		growth = growth_indicator(d, max_iterations=1)
	assert not growth.converged
	assert growth.tolerance > 1e-9
	assert "power iteration" in caplog.text


def test_growth_class_check():
	with pytest.raises(ValueError):
		GrowthClass(GrowthKind.FINITE, 1.0)
	with pytest.raises(ValueError):
		GrowthClass(GrowthKind.POLYNOMIAL, 2.0)
	with pytest.raises(ValueError):
		GrowthClass(GrowthKind.EXPONENTIAL, 0.5)


def matches_pattern(w, kappa, side):
	bar_word = TWO.bar_word
	n = len(w)
	for i in range(n - 2 * kappa + 1):
		alpha = w[i : i + kappa]
		if side is Formable.PREFIX:
			if w[n - kappa :] == bar_word(alpha) and i + kappa <= n - kappa:
				return True
		elif i == 0:
			rest = w[kappa:]
			closing = bar_word(alpha)
			if any(rest[j : j + kappa] == closing for j in range(len(rest) - kappa + 1)):
				return True
	return False


def test_prefix_pattern_examples():
	d = restrict_hairpin_formable(universal(TWO), 1, Formable.PREFIX)
	assert d.accepts(TWO.parse("aA"))
	assert not d.accepts(TWO.parse("aa"))
	assert not d.accepts(TWO.parse("a"))


@pytest.mark.parametrize("side", list(Formable))
@pytest.mark.parametrize("kappa", [1, 2])
def test_pattern_by_brute_force(side, kappa):
	m = hairpin_pattern(TWO, kappa, side)
	for w in TWO.words(7):
		assert m.accepts(w) == matches_pattern(w, kappa, side)


def test_restrict_empty_language():
	assert not list(restrict_hairpin_formable(Dfa.empty(AB), 1).words(6))


def test_restrict_kappa_cap():
	with pytest.raises(LimitExceeded):
		restrict_hairpin_formable(universal(TWO), 5)


def test_restrict_running(running_instance):
	d = restrict_hairpin_formable(running_instance.dfa1, 1)
	# a*(b|B)A loses bA and BA, which don't start with a.
	expected = {w for w in running_instance.dfa1.words(6) if w[0] == 0}
	assert set(d.words(6)) == expected


def test_prefix_closure():
	d = make_dfa(AB, 3, [(0, "a", 1), (1, "b", 2)], [2])
	assert set(prefix_closure(d).words(4)) == {(), (0,), (0, 2)}
	assert not list(prefix_closure(Dfa.empty(AB)).words(4))


@pytest.mark.parametrize("seed", range(30))
def test_prefix_closure_keeps_growth(seed):
	rng = random.Random(seed)
	d = random_dfa(rng, rng.choice([TWO, AB]), 4)
	before, after = growth_indicator(d), growth_indicator(prefix_closure(d))
	assert before.kind is after.kind
	assert after.indicator == pytest.approx(before.indicator, abs=1e-6)


def test_running_report(running_instance):
	report = growth_report(running_instance, decide(running_instance))
	assert report.lam.indicator == 1
	assert report.eta.indicator == 1
	assert report.bounds_ok
	assert report.identity_ok
	assert report.regular_equality_ok is None


def test_regular_report(regular_instance):
	report = growth_report(regular_instance, decide(regular_instance))
	assert report.lam.indicator == 1
	assert report.eta.indicator == 1
	assert report.regular_equality_ok is True


def test_exponential_report(exponential_instance):
	report = growth_report(exponential_instance)
	assert report.lam.indicator == pytest.approx(2.0, abs=1e-6)
	assert math.sqrt(2) - 1e-6 <= report.eta.indicator <= 2 + 1e-6
	assert report.bounds_ok
	assert report.identity_ok
	assert report.raw_l2.kind is GrowthKind.FINITE


def test_report_as_dict(running_instance):
	report = growth_report(running_instance).as_dict()
	assert report["lambda"]["class"] == "polynomial"
	assert report["pairs"]
	assert set(report["pairs"][0]) == {"initial", "final", "sigma", "rho", "tau"}


def test_eta_is_largest_pair_growth(running_instance):
	report = growth_report(running_instance)
	assert report.eta.indicator == max(pair.tau for pair in report.pairs)


@pytest.mark.parametrize("seed", range(200))
def test_growth_bounds(seed):
	inst = random_instance(seed)
	verdict = decide(inst)
	report = growth_report(inst, verdict)
	assert report.bounds_ok
	assert report.identity_ok
	assert report.regular_equality_ok is not False


@pytest.mark.parametrize("seed", range(0, 200, 10))
def test_rho_against_determinized(seed):
	from hairpin.automata import determinize
	from hairpin.bridges import build_bridge_nfa, extract_pair_languages

	inst = random_instance(seed)
	for pair in extract_pair_languages(build_bridge_nfa(inst), inst):
		direct = growth_indicator(pair.r_language)
		determinized = growth_indicator(determinize(pair.r_language))
		assert direct.kind is determinized.kind
		assert direct.indicator == pytest.approx(determinized.indicator, abs=1e-6)
