from __future__ import annotations

import random

import pytest

from hairpin.automata import Dfa
from hairpin.bridges import build_bridge_nfa, extract_pair_languages
from hairpin.grammar import build_grammar, count_by_length
from hairpin.oracle import HairpinInstance
from hairpin.series import (
	RationalSeries,
	generating_function,
	grammar_generating_function,
	pair_series,
	transfer_series,
)

from .utils import AB, TWO, make_dfa, random_dfa, random_instance, universal


def count_words(d: Dfa, max_len: int) -> list[int]:
	"""Count accepted words per length by propagating path counts."""
	counts = [0] * d.size
	counts[d.initial] = 1
	result = []
	for _ in range(max_len + 1):
		result.append(sum(counts[q] for q in d.finals))
		following = [0] * d.size
		for p, row in enumerate(d.delta):
			for q in row:
				following[q] += counts[p]
		counts = following
	return result


def test_universal_language():
	assert generating_function(universal(TWO)) == RationalSeries((1,), (1, -2))


def test_empty_language():
	assert generating_function(Dfa.empty(AB)) == RationalSeries.zero()


def test_a_plus_b_abar_plus():
	# a+ b A+ has m - 2 words of length m ≥ 3: z³ / (1 - z)².
	d = make_dfa(AB, 4, [(0, "a", 1), (1, "a", 1), (1, "b", 2), (2, "A", 3), (3, "A", 3)], [3])
	series = generating_function(d)
	assert series == RationalSeries((0, 0, 0, 1), (1, -2, 1))
	assert series.coefficients(7) == [0, 0, 0, 1, 2, 3, 4]


@pytest.mark.parametrize("seed", range(40))
def test_coefficients_match_counts(seed):
	rng = random.Random(seed)
	alphabet = rng.choice([TWO, AB])
	d = random_dfa(rng, alphabet, rng.randint(1, 5))
	assert generating_function(d).coefficients(21) == count_words(d, 20)


def test_running_grammar_series(running_instance):
	g = build_grammar(running_instance)
	series = grammar_generating_function(g)
	assert series.coefficients(6)[3:] == [2, 3, 5]
	assert series.coefficients(21) == count_by_length(g, 20)


def test_single_word_grammar_series(single_word_instance):
	assert grammar_generating_function(build_grammar(single_word_instance)) == RationalSeries((0, 0, 0, 1), (1,))


def test_empty_grammar_series():
	inst = HairpinInstance(AB, 1, Dfa.empty(AB), Dfa.empty(AB))
	assert grammar_generating_function(build_grammar(inst)) == RationalSeries.zero()


@pytest.mark.parametrize("seed", range(40))
def test_grammar_series_matches_counts(seed):
	inst = random_instance(seed)
	g = build_grammar(inst)
	assert grammar_generating_function(g).coefficients(21) == count_by_length(g, 20)


def composed(inst: HairpinInstance, count: int) -> list[int]:
	total = [0] * count
	for pair in extract_pair_languages(build_bridge_nfa(inst), inst):
		for m, c in enumerate(pair_series(pair).coefficients(count)):
			total[m] += c
	return total


def test_pair_series_sum_to_grammar_series(running_instance):
	series = grammar_generating_function(build_grammar(running_instance))
	assert composed(running_instance, 17) == series.coefficients(17)


@pytest.mark.parametrize("seed", range(0, 200, 5))
def test_pair_series_sum_on_random_instances(seed):
	inst = random_instance(seed)
	series = grammar_generating_function(build_grammar(inst))
	assert composed(inst, 17) == series.coefficients(17)


def test_arithmetic():
	one_over = RationalSeries((1,), (1, -1))
	assert (one_over + one_over) == RationalSeries((2,), (1, -1))
	assert (one_over * one_over).coefficients(4) == [1, 2, 3, 4]
	assert one_over.at_square().coefficients(5) == [1, 0, 1, 0, 1]


def test_normalization():
	# (1 - z) / (1 - z²) reduces to 1 / (1 + z).
	series = RationalSeries.from_polys(*RationalSeries((1, -1), (1, 0, -1)).polys)
	assert series == RationalSeries((1,), (1, 1))
	flipped = RationalSeries.from_polys(*RationalSeries((-1,), (-1, 1)).polys)
	assert flipped.denominator[0] > 0


def test_non_integer_coefficients():
	with pytest.raises(ValueError):
		RationalSeries((1,), (2,)).coefficients(1)


def test_zero_denominator():
	with pytest.raises(ValueError):
		RationalSeries((1,), (0, 1))


def test_transfer_series_with_cycle():
	# X0 = z X1, X1 = 1 + z X0: X0 = z / (1 - z²).
	series = transfer_series(2, [(0, 1, 1), (1, 0, 1)], {1: 1}, [0])
	assert series == RationalSeries((0, 1), (1, 0, -1))


def test_str():
	assert str(RationalSeries((0, 1), (1, -1))) == "(z) / (1 - z)"
	assert RationalSeries((0, 1), (1, -1)).as_dict() == {"numerator": [0, 1], "denominator": [1, -1]}
