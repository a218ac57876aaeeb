from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hairpin.automata import (
	Dfa,
	Nfa,
	determinize,
	intersect,
	is_finite_language,
	product_states,
	reverse_complement_acceptor,
	shortest_word,
	subautomaton,
	trim,
	useful_states,
)
from hairpin.exceptions import IncompatibleAlphabets

from .utils import AB, TWO, make_dfa, random_dfa, universal


seeds = st.integers(min_value=0, max_value=2**32)


def dfas(alphabet=TWO, max_size=4):
	return st.tuples(seeds, st.integers(min_value=1, max_value=max_size)).map(
		lambda args: random_dfa(random.Random(args[0]), alphabet, args[1])
	)


def test_build_completes_with_sink():
	d = make_dfa(AB, 2, [(0, "a", 1)], [1])
	assert d.size == 3
	assert d.delta[0] == (1, 2, 2, 2)
	assert d.delta[2] == (2, 2, 2, 2)
	assert d.accepts(AB.parse("a"))
	assert not d.accepts(AB.parse("aa"))


def test_build_without_completion_keeps_size():
	d = make_dfa(TWO, 1, [(0, "a", 0), (0, "A", 0)], [0])
	assert d.size == 1


def test_build_rejects_nondeterminism():
	with pytest.raises(ValueError):
		make_dfa(AB, 2, [(0, "a", 1), (0, "a", 0)], [1])


def test_check_rejects_incomplete_rows():
	with pytest.raises(ValueError):
		Dfa(TWO, ((0,),), 0, frozenset())


def test_check_rejects_bad_initial():
	with pytest.raises(ValueError):
		Dfa(TWO, ((0, 0),), 1, frozenset())


def test_nfa_check_rejects_bad_arc():
	with pytest.raises(ValueError):
		Nfa(TWO, 1, frozenset({0}), frozenset(), frozenset({(0, 0, 1)}))


def test_empty_dfa():
	d = Dfa.empty(AB)
	assert d.size == 1
	assert list(d.words(4)) == []
	assert d.is_finite()


def test_step_trace_inverse():
	d = make_dfa(AB, 3, [(0, "a", 0), (0, "b", 1), (1, "A", 2)], [2])
	w = AB.parse("abA")
	assert d.step(0, w) == 2
	assert d.trace(0, w) == [0, 1, 2]
	assert d.inverse(AB.parse("bA"), 2) == frozenset({0})
	assert d.predecessors[0][0] == (0,)


@given(dfas())
def test_words_match_membership(d):
	assert set(d.words(6)) == {w for w in TWO.words(6) if d.accepts(w)}


@given(dfas())
def test_reverse_complement_acceptor(d):
	m = reverse_complement_acceptor(d.to_nfa())
	for w in TWO.words(6):
		assert m.accepts(w) == d.accepts(TWO.bar_word(w))


@given(dfas())
def test_determinize_preserves_language(d):
	m = reverse_complement_acceptor(d.to_nfa())
	determinized = determinize(m)
	for w in TWO.words(6):
		assert determinized.accepts(w) == m.accepts(w)


@given(dfas(), dfas())
def test_intersect(d1, d2):
	m = intersect(d1, d2.to_nfa())
	for w in TWO.words(6):
		assert m.accepts(w) == (d1.accepts(w) and d2.accepts(w))


def test_intersect_rejects_other_alphabet():
	with pytest.raises(IncompatibleAlphabets):
		intersect(universal(AB), universal(TWO).to_nfa())


@given(dfas())
def test_trim_preserves_language(d):
	m = trim(d.to_nfa())
	assert set(m.words(6)) == set(d.words(6))
	assert useful_states(m) == frozenset(range(m.size))


def test_finite_language():
	assert is_finite_language(make_dfa(AB, 4, [(0, "a", 1), (1, "b", 2), (2, "A", 3)], [3]).to_nfa())
	assert not is_finite_language(universal().to_nfa())
	# A cycle that can't reach a final state doesn't count.
	assert make_dfa(AB, 2, [(0, "a", 1)], [1]).is_finite()


def test_subautomaton_renumbers():
	m = Nfa(TWO, 3, frozenset({0}), frozenset({2}), frozenset({(0, 0, 2), (1, 0, 2)}))
	sub = subautomaton(m, {0, 2})
	assert sub.size == 2
	assert sub.arcs == frozenset({(0, 0, 1)})
	assert sub.finals == frozenset({1})


def test_product_states():
	d1 = make_dfa(TWO, 2, [(0, "a", 1), (1, "a", 0), (0, "A", 0), (1, "A", 1)], [])
	d2 = make_dfa(TWO, 2, [(0, "A", 1), (1, "A", 0), (0, "a", 0), (1, "a", 1)], [])
	assert product_states(d1, d2) == frozenset({(0, 0), (1, 0), (0, 1), (1, 1)})
	assert product_states(d1, d1) == frozenset({(0, 0), (1, 1)})


def test_shortest_word():
	d = make_dfa(AB, 3, [(0, "b", 1), (0, "a", 1), (1, "A", 2)], [2])
	m = d.to_nfa()
	assert shortest_word(m, (0,), {2}) == AB.parse("aA")
	assert shortest_word(m, (0,), {0}) == ()
	assert shortest_word(m, (2,), {0}) is None
