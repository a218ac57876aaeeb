from __future__ import annotations

import pytest

from hairpin.automata import Dfa
from hairpin.exceptions import LimitExceeded
from hairpin.grammar import (
	Kind,
	NonterminalId,
	build_grammar,
	check_kappa,
	count_by_length,
	count_derivations,
	enumerate_grammar,
)
from hairpin.oracle import HairpinInstance, oracle_hairpin_set

from .utils import AB, enumeration_length, running_closed_form, random_instance, sweep_length, words


def test_running_language(running_instance):
	g = build_grammar(running_instance)
	assert enumerate_grammar(g, 8) == running_closed_form(8)


def test_running_counts(running_instance):
	g = build_grammar(running_instance)
	assert count_by_length(g, 5) == [0, 0, 0, 2, 3, 5]


def test_running_derivations(running_instance):
	g = build_grammar(running_instance)
	assert count_derivations(g, AB.parse("aaBAA")) == 1
	assert count_derivations(g, AB.parse("aabAAA")) == 1
	assert count_derivations(g, AB.parse("aBAA")) == 0
	assert count_derivations(g, ()) == 0


def test_single_word(single_word_instance):
	g = build_grammar(single_word_instance)
	assert enumerate_grammar(g, 6) == words(AB, "abA")
	assert count_by_length(g, 5) == [0, 0, 0, 1, 0, 0]


def test_empty_instance():
	inst = HairpinInstance(AB, 1, Dfa.empty(AB), Dfa.empty(AB))
	g = build_grammar(inst)
	assert g.axioms == ()
	assert g.rules == ()
	assert count_by_length(g, 4) == [0] * 5


def test_axioms_and_rules_are_sorted(running_instance):
	g = build_grammar(running_instance)
	assert list(g.axioms) == sorted(g.axioms)
	assert all(axiom.kind is Kind.R for axiom in g.axioms)
	keys = [rule.sort_key() for rule in g.rules]
	assert keys == sorted(keys)


def test_grammar_is_trim(running_instance):
	g = build_grammar(running_instance)
	for rule in g.rules:
		if rule.body is not None:
			assert rule.body in g.nonterminals


def test_export(running_instance):
	text = build_grammar(running_instance).export()
	lines = text.splitlines()
	assert lines[0].startswith("# axioms: R(0,0,")
	assert any(line.endswith("-> 1") for line in lines)
	assert text == build_grammar(running_instance).export()


def test_nonterminal_str():
	assert str(NonterminalId(Kind.B, 1, 2, 3, 0)) == "B(1,2,3,0)"


def test_kappa_cap():
	check_kappa(4)
	with pytest.raises(LimitExceeded):
		check_kappa(5)
	with pytest.raises(LimitExceeded):
		check_kappa(3, limit=2)


def test_enumeration_cap(running_instance):
	with pytest.raises(LimitExceeded):
		enumerate_grammar(build_grammar(running_instance), 15)


@pytest.mark.parametrize("seed", range(200))
def test_grammar_matches_oracle(seed):
	inst = random_instance(seed)
	g = build_grammar(inst)
	bound = enumeration_length(inst.alphabet)
	expected = oracle_hairpin_set(inst, bound)
	assert enumerate_grammar(g, bound) == expected
	counts = [0] * (bound + 1)
	for w in expected:
		counts[len(w)] += 1
	assert count_by_length(g, bound) == counts


@pytest.mark.parametrize("seed", range(200))
def test_grammar_is_unambiguous(seed):
	inst = random_instance(seed)
	g = build_grammar(inst)
	# Words outside the completion have no derivation, see test_grammar_matches_oracle.
	for w in enumerate_grammar(g, sweep_length(inst.alphabet)):
		assert count_derivations(g, w) == 1
