from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hairpin.alphabet import InvolutiveAlphabet, canonical_order
from hairpin.exceptions import InvalidInvolution, UndeclaredLetter

from .utils import AB, TWO


words = st.lists(st.integers(min_value=0, max_value=3), max_size=12).map(tuple)


def test_from_pairs_numbers_letters_in_order():
	assert AB.letters == ("a", "A", "b", "B")
	assert AB.bar == (1, 0, 3, 2)


def test_from_pairs_accepts_fixed_points():
	alphabet = InvolutiveAlphabet.from_pairs([["c", "c"], ["a", "A"]])
	assert alphabet.letters == ("c", "a", "A")
	assert alphabet.bar == (0, 2, 1)


def test_from_pairs_rejects_conflicts():
	with pytest.raises(InvalidInvolution):
		InvolutiveAlphabet.from_pairs([["a", "b"], ["b", "a"], ["a", "a"]])


def test_from_pairs_rejects_triples():
	with pytest.raises(InvalidInvolution):
		InvolutiveAlphabet.from_pairs([["a", "A", "b"]])


def test_check_rejects_non_involution():
	with pytest.raises(InvalidInvolution):
		InvolutiveAlphabet(("a", "b", "c"), (1, 2, 0))


def test_check_rejects_single_letter():
	with pytest.raises(InvalidInvolution):
		InvolutiveAlphabet(("a",), (0,))


def test_index_of_undeclared_letter():
	with pytest.raises(UndeclaredLetter) as raised:
		AB.index("c", "dfa_L1.transitions[0]")
	assert raised.value.field == "dfa_L1.transitions[0]"


def test_bar_word():
	assert AB.render(AB.bar_word(AB.parse("abA"))) == "aBA"
	assert AB.bar_word(()) == ()


@given(words)
def test_bar_word_is_involutive(w):
	assert AB.bar_word(AB.bar_word(w)) == w


@given(words, words)
def test_bar_word_is_antimorphic(u, v):
	assert AB.bar_word(u + v) == AB.bar_word(v) + AB.bar_word(u)


def test_multi_character_tokens():
	alphabet = InvolutiveAlphabet.from_pairs([["ab", "ba"], ["c", "c"]])
	assert not alphabet.compact
	w = alphabet.parse("ab c ba")
	assert w == (0, 2, 1)
	assert alphabet.render(w) == "ab c ba"


def test_compact_parse_ignores_whitespace():
	assert AB.parse("a b A") == (0, 2, 1)
	assert AB.compact


def test_words_in_canonical_order():
	listed = list(TWO.words(2))
	assert listed == [(), (0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1)]


def test_canonical_order():
	assert canonical_order([(1, 0), (0,), (0, 1), ()]) == [(), (0,), (0, 1), (1, 0)]
