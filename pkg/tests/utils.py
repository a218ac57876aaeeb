from __future__ import annotations

import os
import random
from collections.abc import Iterable

from hairpin.alphabet import InvolutiveAlphabet
from hairpin.automata import Dfa
from hairpin.oracle import HairpinInstance
from hairpin.typing import Word


DATA = os.path.join(os.path.dirname(__file__), "data")


# Letters a, A, b, B get indices 0, 1, 2, 3; A is the partner of a.
AB = InvolutiveAlphabet.from_pairs([["a", "A"], ["b", "B"]])

# Two letters swapped by the involution.
TWO = InvolutiveAlphabet.from_pairs([["a", "A"]])


def data_file(name: str) -> str:
	return os.path.join(DATA, name)


def make_dfa(
	alphabet: InvolutiveAlphabet,
	size: int,
	arcs: Iterable[tuple[int, str, int]],
	finals: Iterable[int],
	initial: int = 0,
) -> Dfa:
	"""Build a DFA from arcs labeled with tokens; missing arcs go to a sink."""
	return Dfa.build(
		alphabet,
		size,
		[(p, alphabet.index(token), q) for p, token, q in arcs],
		initial,
		finals,
	)


def words(alphabet: InvolutiveAlphabet, *texts: str) -> set[Word]:
	return {alphabet.parse(text) for text in texts}


def running() -> HairpinInstance:
	"""L1 = a*(b|B)A and bar(L2) = a*BA, with states q0, p, f and the sink t."""
	l1 = make_dfa(AB, 3, [(0, "a", 0), (0, "b", 1), (0, "B", 1), (1, "A", 2)], [2])
	ov_l2 = make_dfa(AB, 3, [(0, "a", 0), (0, "B", 1), (1, "A", 2)], [2])
	return HairpinInstance(AB, 1, l1, ov_l2)


def running_closed_form(max_len: int) -> set[Word]:
	"""a+ b A+ together with a^i B A^j for i ≥ j ≥ 1."""
	a, big_a, b, big_b = range(4)
	result = set()
	for i in range(1, max_len):
		for j in range(1, max_len - i):
			result.add((a,) * i + (b,) + (big_a,) * j)
			if i >= j:
				result.add((a,) * i + (big_b,) + (big_a,) * j)
	return result


def single_word() -> HairpinInstance:
	"""L1 = {abA}, L2 empty."""
	l1 = make_dfa(AB, 4, [(0, "a", 1), (1, "b", 2), (2, "A", 3)], [3])
	return HairpinInstance(AB, 1, l1, Dfa.empty(AB))


def star_l1() -> HairpinInstance:
	"""L1 = a*bA, L2 empty."""
	l1 = make_dfa(AB, 3, [(0, "a", 0), (0, "b", 1), (1, "A", 2)], [2])
	return HairpinInstance(AB, 1, l1, Dfa.empty(AB))


def regular_pair() -> HairpinInstance:
	"""L1 = a*bA and bar(L2) = a+BA, so L2 = abA+; the completion is a+bA+."""
	l1 = make_dfa(AB, 3, [(0, "a", 0), (0, "b", 1), (1, "A", 2)], [2])
	ov_l2 = make_dfa(AB, 4, [(0, "a", 1), (1, "a", 1), (1, "B", 2), (2, "A", 3)], [3])
	return HairpinInstance(AB, 1, l1, ov_l2)


def pumping_pair() -> HairpinInstance:
	"""L1 = aa*A and bar(L2) = ba*B."""
	l1 = make_dfa(AB, 3, [(0, "a", 1), (1, "a", 1), (1, "A", 2)], [2])
	ov_l2 = make_dfa(AB, 3, [(0, "b", 1), (1, "a", 1), (1, "B", 2)], [2])
	return HairpinInstance(AB, 1, l1, ov_l2)


def exponential() -> HairpinInstance:
	"""L1 = a(a|b)*A, L2 empty."""
	l1 = make_dfa(AB, 3, [(0, "a", 1), (1, "a", 1), (1, "b", 1), (1, "A", 2)], [2])
	return HairpinInstance(AB, 1, l1, Dfa.empty(AB))


def branching_pair() -> HairpinInstance:
	"""L1 = bar(L2) = a(a|b)*A, so the γα prefixes include a(a|b)*a."""
	l1 = make_dfa(AB, 3, [(0, "a", 1), (1, "a", 1), (1, "b", 1), (1, "A", 2)], [2])
	return HairpinInstance(AB, 1, l1, l1)


def regular_closed_form(max_len: int) -> set[Word]:
	"""a+ b A+."""
	a, big_a, b, _ = range(4)
	return {
		(a,) * i + (b,) + (big_a,) * j for i in range(1, max_len) for j in range(1, max_len - i)
	}


def star_closed_form(max_len: int) -> set[Word]:
	"""a^i b A^j for i ≥ j ≥ 1."""
	a, big_a, b, _ = range(4)
	return {
		(a,) * i + (b,) + (big_a,) * j for i in range(1, max_len) for j in range(1, min(i, max_len - i - 1) + 1)
	}


def universal(alphabet: InvolutiveAlphabet = AB) -> Dfa:
	return Dfa(alphabet, ((0,) * len(alphabet),), 0, frozenset({0}))


def random_dfa(rng: random.Random, alphabet: InvolutiveAlphabet, size: int) -> Dfa:
	delta = tuple(tuple(rng.randrange(size) for _ in alphabet.letters) for _ in range(size))
	finals = frozenset(q for q in range(size) if rng.random() < 0.4)
	return Dfa(alphabet, delta, 0, finals)


def random_instance(seed: int, kappas: tuple[int, ...] = (1, 2)) -> HairpinInstance:
	"""Random instance with at most 4 states per DFA over 2 or 4 letters."""
	rng = random.Random(seed)
	alphabet = rng.choice([TWO, AB])
	d1 = random_dfa(rng, alphabet, rng.randint(1, 4))
	d2 = random_dfa(rng, alphabet, rng.randint(1, 4))
	return HairpinInstance(alphabet, rng.choice(kappas), d1, d2)


def sweep_length(alphabet: InvolutiveAlphabet) -> int:
	"""Length bound of exhaustive word sweeps."""
	return 7 if len(alphabet) <= 2 else 5


def enumeration_length(alphabet: InvolutiveAlphabet) -> int:
	"""Length bound of enumeration comparisons."""
	return 8 if len(alphabet) <= 2 else 6
