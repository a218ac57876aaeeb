"""
Hairpin completion by direct factorization scanning.

A word π belongs to the hairpin completion of ``(L1, L2)`` when it factors as
γαβᾱγ̄ with ``|α| ≥ κ`` and either γαβᾱ ∈ L1 or αβᾱγ̄ ∈ L2. Lengthening α
beyond κ only moves letters from α into β, so every scan here fixes ``|α| = κ``
and ranges over ``t = |γ|``.

"""

from __future__ import annotations

import dataclasses
import enum
from collections.abc import Iterator

from .alphabet import InvolutiveAlphabet
from .automata import Dfa
from .exceptions import IncompatibleAlphabets, InvalidKappa, LimitExceeded
from .limits import MAX_LEN
from .typing import Word


__all__ = [
	"HairpinInstance",
	"GammaAlphaSplit",
	"Side",
	"completions_of_word",
	"membership",
	"minimal_gamma_alpha_prefix",
	"oracle_hairpin_set",
	"check_length",
]


@dataclasses.dataclass(frozen=True)
class HairpinInstance:
	"""
	Input of every hairpin computation.

	Attributes:
		alphabet: Shared involutive alphabet.
		kappa: Minimum length of the bonding block α.
		dfa1: DFA accepting L1.
		dfa2: DFA accepting ``bar(L2) = {bar(w) : w ∈ L2}``.

	"""

	alphabet: InvolutiveAlphabet
	kappa: int
	dfa1: Dfa
	dfa2: Dfa

	def __post_init__(self) -> None:
		if isinstance(self.kappa, bool) or not isinstance(self.kappa, int) or self.kappa < 1:
			raise InvalidKappa(self.kappa)
		if self.dfa1.alphabet != self.alphabet or self.dfa2.alphabet != self.alphabet:
			raise IncompatibleAlphabets()

	def mirrored(self) -> HairpinInstance:
		"""
		Return the instance whose hairpin completion is ``bar(H)``.

		Swapping the automata turns ``(L1, L2)`` into ``(bar(L2), bar(L1))``.

		"""
		return dataclasses.replace(self, dfa1=self.dfa2, dfa2=self.dfa1)

	def in_l1(self, w: Word) -> bool:
		return self.dfa1.accepts(w)

	def in_l2(self, w: Word) -> bool:
		return self.dfa2.accepts(self.alphabet.bar_word(w))


@dataclasses.dataclass(frozen=True)
class GammaAlphaSplit:
	"""Minimal split of a hairpin word: γ is as short as possible and ``|α| = κ``."""

	gamma: Word
	alpha: Word


class Side(enum.Enum):
	"""Which end of a word extends into a hairpin completion."""

	RIGHT = "right"
	LEFT = "left"


def check_length(max_len: int, limit: int | None = None) -> None:
	"""
	Raises:
		LimitExceeded: If ``max_len`` is above the configured enumeration cap.

	"""
	limit = MAX_LEN if limit is None else limit
	if max_len > limit:
		raise LimitExceeded("max_len", max_len, limit)


def completions_of_word(w: Word, inst: HairpinInstance, side: Side) -> frozenset[Word]:
	"""
	Return every hairpin completion of a single word.

	On the right side ``w = γαβᾱ`` and the completions are ``w·bar(γ)``; on
	the left side ``w = αβᾱγ̄`` and the completions are ``γ·w``.

	"""
	bar_word = inst.alphabet.bar_word
	k = inst.kappa
	n = len(w)
	completions = set()
	if side is Side.RIGHT:
		tail = w[n - k :]
		for t in range(n - 2 * k + 1):
			if bar_word(w[t : t + k]) == tail:
				completions.add(w + bar_word(w[:t]))
	else:
		head = bar_word(w[:k])
		for t in range(n - 2 * k + 1):
			if w[n - t - k : n - t] == head:
				completions.add(bar_word(w[n - t :]) + w)
	return frozenset(completions)


def _splits(pi: Word, inst: HairpinInstance) -> Iterator[int]:
	"""
	Yield the values of ``|γ|``, in increasing order, for which π factors as
	γαβᾱγ̄ with ``|α| = κ``.

	Such a factorization exists iff the first ``t + κ`` letters of π and of
	``bar(π)`` agree, so the valid values form an initial segment.

	"""
	reverse = inst.alphabet.bar_word(pi)
	k = inst.kappa
	for t in range((len(pi) - 2 * k) // 2 + 1):
		if pi[: t + k] != reverse[: t + k]:
			return
		yield t


def _certified(pi: Word, t: int, inst: HairpinInstance) -> bool:
	n = len(pi)
	return inst.in_l1(pi[: n - t]) or inst.in_l2(pi[t:])


def membership(pi: Word, inst: HairpinInstance) -> bool:
	"""Decide whether π belongs to the hairpin completion."""
	return any(_certified(pi, t, inst) for t in _splits(pi, inst))


def minimal_gamma_alpha_prefix(pi: Word, inst: HairpinInstance) -> GammaAlphaSplit | None:
	"""
	Return the split of π with the shortest γ, or :obj:`None` if π isn't a
	hairpin word.

	For this split, no prefix of π longer than γαβᾱ lies in L1 and no suffix
	longer than αβᾱγ̄ lies in L2.

	"""
	for t in _splits(pi, inst):
		if _certified(pi, t, inst):
			return GammaAlphaSplit(pi[:t], pi[t : t + inst.kappa])
	return None


def oracle_hairpin_set(
	inst: HairpinInstance,
	max_len: int,
	limit: int | None = None,
) -> frozenset[Word]:
	"""
	Return the hairpin completion restricted to words of length ≤ ``max_len``.

	Words of L1 and L2 are enumerated from the automata and completed one by
	one; completions are never shorter than the word they extend.

	Raises:
		LimitExceeded: If ``max_len`` is above the enumeration cap.

	"""
	check_length(max_len, limit)
	bar_word = inst.alphabet.bar_word
	result: set[Word] = set()
	for w in inst.dfa1.words(max_len):
		result.update(pi for pi in completions_of_word(w, inst, Side.RIGHT) if len(pi) <= max_len)
	for u in inst.dfa2.words(max_len):
		w = bar_word(u)
		result.update(pi for pi in completions_of_word(w, inst, Side.LEFT) if len(pi) <= max_len)
	return frozenset(result)
