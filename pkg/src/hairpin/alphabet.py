from __future__ import annotations

import dataclasses
import itertools
from collections.abc import Iterable, Iterator, Sequence

from .exceptions import InvalidInvolution, UndeclaredLetter
from .typing import Letter, Word


__all__ = ["InvolutiveAlphabet", "canonical_order"]


@dataclasses.dataclass(frozen=True)
class InvolutiveAlphabet:
	"""
	Finite alphabet equipped with an involution.

	Attributes:
		letters: Distinct printable tokens; the position of a token is its letter index.
		bar: ``bar[a]`` is the index of the partner of letter ``a``.

	Fixed points ``bar[a] == a`` are allowed.

	"""

	letters: tuple[str, ...]
	bar: tuple[Letter, ...]

	def __post_init__(self) -> None:
		self.check()

	@classmethod
	def from_pairs(cls, pairs: Iterable[Sequence[str]]) -> InvolutiveAlphabet:
		"""
		Build an alphabet from ``[x, bar(x)]`` pairs.

		Letters are numbered in order of first appearance.

		Raises:
			InvalidInvolution: If a pair conflicts with an earlier one.

		"""
		letters: list[str] = []
		partner: dict[str, str] = {}
		for pair in pairs:
			if len(pair) != 2:
				raise InvalidInvolution(str(pair), "expected a pair [letter, bar(letter)]")
			x, y = pair
			for token, image in ((x, y), (y, x)):
				known = partner.get(token)
				if known is None:
					partner[token] = image
					letters.append(token)
				elif known != image:
					raise InvalidInvolution(token, f"mapped to both {known!r} and {image!r}")
		index = {token: i for i, token in enumerate(letters)}
		return cls(tuple(letters), tuple(index[partner[token]] for token in letters))

	def check(self) -> None:
		"""
		Check that the alphabet is well-formed.

		Raises:
			InvalidInvolution: If ``bar`` isn't self-inverse or tokens are invalid.

		"""
		if len(self.letters) < 2:
			raise InvalidInvolution("".join(self.letters), "alphabet needs at least two letters")
		if len(set(self.letters)) != len(self.letters):
			raise InvalidInvolution(str(self.letters), "duplicate letters")
		if len(self.bar) != len(self.letters):
			raise InvalidInvolution(str(self.letters), "bar map must cover every letter")
		for a, token in enumerate(self.letters):
			if not token or not token.isascii() or not token.isprintable() or " " in token:
				raise InvalidInvolution(token, "letters are non-empty ASCII tokens without spaces")
			image = self.bar[a]
			if not 0 <= image < len(self.letters) or self.bar[image] != a:
				raise InvalidInvolution(token, "bar(bar(a)) must equal a")

	def __len__(self) -> int:
		return len(self.letters)

	def index(self, token: str, field: str = "word") -> Letter:
		"""
		Return the index of ``token``.

		Raises:
			UndeclaredLetter: If ``token`` isn't a letter of the alphabet.

		"""
		try:
			return self.letters.index(token)
		except ValueError:
			raise UndeclaredLetter(field, token) from None

	def bar_word(self, w: Word) -> Word:
		"""
		Return ``bar(w)``: the word reversed with every letter replaced by its partner.

		"""
		bar = self.bar
		return tuple(bar[a] for a in reversed(w))

	@property
	def compact(self) -> bool:
		"""Whether every token is a single character, so words render without separators."""
		return all(len(token) == 1 for token in self.letters)

	def parse(self, text: str, field: str = "word") -> Word:
		"""
		Parse a rendered word.

		Single-character alphabets accept ``"abA"``; other alphabets need
		whitespace-separated tokens.

		"""
		tokens = [c for c in text if not c.isspace()] if self.compact else text.split()
		return tuple(self.index(token, field) for token in tokens)

	def render(self, w: Word) -> str:
		separator = "" if self.compact else " "
		return separator.join(self.letters[a] for a in w)

	def words(self, max_len: int) -> Iterator[Word]:
		"""
		Yield all words of length at most ``max_len`` in canonical order.

		"""
		for length in range(max_len + 1):
			yield from itertools.product(range(len(self.letters)), repeat=length)


def canonical_order(words: Iterable[Word]) -> list[Word]:
	"""
	Sort words by length, then lexicographically on letter indices.

	"""
	return sorted(words, key=lambda w: (len(w), w))
