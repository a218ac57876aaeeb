from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Any, Union


__all__ = [
	"Letter",
	"State",
	"Word",
	"Quad",
	"LoggerLike",
]


# Public types used in the signature of public APIs

Letter = int
"""Index of a letter in an :class:`~hairpin.alphabet.InvolutiveAlphabet`."""


State = int
"""Numeric state of an automaton; states of an automaton are ``0..n-1``."""


Word = tuple[int, ...]
"""Sequence of letter indices. The empty tuple is the empty word."""


Quad = tuple[int, int, int, int]
"""State quadruple ``(p1, p2, q1, q2)``: ``p1, q1`` belong to the first DFA,
``p2, q2`` to the second one."""


# Change to logging.Logger | ... when dropping Python < 3.10.
if TYPE_CHECKING:
	LoggerLike = Union[logging.Logger, logging.LoggerAdapter[Any]]
	"""Types accepted where a :class:`~logging.Logger` is expected."""
else:  # remove this branch when dropping support for Python < 3.11
	LoggerLike = Union[logging.Logger, logging.LoggerAdapter]
	"""Types accepted where a :class:`~logging.Logger` is expected."""
