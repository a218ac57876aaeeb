"""
JSON instance files.

An instance file looks like::

	{
		"alphabet": [["a", "A"], ["b", "B"]],
		"kappa": 1,
		"dfa_L1": {
			"states": 3,
			"initial": 0,
			"finals": [2],
			"transitions": [[0, "a", 0], [0, "b", 1], [1, "A", 2]]
		},
		"dfa_ovL2": {...}
	}

``dfa_ovL2`` is a DFA accepting ``bar(L2)``. It may be replaced by
``nfa_L2``, an NFA accepting L2 itself with ``initials`` instead of
``initial``, or left out when L2 is empty. Missing transitions of a DFA go
to a fresh sink state.

"""

from __future__ import annotations

import json
import logging
import os
from typing import Any

from .alphabet import InvolutiveAlphabet
from .automata import Dfa, Nfa, determinize, reverse_complement_acceptor
from .exceptions import InvalidKappa, MalformedInstance
from .oracle import HairpinInstance
from .typing import LoggerLike


__all__ = ["parse_instance", "parse_instance_text", "dump_instance"]


KEYS = {"description", "alphabet", "kappa", "dfa_L1", "dfa_ovL2", "nfa_L2"}


class _Reader:
	"""Validates one decoded document and reports errors with their field path."""

	def __init__(self, source: str, logger: LoggerLike) -> None:
		self.source = source
		self.logger = logger

	def fail(self, field: str | None, msg: str) -> MalformedInstance:
		return MalformedInstance(self.source, field, msg)

	def require(self, record: dict[str, Any], key: str, field: str) -> Any:
		try:
			return record[key]
		except KeyError:
			raise self.fail(f"{field}.{key}" if field else key, "missing") from None

	def integer(self, value: Any, field: str, low: int = 0, high: int | None = None) -> int:
		if isinstance(value, bool) or not isinstance(value, int):
			raise self.fail(field, "expected an integer")
		if value < low or (high is not None and value >= high):
			raise self.fail(field, f"{value} out of range")
		return value

	def array(self, value: Any, field: str) -> list[Any]:
		if not isinstance(value, list):
			raise self.fail(field, "expected an array")
		return value

	def record(self, value: Any, field: str) -> dict[str, Any]:
		if not isinstance(value, dict):
			raise self.fail(field, "expected an object")
		return value

	def alphabet(self, value: Any) -> InvolutiveAlphabet:
		pairs = self.array(value, "alphabet")
		for i, pair in enumerate(pairs):
			if not isinstance(pair, list) or not all(isinstance(token, str) for token in pair):
				raise self.fail(f"alphabet[{i}]", "expected a pair of strings")
		return InvolutiveAlphabet.from_pairs(pairs)

	def transitions(
		self,
		alphabet: InvolutiveAlphabet,
		value: Any,
		field: str,
		size: int,
	) -> list[tuple[int, int, int]]:
		arcs = []
		for i, arc in enumerate(self.array(value, f"{field}.transitions")):
			where = f"{field}.transitions[{i}]"
			if not isinstance(arc, list) or len(arc) != 3 or not isinstance(arc[1], str):
				raise self.fail(where, "expected [source, letter, target]")
			p = self.integer(arc[0], where, high=size)
			q = self.integer(arc[2], where, high=size)
			arcs.append((p, alphabet.index(arc[1], where), q))
		return arcs

	def states(self, record: dict[str, Any], field: str) -> tuple[int, list[int]]:
		size = self.integer(self.require(record, "states", field), f"{field}.states", low=1)
		finals = [
			self.integer(q, f"{field}.finals", high=size)
			for q in self.array(self.require(record, "finals", field), f"{field}.finals")
		]
		return size, finals

	def dfa(self, alphabet: InvolutiveAlphabet, value: Any, field: str) -> Dfa:
		record = self.record(value, field)
		size, finals = self.states(record, field)
		initial = self.integer(self.require(record, "initial", field), f"{field}.initial", high=size)
		arcs = self.transitions(alphabet, self.require(record, "transitions", field), field, size)
		try:
			d = Dfa.build(alphabet, size, arcs, initial, finals)
		except ValueError as exc:
			raise self.fail(f"{field}.transitions", str(exc)) from exc
		if d.size > size:
			self.logger.warning(
				"%s: %s is partial; missing transitions go to sink state %d",
				self.source,
				field,
				size,
			)
		return d

	def nfa(self, alphabet: InvolutiveAlphabet, value: Any, field: str) -> Nfa:
		record = self.record(value, field)
		size, finals = self.states(record, field)
		initials = [
			self.integer(q, f"{field}.initials", high=size)
			for q in self.array(self.require(record, "initials", field), f"{field}.initials")
		]
		arcs = self.transitions(alphabet, self.require(record, "transitions", field), field, size)
		return Nfa(alphabet, size, frozenset(initials), frozenset(finals), frozenset(arcs))

	def instance(self, document: Any) -> HairpinInstance:
		document = self.record(document, "")
		unknown = sorted(set(document) - KEYS)
		if unknown:
			raise self.fail(unknown[0], "unknown field")
		alphabet = self.alphabet(self.require(document, "alphabet", ""))
		kappa = self.require(document, "kappa", "")
		if isinstance(kappa, bool) or not isinstance(kappa, int) or kappa < 1:
			raise InvalidKappa(kappa)
		dfa1 = self.dfa(alphabet, self.require(document, "dfa_L1", ""), "dfa_L1")
		if "dfa_ovL2" in document and "nfa_L2" in document:
			raise self.fail("nfa_L2", "dfa_ovL2 and nfa_L2 are mutually exclusive")
		if "dfa_ovL2" in document:
			dfa2 = self.dfa(alphabet, document["dfa_ovL2"], "dfa_ovL2")
		elif "nfa_L2" in document:
			dfa2 = determinize(reverse_complement_acceptor(self.nfa(alphabet, document["nfa_L2"], "nfa_L2")))
		else:
			dfa2 = Dfa.empty(alphabet)
		return HairpinInstance(alphabet, kappa, dfa1, dfa2)


def parse_instance_text(
	text: str,
	source: str = "<string>",
	logger: LoggerLike | None = None,
) -> HairpinInstance:
	"""
	Parse an instance from JSON text.

	Raises:
		InvalidInstance: If the text doesn't describe a valid instance.

	"""
	if logger is None:
		logger = logging.getLogger("hairpin.instance_file")
	try:
		document = json.loads(text)
	except json.JSONDecodeError as exc:
		raise MalformedInstance(source, None, exc.msg, exc.lineno) from exc
	return _Reader(source, logger).instance(document)


def parse_instance(
	path: str | os.PathLike[str],
	logger: LoggerLike | None = None,
) -> HairpinInstance:
	"""
	Read an instance file.

	Raises:
		InvalidInstance: If the file can't be read or doesn't describe a valid
			instance.

	"""
	try:
		with open(path, encoding="utf-8") as handle:
			text = handle.read()
	except OSError as exc:
		raise MalformedInstance(os.fspath(path), None, exc.strerror or str(exc)) from exc
	return parse_instance_text(text, os.fspath(path), logger)


def _dfa_record(d: Dfa) -> dict[str, Any]:
	letters = d.alphabet.letters
	return {
		"states": d.size,
		"initial": d.initial,
		"finals": sorted(d.finals),
		"transitions": [[p, letters[a], q] for p, row in enumerate(d.delta) for a, q in enumerate(row)],
	}


def dump_instance(inst: HairpinInstance) -> str:
	"""
	Serialize an instance to JSON text.

	L2 is always written as ``dfa_ovL2``. Parsing the result gives back an
	equal instance as long as the alphabet lists every letter right before
	or after its partner, which holds for parsed instances.

	"""
	alphabet = inst.alphabet
	pairs = []
	seen: set[int] = set()
	for a, token in enumerate(alphabet.letters):
		if a not in seen:
			seen.update((a, alphabet.bar[a]))
			pairs.append([token, alphabet.letters[alphabet.bar[a]]])
	document = {
		"alphabet": pairs,
		"kappa": inst.kappa,
		"dfa_L1": _dfa_record(inst.dfa1),
		"dfa_ovL2": _dfa_record(inst.dfa2),
	}
	return json.dumps(document, indent=2) + "\n"
