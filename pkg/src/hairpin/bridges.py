"""
Bridges and the bridge automaton.

A quadruple ``(p1, p2, q1, q2)`` is a *basic bridge* when some word ``w``
satisfies ``p1·w = q1`` in the first DFA and ``p2·bar(w) = q2`` in the second
one; it's an *a-bridge* when such a ``w`` starts with the letter ``a``.

The bridge automaton reads the minimal γα prefix of every word of the hairpin
completion. Its states are bridges ``((p1, p2), q1, q2, level)`` where
``(p1, p2)`` tracks both DFAs on the prefix read so far, ``(q1, q2)`` are the
states at the matching position on the right end of the word and the level
counts letters of α.

"""

from __future__ import annotations

import collections
import dataclasses
import functools
import logging
from collections.abc import Iterable, Sequence

from .automata import (
	Dfa,
	Nfa,
	coreachable_states,
	product_states,
	reachable_states,
	subautomaton,
	useful_states,
)
from .exceptions import IncompatibleAlphabets
from .oracle import HairpinInstance
from .typing import LoggerLike, Quad, State, Word


__all__ = [
	"Bridge",
	"BridgeTables",
	"BridgeNfa",
	"PairLanguage",
	"compute_bridges",
	"b_language",
	"build_bridge_nfa",
	"extract_pair_languages",
	"unique_path_check",
]


@dataclasses.dataclass(frozen=True, order=True)
class Bridge:
	"""
	State of the bridge automaton.

	Field order gives the canonical order ``((p1, p2), q1, q2, level)``.

	"""

	p1: State
	p2: State
	q1: State
	q2: State
	level: int

	@property
	def quad(self) -> Quad:
		return (self.p1, self.p2, self.q1, self.q2)

	def __str__(self) -> str:
		return f"(({self.p1},{self.p2}),{self.q1},{self.q2},{self.level})"


@dataclasses.dataclass(frozen=True)
class BridgeTables:
	"""
	Basic bridges and a-bridges of a pair of DFAs.

	Attributes:
		basic: All basic bridges.
		per_letter: ``per_letter[a]`` holds the a-bridges.

	"""

	basic: frozenset[Quad]
	per_letter: tuple[frozenset[Quad], ...]


@functools.lru_cache(maxsize=16)
def _transition_system(d1: Dfa, d2: Dfa) -> Nfa:
	# Node p1 * n2 + q2 stands for (p1, q2). Reading a moves p1 forward and
	# q2 backwards along bar(a).
	n2 = d2.size
	bar = d1.alphabet.bar
	arcs = frozenset(
		(p1 * n2 + q2, a, t1 * n2 + s2)
		for p1, row in enumerate(d1.delta)
		for a, t1 in enumerate(row)
		for q2 in range(n2)
		for s2 in d2.predecessors[bar[a]][q2]
	)
	return Nfa(d1.alphabet, d1.size * n2, frozenset(), frozenset(), arcs)


def compute_bridges(d1: Dfa, d2: Dfa) -> BridgeTables:
	"""
	Compute basic bridges and a-bridges.

	``(p1, p2, q1, q2)`` is a basic bridge iff ``(q1, p2)`` is reachable from
	``(p1, q2)`` in the transition system where ``(p1, q2)`` reads ``a`` into
	``(p1·a, s2)`` for every ``s2`` with ``s2·bar(a) = q2``.

	Raises:
		IncompatibleAlphabets: If the DFAs read different alphabets.

	"""
	if d1.alphabet != d2.alphabet:
		raise IncompatibleAlphabets()
	system = _transition_system(d1, d2)
	n2 = d2.size
	reach = [reachable_states(system, (node,)) for node in range(system.size)]

	basic = set()
	per_letter: list[set[Quad]] = [set() for _ in d1.alphabet.letters]
	for node in range(system.size):
		p1, q2 = divmod(node, n2)
		basic.update((p1, target % n2, target // n2, q2) for target in reach[node])
		for a, successor in system.out_arcs[node]:
			per_letter[a].update((p1, target % n2, target // n2, q2) for target in reach[successor])
	return BridgeTables(frozenset(basic), tuple(frozenset(bridges) for bridges in per_letter))


def b_language(d1: Dfa, d2: Dfa, quad: Quad) -> Nfa:
	"""
	Return a trim NFA accepting ``B(p1, p2, q1, q2)``, the words ``w`` with
	``p1·w = q1`` and ``p2·bar(w) = q2``.

	The NFA has a single final state, so every accepted word has one path.

	"""
	p1, p2, q1, q2 = quad
	system = _transition_system(d1, d2)
	n2 = d2.size
	start, final = p1 * n2 + q2, q1 * n2 + p2
	keep = reachable_states(system, (start,)) & coreachable_states(system, (final,))
	return subautomaton(system, keep, initials=(start,), finals=(final,))


@dataclasses.dataclass(frozen=True)
class BridgeNfa:
	"""
	Trimmed bridge automaton.

	Attributes:
		bridges: States in canonical order; state ``i`` of :attr:`nfa` is ``bridges[i]``.
		nfa: The automaton over state indices.
		kappa: Number of letters of α, also the final level.

	"""

	bridges: tuple[Bridge, ...]
	nfa: Nfa
	kappa: int

	@functools.cached_property
	def index(self) -> dict[Bridge, int]:
		return {bridge: i for i, bridge in enumerate(self.bridges)}

	@property
	def initials(self) -> list[Bridge]:
		return [self.bridges[i] for i in sorted(self.nfa.initials)]

	@property
	def finals(self) -> list[Bridge]:
		return [self.bridges[i] for i in sorted(self.nfa.finals)]

	def __len__(self) -> int:
		return len(self.bridges)

	def export(self) -> str:
		"""
		Render the automaton as text: initial and final bridges, then one arc
		per line in canonical order.

		"""
		render = self.nfa.alphabet.render
		lines = [
			"# initial: " + " ".join(str(bridge) for bridge in self.initials),
			"# final: " + " ".join(str(bridge) for bridge in self.finals),
		]
		for p, a, q in sorted(self.nfa.arcs):
			lines.append(f"{self.bridges[p]} -{render((a,))}-> {self.bridges[q]}")
		return "\n".join(lines) + "\n"


def build_bridge_nfa(
	inst: HairpinInstance,
	tables: BridgeTables | None = None,
	logger: LoggerLike | None = None,
) -> BridgeNfa:
	"""
	Build the trimmed bridge automaton of an instance.

	An arc reads ``a`` from ``(P, q1·ā, q2·ā, level)`` into ``(P·a, q1, q2,
	level')``. On level 0 the level stays 0 unless ``q1·ā`` or ``q2·ā`` is
	final, in which case α starts and the level becomes 1. Higher levels
	climb by one up to κ, which has no outgoing arcs. Both ends of an arc
	are basic bridges.

	"""
	if logger is None:
		logger = logging.getLogger("hairpin.bridges")
	if tables is None:
		tables = compute_bridges(inst.dfa1, inst.dfa2)
	d1, d2 = inst.dfa1, inst.dfa2
	k = inst.kappa
	bar = inst.alphabet.bar
	basic = tables.basic
	pairs = sorted(product_states(d1, d2))

	bridges = [
		Bridge(p1, p2, q1, q2, level)
		for p1, p2 in pairs
		for q1 in range(d1.size)
		for q2 in range(d2.size)
		if (p1, p2, q1, q2) in basic
		for level in range(k + 1)
	]
	number = {bridge: i for i, bridge in enumerate(bridges)}

	arcs = set()
	for p1, p2 in pairs:
		for a in range(len(inst.alphabet)):
			t1, t2 = d1.delta[p1][a], d2.delta[p2][a]
			abar = bar[a]
			for q1 in range(d1.size):
				s1 = d1.delta[q1][abar]
				for q2 in range(d2.size):
					if (t1, t2, q1, q2) not in basic:
						continue
					s2 = d2.delta[q2][abar]
					if (p1, p2, s1, s2) not in basic:
						continue
					switch = s1 in d1.finals or s2 in d2.finals
					arcs.add(
						(
							number[Bridge(p1, p2, s1, s2, 0)],
							a,
							number[Bridge(t1, t2, q1, q2, 1 if switch else 0)],
						)
					)
					for level in range(1, k):
						arcs.add(
							(
								number[Bridge(p1, p2, s1, s2, level)],
								a,
								number[Bridge(t1, t2, q1, q2, level + 1)],
							)
						)

	initials = frozenset(
		number[bridge]
		for bridge in bridges
		if (bridge.p1, bridge.p2) == (d1.initial, d2.initial) and bridge.level == 0
	)
	finals = frozenset(number[bridge] for bridge in bridges if bridge.level == k)
	full = Nfa(inst.alphabet, len(bridges), initials, finals, frozenset(arcs))
	useful = useful_states(full)
	trimmed = subautomaton(full, useful)
	kept = tuple(bridges[i] for i in sorted(useful))
	logger.info(
		"bridge automaton: %d pairs, %d candidate bridges, %d kept, %d arcs",
		len(pairs),
		len(bridges),
		len(kept),
		len(trimmed.arcs),
	)
	return BridgeNfa(kept, trimmed, k)


@dataclasses.dataclass(frozen=True)
class PairLanguage:
	"""
	Languages attached to a pair ``μ = (I, F)`` of an initial and a final bridge.

	Every word of the hairpin completion is ``v β bar(v)`` for exactly one μ,
	one ``v`` in :attr:`r_language` and one β in :attr:`b_language`.

	Attributes:
		initial: Initial bridge I.
		final: Final bridge F.
		r_language: Sub-automaton of the bridge automaton reading the paths from I to F.
		b_language: NFA for ``B(d1, d2, e1, e2)`` where ``F = ((d1, d2), e1, e2, κ)``.

	"""

	initial: Bridge
	final: Bridge
	r_language: Nfa
	b_language: Nfa

	@property
	def mu(self) -> tuple[Bridge, Bridge]:
		return (self.initial, self.final)


def extract_pair_languages(a: BridgeNfa, inst: HairpinInstance) -> list[PairLanguage]:
	"""
	Split the hairpin completion into the languages of all pairs ``(I, F)``
	where F is reachable from I.

	Pairs come out sorted by I then F.

	"""
	m = a.nfa
	pairs = []
	for i in sorted(m.initials):
		forward = reachable_states(m, (i,))
		for f in sorted(m.finals & forward):
			keep = forward & coreachable_states(m, (f,))
			r_language = subautomaton(m, keep, initials=(i,), finals=(f,))
			final = a.bridges[f]
			pairs.append(
				PairLanguage(
					a.bridges[i],
					final,
					r_language,
					b_language(inst.dfa1, inst.dfa2, final.quad),
				)
			)
	return pairs


def unique_path_check(a: BridgeNfa, sample_words: Iterable[Word]) -> bool:
	"""
	Check that every sample word labels at most one path between any two bridges.

	"""
	m = a.nfa
	words: Sequence[Word] = list(sample_words)
	for source in range(m.size):
		for w in words:
			counts: collections.Counter[int] = collections.Counter({source: 1})
			for letter in w:
				following: collections.Counter[int] = collections.Counter()
				for p, count in counts.items():
					for q in m.table[p][letter]:
						following[q] += count
				counts = following
				if not counts:
					break
			if any(count > 1 for count in counts.values()):
				return False
	return True
