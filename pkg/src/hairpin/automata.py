"""
Deterministic and nondeterministic finite automata over an involutive alphabet.

Automata are immutable values. States are numbered ``0..n-1`` and every
ordering used to break ties is numeric.

"""

from __future__ import annotations

import collections
import dataclasses
import functools
from collections.abc import Collection, Iterable, Iterator

from .alphabet import InvolutiveAlphabet
from .exceptions import IncompatibleAlphabets
from .scc import tarjan_scc
from .typing import Letter, State, Word


__all__ = [
	"Dfa",
	"Nfa",
	"reverse_complement_acceptor",
	"determinize",
	"product_states",
	"reachable_states",
	"coreachable_states",
	"useful_states",
	"subautomaton",
	"trim",
	"is_finite_language",
	"intersect",
	"shortest_word",
]


@dataclasses.dataclass(frozen=True)
class Dfa:
	"""
	Complete deterministic finite automaton.

	Attributes:
		alphabet: Input alphabet.
		delta: ``delta[p][a]`` is the state reached from ``p`` on letter ``a``.
		initial: Initial state.
		finals: Accepting states.

	"""

	alphabet: InvolutiveAlphabet
	delta: tuple[tuple[State, ...], ...]
	initial: State = 0
	finals: frozenset[State] = frozenset()

	def __post_init__(self) -> None:
		self.check()

	@classmethod
	def build(
		cls,
		alphabet: InvolutiveAlphabet,
		size: int,
		transitions: Iterable[tuple[State, Letter, State]],
		initial: State = 0,
		finals: Iterable[State] = (),
	) -> Dfa:
		"""
		Build a DFA from a partial transition list.

		Missing transitions lead to a fresh non-final sink state ``size``, so
		the result has ``size + 1`` states exactly when completion was needed.

		Raises:
			ValueError: If a pair ``(state, letter)`` has two targets.

		"""
		table: list[list[State | None]] = [[None] * len(alphabet) for _ in range(size)]
		for p, a, q in transitions:
			if table[p][a] is not None and table[p][a] != q:
				raise ValueError(f"state {p} has two transitions on {alphabet.letters[a]!r}")
			table[p][a] = q
		sink = size
		completed = any(q is None for row in table for q in row)
		rows = [tuple(sink if q is None else q for q in row) for row in table]
		if completed:
			rows.append((sink,) * len(alphabet))
		return cls(alphabet, tuple(rows), initial, frozenset(finals))

	@classmethod
	def empty(cls, alphabet: InvolutiveAlphabet) -> Dfa:
		"""Return the one-state DFA accepting the empty language."""
		return cls(alphabet, ((0,) * len(alphabet),), 0, frozenset())

	def check(self) -> None:
		"""
		Check that the DFA is complete and refers to valid states only.

		Raises:
			ValueError: If the DFA isn't well-formed.

		"""
		size = len(self.delta)
		if size < 1:
			raise ValueError("a DFA needs at least one state")
		if not 0 <= self.initial < size:
			raise ValueError(f"initial state {self.initial} out of range")
		if any(not 0 <= q < size for q in self.finals):
			raise ValueError("final state out of range")
		for row in self.delta:
			if len(row) != len(self.alphabet) or any(not 0 <= q < size for q in row):
				raise ValueError("transition table must be complete")

	@property
	def size(self) -> int:
		return len(self.delta)

	@functools.cached_property
	def predecessors(self) -> tuple[tuple[tuple[State, ...], ...], ...]:
		"""``predecessors[a][q]`` lists the states ``p`` with ``p·a = q``."""
		table: list[list[list[State]]] = [[[] for _ in self.delta] for _ in self.alphabet.letters]
		for p, row in enumerate(self.delta):
			for a, q in enumerate(row):
				table[a][q].append(p)
		return tuple(tuple(tuple(states) for states in column) for column in table)

	def step(self, p: State, w: Word) -> State:
		"""Return ``p·w``."""
		delta = self.delta
		for a in w:
			p = delta[p][a]
		return p

	def trace(self, p: State, w: Word) -> list[State]:
		"""Return the states visited after each letter of ``w`` when reading from ``p``."""
		delta = self.delta
		states = []
		for a in w:
			p = delta[p][a]
			states.append(p)
		return states

	def inverse(self, w: Word, q: State) -> frozenset[State]:
		"""Return the states ``p`` with ``p·w = q``."""
		states = {q}
		for a in reversed(w):
			column = self.predecessors[a]
			states = {p for s in states for p in column[s]}
		return frozenset(states)

	def accepts(self, w: Word) -> bool:
		return self.step(self.initial, w) in self.finals

	def to_nfa(self) -> Nfa:
		arcs = frozenset((p, a, q) for p, row in enumerate(self.delta) for a, q in enumerate(row))
		return Nfa(self.alphabet, self.size, frozenset({self.initial}), self.finals, arcs)

	def coreachable(self) -> frozenset[State]:
		"""Return the states from which a final state can be reached."""
		return coreachable_states(self.to_nfa(), self.finals)

	def is_finite(self) -> bool:
		return is_finite_language(self.to_nfa())

	def words(self, max_len: int) -> Iterator[Word]:
		"""Yield the accepted words of length at most ``max_len``."""
		return self.to_nfa().words(max_len)


@dataclasses.dataclass(frozen=True)
class Nfa:
	"""
	Nondeterministic finite automaton without empty transitions.

	Attributes:
		alphabet: Input alphabet.
		size: Number of states.
		initials: Initial states.
		finals: Accepting states.
		arcs: Labeled transitions ``(source, letter, target)``.

	"""

	alphabet: InvolutiveAlphabet
	size: int
	initials: frozenset[State]
	finals: frozenset[State]
	arcs: frozenset[tuple[State, Letter, State]]

	def __post_init__(self) -> None:
		self.check()

	def check(self) -> None:
		"""
		Check that every endpoint and label is valid.

		Raises:
			ValueError: If the NFA isn't well-formed.

		"""
		states = range(self.size)
		if not self.initials <= set(states) or not self.finals <= set(states):
			raise ValueError("initial or final state out of range")
		for p, a, q in self.arcs:
			if p not in states or q not in states or not 0 <= a < len(self.alphabet):
				raise ValueError(f"invalid arc {(p, a, q)}")

	@functools.cached_property
	def table(self) -> tuple[tuple[tuple[State, ...], ...], ...]:
		"""``table[p][a]`` lists the targets of ``a``-arcs leaving ``p`` in increasing order."""
		rows: list[list[list[State]]] = [[[] for _ in self.alphabet.letters] for _ in range(self.size)]
		for p, a, q in self.arcs:
			rows[p][a].append(q)
		return tuple(tuple(tuple(sorted(targets)) for targets in row) for row in rows)

	@functools.cached_property
	def out_arcs(self) -> tuple[tuple[tuple[Letter, State], ...], ...]:
		"""``out_arcs[p]`` lists ``(letter, target)`` pairs, sorted."""
		return tuple(
			tuple((a, q) for a, targets in enumerate(row) for q in targets) for row in self.table
		)

	@functools.cached_property
	def successors(self) -> tuple[tuple[State, ...], ...]:
		return tuple(tuple(sorted({q for _, q in arcs})) for arcs in self.out_arcs)

	@functools.cached_property
	def in_arcs(self) -> tuple[tuple[tuple[Letter, State], ...], ...]:
		"""``in_arcs[q]`` lists ``(letter, source)`` pairs, sorted."""
		rows: list[list[tuple[Letter, State]]] = [[] for _ in range(self.size)]
		for p, a, q in self.arcs:
			rows[q].append((a, p))
		return tuple(tuple(sorted(row)) for row in rows)

	def read(self, states: Collection[State], w: Word) -> frozenset[State]:
		"""Return the states reachable from ``states`` by reading ``w``."""
		current = frozenset(states)
		for a in w:
			current = frozenset(q for p in current for q in self.table[p][a])
		return current

	def accepts(self, w: Word) -> bool:
		return bool(self.read(self.initials, w) & self.finals)

	def words(self, max_len: int) -> Iterator[Word]:
		"""
		Yield the accepted words of length at most ``max_len``.

		Branches that can't reach a final state within the remaining length
		are pruned, so the cost is proportional to the accepted prefixes.

		"""
		distance = _distances(self, self.finals)
		start = frozenset(self.initials)
		stack: list[tuple[frozenset[State], Word]] = [(start, ())]
		while stack:
			states, word = stack.pop()
			if states & self.finals:
				yield word
			budget = max_len - len(word) - 1
			for a in reversed(range(len(self.alphabet))):
				nxt = frozenset(q for p in states for q in self.table[p][a])
				if any(distance.get(q, max_len + 1) <= budget for q in nxt):
					stack.append((nxt, (*word, a)))


def _distances(m: Nfa, targets: Iterable[State]) -> dict[State, int]:
	"""Return the length of a shortest word leading from each state into ``targets``."""
	distance = {q: 0 for q in targets}
	queue = collections.deque(distance)
	while queue:
		q = queue.popleft()
		for _, p in m.in_arcs[q]:
			if p not in distance:
				distance[p] = distance[q] + 1
				queue.append(p)
	return distance


def reachable_states(m: Nfa, sources: Iterable[State]) -> frozenset[State]:
	seen = set(sources)
	stack = list(seen)
	while stack:
		p = stack.pop()
		for q in m.successors[p]:
			if q not in seen:
				seen.add(q)
				stack.append(q)
	return frozenset(seen)


def coreachable_states(m: Nfa, targets: Iterable[State]) -> frozenset[State]:
	return frozenset(_distances(m, targets))


def reverse_complement_acceptor(m: Nfa) -> Nfa:
	"""
	Return an NFA accepting ``{bar(w) : w ∈ L(m)}``.

	Arcs are reversed and relabeled with the partner letter; initial and final
	states swap roles.

	"""
	bar = m.alphabet.bar
	arcs = frozenset((q, bar[a], p) for p, a, q in m.arcs)
	return Nfa(m.alphabet, m.size, m.finals, m.initials, arcs)


def determinize(m: Nfa) -> Dfa:
	"""
	Subset construction.

	Subsets are numbered in breadth-first discovery order with letters taken
	in increasing order; the empty subset acts as sink when it occurs.

	"""
	start = frozenset(m.initials)
	index = {start: 0}
	subsets = [start]
	rows: list[tuple[State, ...]] = []
	for subset in subsets:
		row = []
		for a in range(len(m.alphabet)):
			target = frozenset(q for p in subset for q in m.table[p][a])
			if target not in index:
				index[target] = len(subsets)
				subsets.append(target)
			row.append(index[target])
		rows.append(tuple(row))
	finals = frozenset(i for i, subset in enumerate(subsets) if subset & m.finals)
	return Dfa(m.alphabet, tuple(rows), 0, finals)


def product_states(d1: Dfa, d2: Dfa) -> frozenset[tuple[State, State]]:
	"""
	Return the pairs ``(q01·w, q02·w)`` for all words ``w``.

	Raises:
		IncompatibleAlphabets: If the DFAs read different alphabets.

	"""
	if d1.alphabet != d2.alphabet:
		raise IncompatibleAlphabets()
	start = (d1.initial, d2.initial)
	seen = {start}
	queue = collections.deque([start])
	while queue:
		p1, p2 = queue.popleft()
		for a in range(len(d1.alphabet)):
			pair = (d1.delta[p1][a], d2.delta[p2][a])
			if pair not in seen:
				seen.add(pair)
				queue.append(pair)
	return frozenset(seen)


def useful_states(m: Nfa) -> frozenset[State]:
	"""Return the states lying on some path from an initial to a final state."""
	return reachable_states(m, m.initials) & coreachable_states(m, m.finals)


def subautomaton(
	m: Nfa,
	keep: Iterable[State],
	initials: Iterable[State] | None = None,
	finals: Iterable[State] | None = None,
) -> Nfa:
	"""
	Restrict ``m`` to ``keep`` and renumber the kept states in increasing order.

	``initials`` and ``finals`` default to those of ``m``; states outside
	``keep`` are dropped from them.

	"""
	kept = sorted(set(keep))
	number = {q: i for i, q in enumerate(kept)}
	initials = m.initials if initials is None else initials
	finals = m.finals if finals is None else finals
	arcs = frozenset(
		(number[p], a, number[q]) for p, a, q in m.arcs if p in number and q in number
	)
	return Nfa(
		m.alphabet,
		len(kept),
		frozenset(number[q] for q in initials if q in number),
		frozenset(number[q] for q in finals if q in number),
		arcs,
	)


def trim(m: Nfa) -> Nfa:
	"""Remove states that are unreachable or can't reach a final state."""
	return subautomaton(m, useful_states(m))


def is_finite_language(m: Nfa) -> bool:
	"""A language is finite iff its trim acceptor has no nontrivial component."""
	trimmed = trim(m)
	return not any(component.nontrivial for component in tarjan_scc(trimmed.successors))


def intersect(d: Dfa, m: Nfa) -> Nfa:
	"""
	Product construction accepting ``L(d) ∩ L(m)``.

	Only pairs reachable from the initial pairs are built.

	Raises:
		IncompatibleAlphabets: If the automata read different alphabets.

	"""
	if d.alphabet != m.alphabet:
		raise IncompatibleAlphabets()
	starts = [(d.initial, s) for s in sorted(m.initials)]
	number = {pair: i for i, pair in enumerate(starts)}
	pairs = list(starts)
	arcs = set()
	for pair in pairs:
		p, s = pair
		for a in range(len(d.alphabet)):
			for t in m.table[s][a]:
				target = (d.delta[p][a], t)
				if target not in number:
					number[target] = len(pairs)
					pairs.append(target)
				arcs.add((number[pair], a, number[target]))
	finals = frozenset(number[(p, s)] for p, s in pairs if p in d.finals and s in m.finals)
	return Nfa(d.alphabet, len(pairs), frozenset(range(len(starts))), finals, frozenset(arcs))


def shortest_word(m: Nfa, sources: Iterable[State], targets: Collection[State]) -> Word | None:
	"""
	Return the least word, by length then letters, leading from ``sources`` into ``targets``.

	Returns :obj:`None` when no target is reachable.

	"""
	parent: dict[State, tuple[State, Letter] | None] = {}
	queue: collections.deque[State] = collections.deque()
	for p in sorted(set(sources)):
		parent[p] = None
		queue.append(p)
	while queue:
		p = queue.popleft()
		if p in targets:
			word: list[Letter] = []
			while (link := parent[p]) is not None:
				p, a = link
				word.append(a)
			return tuple(reversed(word))
		for a, q in m.out_arcs[p]:
			if q not in parent:
				parent[q] = (p, a)
				queue.append(q)
	return None
