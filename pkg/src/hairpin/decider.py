"""
Deciding whether a hairpin completion is regular.

The procedure builds the bridge automaton and runs four tests in order. The
first one checks whether the automaton has a finite language. The second one
requires every strongly connected component to be a simple cycle read from
its least bridge. The last two look for words ``x, y, z`` pumping the loop of
a component into words whose membership can't be decided by a finite memory.

Every test runs on the instance and on its mirror, which swaps the two DFAs:
the hairpin completion of the mirror is ``bar(H)``, which is regular iff
``H`` is.

"""

from __future__ import annotations

import dataclasses
import enum
import logging
from collections.abc import Sequence
from typing import Any

from .alphabet import InvolutiveAlphabet
from .automata import Dfa, Nfa, is_finite_language, product_states, shortest_word
from .bridges import Bridge, BridgeNfa, BridgeTables, b_language, build_bridge_nfa, compute_bridges
from .oracle import HairpinInstance, membership
from .scc import tarjan_scc
from .typing import Letter, LoggerLike, Quad, State, Word


__all__ = [
	"Verdict",
	"Fired",
	"Orientation",
	"SccLoop",
	"FactorizationWitness",
	"Witness",
	"RegularityVerdict",
	"test0",
	"scc_loops",
	"test1",
	"factorization_accepts",
	"test2",
	"test3",
	"decide",
	"validate_witness",
	"witness_prefix",
]


class Verdict(enum.Enum):
	REGULAR = "regular"
	NOT_REGULAR = "not_regular"


class Fired(enum.Enum):
	"""Test that established the verdict."""

	NONE = "none"
	TEST0 = "test0"
	TEST1 = "test1"
	TEST2 = "test2"
	TEST3 = "test3"


class Orientation(enum.Enum):
	FORWARD = "forward"
	MIRRORED = "mirrored"

	def orient(self, inst: HairpinInstance) -> HairpinInstance:
		return inst if self is Orientation.FORWARD else inst.mirrored()


BOTH = (Orientation.FORWARD, Orientation.MIRRORED)


@dataclasses.dataclass(frozen=True)
class SccLoop:
	"""
	Shortest loop at the least bridge of a nontrivial component.

	Attributes:
		scc_id: Rank of the component when components are sorted by least bridge.
		anchor: Least bridge of the component.
		anchor_index: State index of :attr:`anchor` in the bridge automaton.
		v: Least word among the shortest nonempty labels of a loop at the anchor.
		size: Number of bridges in the component.

	"""

	scc_id: int
	anchor: Bridge
	anchor_index: int
	v: Word
	size: int


@dataclasses.dataclass(frozen=True)
class FactorizationWitness:
	"""Factorization ``w = μ δ β bar(δ) bar(μ)`` with ``|δ| = κ``."""

	mu: Word
	delta: Word
	beta: Word


@dataclasses.dataclass(frozen=True)
class Witness:
	"""
	Evidence attached to a non-regular verdict.

	Only the fields relevant to the firing test are set.

	Attributes:
		finite_language: ``"L1"`` or ``"L2"``, the finite input language.
		scc_id: Component whose loop is pumped.
		anchor: Least bridge of that component.
		v: Loop label at the anchor.
		path: Word read from the anchor into a final bridge that isn't a prefix of ``v v v …``.
		mark: Position in ``v`` where :attr:`path` leaves the loop.
		letter: Letter read at that position instead of ``v[mark]``.
		x: Pumping block of length between κ and ``|v| + κ - 1``.
		y: Continuation of ``x`` along the loop.
		z: Detour starting with a letter off the loop; empty for :attr:`Fired.TEST2`.
		states: ``(d1, d2)`` reached after ``x y z`` and after ``x bar(z)``.
		bridge: The a-bridge ``(c1, c2, d1, d2)`` carrying ``z``.
		word: ``x y z bar(x) bar(v)``, the word no factorization accepts.

	"""

	finite_language: str | None = None
	scc_id: int | None = None
	anchor: Bridge | None = None
	v: Word | None = None
	path: Word | None = None
	mark: int | None = None
	letter: Letter | None = None
	x: Word | None = None
	y: Word | None = None
	z: Word | None = None
	states: tuple[State, State] | None = None
	bridge: Quad | None = None
	word: Word | None = None

	def as_dict(self, alphabet: InvolutiveAlphabet) -> dict[str, Any]:
		result: dict[str, Any] = {}
		for field in dataclasses.fields(self):
			value = getattr(self, field.name)
			if value is None:
				continue
			if field.name in ("v", "path", "x", "y", "z", "word"):
				value = alphabet.render(value)
			elif field.name == "letter":
				value = alphabet.letters[value]
			elif field.name == "anchor":
				value = str(value)
			elif isinstance(value, tuple):
				value = list(value)
			result[field.name] = value
		return result


@dataclasses.dataclass(frozen=True)
class RegularityVerdict:
	"""
	Outcome of :func:`decide`.

	Attributes:
		verdict: Whether the hairpin completion is regular.
		fired: Test that proved non-regularity, :attr:`Fired.NONE` otherwise.
		orientation: Orientation the decisive test ran in.
		witness: Evidence for a non-regular verdict.
		stats: Sizes per orientation: ``n1``, ``n2``, ``n12``, ``bridges``,
			``sccs`` and ``window_disagreements``.

	"""

	verdict: Verdict
	fired: Fired
	orientation: Orientation
	witness: Witness | None = None
	stats: dict[str, dict[str, int]] = dataclasses.field(default_factory=dict)

	def __post_init__(self) -> None:
		self.check()

	def check(self) -> None:
		"""
		Raises:
			ValueError: If the verdict and the firing test don't match.

		"""
		if self.verdict is Verdict.REGULAR:
			if self.fired is not Fired.NONE:
				raise ValueError("a regular verdict can't have a firing test")
		elif self.fired is Fired.NONE or self.witness is None:
			raise ValueError("a non-regular verdict needs a firing test and a witness")

	def as_dict(self, alphabet: InvolutiveAlphabet) -> dict[str, Any]:
		return {
			"verdict": self.verdict.value,
			"fired": self.fired.value,
			"orientation": self.orientation.value,
			"witness": None if self.witness is None else self.witness.as_dict(alphabet),
			"stats": self.stats,
		}


def _not_regular(fired: Fired, orientation: Orientation, witness: Witness) -> RegularityVerdict:
	return RegularityVerdict(Verdict.NOT_REGULAR, fired, orientation, witness)


def _loop_prefix(v: Word, length: int) -> Word:
	"""Return the prefix of ``v v v …`` of the given length."""
	n = len(v)
	return tuple(v[i % n] for i in range(length))


def test0(
	inst: HairpinInstance,
	a: BridgeNfa,
	orientation: Orientation = Orientation.FORWARD,
) -> RegularityVerdict | None:
	"""
	Decide the cases settled by the finiteness of the bridge automaton.

	A finite language of minimal γα prefixes makes the completion a finite
	union of regular languages. An infinite one combined with a finite L1
	or L2 makes it non-regular.

	"""
	if is_finite_language(a.nfa):
		return RegularityVerdict(Verdict.REGULAR, Fired.NONE, orientation)
	names = ("L1", "L2") if orientation is Orientation.FORWARD else ("L2", "L1")
	for name, dfa in zip(names, (inst.dfa1, inst.dfa2)):
		if dfa.is_finite():
			return _not_regular(Fired.TEST0, orientation, Witness(finite_language=name))
	return None


def scc_loops(a: BridgeNfa) -> list[SccLoop]:
	"""
	Return the shortest loop at the least bridge of every nontrivial component.

	Loops are found by breadth-first search inside the component, exploring
	arcs by letter then target, so ties resolve to the least word.

	"""
	m = a.nfa
	components = sorted(
		(component for component in tarjan_scc(m.successors) if component.nontrivial),
		key=lambda component: component.nodes[0],
	)
	loops = []
	for scc_id, component in enumerate(components):
		anchor = component.nodes[0]
		inside = set(component.nodes)
		parent: dict[int, tuple[int, Letter] | None] = {anchor: None}
		frontier = [anchor]
		v: Word | None = None
		while frontier and v is None:
			following = []
			for p in frontier:
				for letter, q in m.out_arcs[p]:
					if q == anchor:
						word = [letter]
						while (link := parent[p]) is not None:
							p, previous = link
							word.append(previous)
						v = tuple(reversed(word))
						break
					if q in inside and q not in parent:
						parent[q] = (p, letter)
						following.append(q)
				if v is not None:
					break
			frontier = following
		assert v is not None, "nontrivial component without a loop"
		loops.append(SccLoop(scc_id, a.bridges[anchor], anchor, v, len(component)))
	return loops


def _leave_loop(m: Nfa, loop: SccLoop) -> tuple[Word, int, Letter] | None:
	"""
	Mark the states reachable from the anchor with positions in ``v`` and
	return the first path that reads a letter off ``v v v …``.

	"""
	v = loop.v
	n = len(v)
	start = (loop.anchor_index, 0)
	parent: dict[tuple[int, int], tuple[tuple[int, int], Letter] | None] = {start: None}
	queue = [start]
	for state in queue:
		p, i = state
		for letter, q in m.out_arcs[p]:
			if letter != v[i]:
				word = [letter]
				cursor = state
				while (link := parent[cursor]) is not None:
					cursor, previous = link
					word.append(previous)
				completion = shortest_word(m, (q,), m.finals)
				assert completion is not None, "bridge automaton isn't trim"
				return tuple(reversed(word)) + completion, i, letter
			following = (q, (i + 1) % n)
			if following not in parent:
				parent[following] = (state, letter)
				queue.append(following)
	return None


def test1(
	a: BridgeNfa,
	loops: Sequence[SccLoop],
	orientation: Orientation = Orientation.FORWARD,
) -> RegularityVerdict | None:
	"""
	Check that every component is a simple cycle and that every path from its
	anchor into a final bridge reads a prefix of ``v v v …``.

	"""
	for loop in loops:
		leave = _leave_loop(a.nfa, loop)
		if leave is None and len(loop.v) == loop.size:
			continue
		witness = Witness(scc_id=loop.scc_id, anchor=loop.anchor, v=loop.v)
		if leave is not None:
			path, mark, letter = leave
			witness = dataclasses.replace(witness, path=path, mark=mark, letter=letter)
		return _not_regular(Fired.TEST1, orientation, witness)
	return None


def factorization_accepts(
	w: Word,
	start: State,
	d2: Dfa,
	kappa: int,
) -> FactorizationWitness | None:
	"""
	Find the factorization ``w = μ δ β bar(δ) bar(μ)`` with ``|δ| = κ`` and
	the shortest μ such that ``start·μ δ bar(β) bar(δ)`` is final in ``d2``.

	"""
	reverse = d2.alphabet.bar_word(w)
	n = len(w)
	for t in range((n - 2 * kappa) // 2 + 1):
		if w[: t + kappa] != reverse[: t + kappa]:
			return None
		if d2.step(start, reverse[: n - t]) in d2.finals:
			return FactorizationWitness(w[:t], w[t : t + kappa], w[t + kappa : n - t - kappa])
	return None


class _LoopRuns:
	"""Runs of both DFAs along the loop of a component."""

	def __init__(self, inst: HairpinInstance, loop: SccLoop) -> None:
		self.inst = inst
		self.loop = loop
		self.k = inst.kappa
		self.v = loop.v
		self.n = len(loop.v)
		self.bar_word = inst.alphabet.bar_word
		vbar = self.bar_word(loop.v)
		self.vbar = vbar
		self.tail1 = vbar * inst.dfa1.size
		self.tail2 = vbar * inst.dfa2.size

	def prefix(self, length: int) -> Word:
		return _loop_prefix(self.v, length)

	def exits_once(self, d1: State, x: Word) -> bool:
		"""
		Whether reading ``bar(x) bar(v)^n1`` from ``d1`` ends at ``q1`` and meets
		a final state after exactly κ letters and never later.

		"""
		dfa1 = self.inst.dfa1
		run = dfa1.trace(d1, self.bar_word(x) + self.tail1)
		return (
			run[-1] == self.loop.anchor.q1
			and run[self.k - 1] in dfa1.finals
			and not any(s in dfa1.finals for s in run[self.k :])
		)

	def closes(self, d2: State, xy: Word) -> tuple[bool, bool]:
		"""
		Read ``bar(xy) bar(v)^n2`` from ``d2``.

		Return whether it ends at ``q2`` without a final state on the
		``bar(v)^n2`` part, and whether no final state shows up after κ or
		more letters.

		"""
		dfa2 = self.inst.dfa2
		head = self.bar_word(xy)
		run = dfa2.trace(d2, head + self.tail2)
		closed = run[-1] == self.loop.anchor.q2 and not any(s in dfa2.finals for s in run[len(head) :])
		window = not any(s in dfa2.finals for s in run[self.k - 1 :])
		return closed, window

	def closes_window(self, d2: State, head: Word) -> bool:
		dfa2 = self.inst.dfa2
		run = dfa2.trace(d2, self.bar_word(head) + self.tail2)
		return run[-1] == self.loop.anchor.q2 and not any(s in dfa2.finals for s in run[self.k - 1 :])

	def overlaps(self) -> list[list[int]]:
		"""
		``overlaps[i][j]`` is the length, capped at ``|v|``, of the longest
		common prefix of ``v v …`` from position ``i`` and ``bar(v) bar(v) …``
		from position ``j``.

		"""
		n = self.n
		left = _loop_prefix(self.v, 2 * n)
		right = _loop_prefix(self.vbar, 2 * n)
		table = [[0] * (2 * n + 1) for _ in range(2 * n + 1)]
		for i in reversed(range(2 * n)):
			for j in reversed(range(2 * n)):
				if left[i] == right[j]:
					table[i][j] = min(n, 1 + table[i + 1][j + 1])
		return [row[:n] for row in table[:n]]

	def rescued(self, x: Word, y: Word, overlaps: list[list[int]]) -> bool:
		"""
		Decide whether a factorization of ``x y bar(x) bar(v)`` is accepted,
		from the last final state of the run and the longest valid μ.

		"""
		n, k = self.n, self.k
		anchor = self.loop.anchor
		xy = x + y
		total = 2 * len(x) + len(y) + n
		run = self.inst.dfa2.trace(anchor.p2, self.v + x + self.bar_word(xy))
		last = max((i + 1 for i, s in enumerate(run) if s in self.inst.dfa2.finals), default=0)
		common = len(xy) + min(overlaps[len(xy) % n][(-len(x)) % n], n - len(y))
		longest = min(common, total // 2) - k
		return last > 0 and longest >= total - last and 2 * (last - k) >= total


def test2(
	inst: HairpinInstance,
	a: BridgeNfa,
	loop: SccLoop,
	orientation: Orientation = Orientation.FORWARD,
	fast_path: bool = True,
	stats: dict[str, int] | None = None,
	logger: LoggerLike | None = None,
) -> RegularityVerdict | None:
	"""
	Look for ``x, y`` along the loop such that ``u v^k x y bar(x) bar(v)^ℓ bar(u)``
	belongs to the completion through L1 for all ``k ≥ ℓ`` while no
	factorization through L2 survives pumping ``ℓ`` past ``k``.

	Candidates that pass the tail condition of the second run but fail its
	window, and still have no accepted factorization, are skipped and
	counted in ``stats["window_disagreements"]``.

	"""
	if logger is None:
		logger = logging.getLogger("hairpin.decider")
	runs = _LoopRuns(inst, loop)
	anchor = loop.anchor
	overlaps = runs.overlaps() if fast_path else []
	for x_len in range(runs.k, runs.n + runs.k):
		x = runs.prefix(x_len)
		d2 = inst.dfa2.step(anchor.p2, x)
		for y_len in range(runs.n):
			xy = runs.prefix(x_len + y_len)
			y = xy[x_len:]
			d1 = inst.dfa1.step(anchor.p1, xy)
			if not runs.exits_once(d1, x):
				continue
			closed, window = runs.closes(d2, xy)
			if not closed:
				continue
			word = xy + runs.bar_word(x) + runs.vbar
			if fast_path:
				rescued = runs.rescued(x, y, overlaps)
			else:
				rescued = factorization_accepts(word, anchor.p2, inst.dfa2, inst.kappa) is not None
			if rescued:
				continue
			if not window:
				logger.warning(
					"window disagreement in %s orientation: scc %d, |x| = %d, |y| = %d",
					orientation.value,
					loop.scc_id,
					x_len,
					y_len,
				)
				if stats is not None:
					stats["window_disagreements"] = stats.get("window_disagreements", 0) + 1
				continue
			witness = Witness(
				scc_id=loop.scc_id,
				anchor=anchor,
				v=loop.v,
				x=x,
				y=y,
				z=(),
				states=(d1, d2),
				word=word,
			)
			return _not_regular(Fired.TEST2, orientation, witness)
	return None


def _detour(inst: HairpinInstance, bridge: Quad, letter: Letter) -> Word:
	"""Return the least word of ``B(c1, c2, d1, d2)`` starting with ``letter``."""
	m = b_language(inst.dfa1, inst.dfa2, bridge)
	(start,) = m.initials
	best: Word | None = None
	for a, q in m.out_arcs[start]:
		if a != letter:
			continue
		rest = shortest_word(m, (q,), m.finals)
		if rest is not None and (best is None or (len(rest) + 1, (a, *rest)) < (len(best), best)):
			best = (a, *rest)
	assert best is not None, f"{bridge} isn't a bridge for this letter"
	return best


def _test3_candidates(
	inst: HairpinInstance,
	runs: _LoopRuns,
	tables: BridgeTables,
) -> list[tuple[int, int, Letter, State, State]]:
	"""Candidates ``(|x|, |y|, a, d1, d2)`` from a scan of every combination."""
	anchor = runs.loop.anchor
	found = []
	for x_len in range(runs.k, runs.n + runs.k):
		x = runs.prefix(x_len)
		c2 = inst.dfa2.step(anchor.p2, x)
		exits = [d1 for d1 in range(inst.dfa1.size) if runs.exits_once(d1, x)]
		for y_len in range(runs.n):
			xy = runs.prefix(x_len + y_len)
			c1 = inst.dfa1.step(anchor.p1, xy)
			on_loop = runs.v[(x_len + y_len) % runs.n]
			closing = [d2 for d2 in range(inst.dfa2.size) if all(runs.closes(d2, xy))]
			for letter in range(len(inst.alphabet)):
				if letter == on_loop:
					continue
				bridges = tables.per_letter[letter]
				found.extend(
					(x_len, y_len, letter, d1, d2)
					for d1 in exits
					for d2 in closing
					if (c1, c2, d1, d2) in bridges
				)
	return found


def _test3_joined(
	inst: HairpinInstance,
	runs: _LoopRuns,
	tables: BridgeTables,
) -> list[tuple[int, int, Letter, State, State]]:
	"""Same candidates, from joining a table keyed on ``x`` with a table keyed on ``y``."""
	anchor = runs.loop.anchor
	n = runs.n
	by_x: dict[tuple[State, State], list[int]] = {}
	for x_len in range(runs.k, n + runs.k):
		x = runs.prefix(x_len)
		c2 = inst.dfa2.step(anchor.p2, x)
		for d1 in range(inst.dfa1.size):
			if runs.exits_once(d1, x):
				by_x.setdefault((c2, d1), []).append(x_len)
	by_y: dict[tuple[State, State, Letter], list[int]] = {}
	for y_len in range(n):
		y = runs.v[:y_len]
		c1 = inst.dfa1.step(anchor.p1, y)
		for d2 in range(inst.dfa2.size):
			if not runs.closes_window(d2, y):
				continue
			for letter in range(len(inst.alphabet)):
				if letter != runs.v[y_len]:
					by_y.setdefault((c1, d2, letter), []).append(y_len)
	found = []
	for (c2, d1), x_lens in by_x.items():
		for (c1, d2, letter), y_lens in by_y.items():
			if (c1, c2, d1, d2) in tables.per_letter[letter]:
				found.extend(
					(x_len, (y_len - x_len) % n, letter, d1, d2) for x_len in x_lens for y_len in y_lens
				)
	return sorted(found)


def test3(
	inst: HairpinInstance,
	a: BridgeNfa,
	loop: SccLoop,
	tables: BridgeTables,
	orientation: Orientation = Orientation.FORWARD,
	fast_path: bool = True,
) -> RegularityVerdict | None:
	"""
	Like :func:`test2`, with a nonempty detour ``z`` leaving the loop right
	after ``x y``.

	With ``fast_path``, candidates come from joining per-``x`` and per-``y``
	tables on the a-bridges instead of scanning all combinations.

	"""
	runs = _LoopRuns(inst, loop)
	anchor = loop.anchor
	find = _test3_joined if fast_path else _test3_candidates
	for x_len, y_len, letter, d1, d2 in find(inst, runs, tables):
		x = runs.prefix(x_len)
		xy = runs.prefix(x_len + y_len)
		c1 = inst.dfa1.step(anchor.p1, xy)
		c2 = inst.dfa2.step(anchor.p2, x)
		z = _detour(inst, (c1, c2, d1, d2), letter)
		word = xy + z + runs.bar_word(x) + runs.vbar
		if factorization_accepts(word, anchor.p2, inst.dfa2, inst.kappa) is not None:
			continue
		witness = Witness(
			scc_id=loop.scc_id,
			anchor=anchor,
			v=loop.v,
			x=x,
			y=xy[x_len:],
			z=z,
			states=(d1, d2),
			bridge=(c1, c2, d1, d2),
			word=word,
		)
		return _not_regular(Fired.TEST3, orientation, witness)
	return None


def decide(
	inst: HairpinInstance,
	orientations: Sequence[Orientation] = BOTH,
	fast_path: bool = True,
	logger: LoggerLike | None = None,
) -> RegularityVerdict:
	"""
	Decide whether the hairpin completion of ``inst`` is regular.

	Tests run in the order 0, 1, 2 and 3, in each orientation in turn; the
	first test that settles the question wins.

	"""
	if logger is None:
		logger = logging.getLogger("hairpin.decider")
	debug = logger.isEnabledFor(logging.DEBUG)
	stats: dict[str, dict[str, int]] = {}

	def settle(verdict: RegularityVerdict) -> RegularityVerdict:
		logger.info(
			"%s (%s, %s orientation)",
			verdict.verdict.value,
			verdict.fired.value,
			verdict.orientation.value,
		)
		return dataclasses.replace(verdict, stats=stats)

	for orientation in orientations:
		oriented = orientation.orient(inst)
		tables = compute_bridges(oriented.dfa1, oriented.dfa2)
		a = build_bridge_nfa(oriented, tables, logger=logger)
		counters = stats[orientation.value] = {
			"n1": oriented.dfa1.size,
			"n2": oriented.dfa2.size,
			"n12": len(product_states(oriented.dfa1, oriented.dfa2)),
			"bridges": len(a),
			"sccs": 0,
			"window_disagreements": 0,
		}
		verdict = test0(oriented, a, orientation)
		if verdict is not None:
			return settle(verdict)
		loops = scc_loops(a)
		counters["sccs"] = len(loops)
		if debug:
			for loop in loops:
				logger.debug(
					"scc %d: anchor %s, loop %s, %d bridges",
					loop.scc_id,
					loop.anchor,
					inst.alphabet.render(loop.v),
					loop.size,
				)
		verdict = test1(a, loops, orientation)
		if verdict is None:
			for loop in loops:
				verdict = test2(oriented, a, loop, orientation, fast_path, counters, logger)
				if verdict is not None:
					break
		if verdict is None:
			for loop in loops:
				verdict = test3(oriented, a, loop, tables, orientation, fast_path)
				if verdict is not None:
					break
		if verdict is not None:
			return settle(verdict)
	return settle(RegularityVerdict(Verdict.REGULAR, Fired.NONE, orientations[-1]))


def witness_prefix(verdict: RegularityVerdict, inst: HairpinInstance) -> Word | None:
	"""
	Return the least word leading from an initial bridge to the anchor of the
	witness, or :obj:`None` when the witness has no anchor.

	"""
	witness = verdict.witness
	if witness is None or witness.anchor is None:
		return None
	a = build_bridge_nfa(verdict.orientation.orient(inst))
	return shortest_word(a.nfa, a.nfa.initials, {a.index[witness.anchor]})


def validate_witness(verdict: RegularityVerdict, inst: HairpinInstance) -> bool:
	"""
	Check a non-regular verdict against membership.

	For a pumping witness ``u v^k x y z bar(x) bar(v)^ℓ bar(u)`` must belong
	to the completion for ``ℓ ≤ k`` and must not for ``ℓ = k + 1``, for a few
	``k`` above the number of states. A :attr:`Fired.TEST1` witness must
	describe a path leaving the loop. Other verdicts hold trivially.

	"""
	witness = verdict.witness
	if witness is None or verdict.fired in (Fired.NONE, Fired.TEST0):
		return True
	assert witness.anchor is not None and witness.v is not None
	oriented = verdict.orientation.orient(inst)
	bar_word = inst.alphabet.bar_word
	v = witness.v

	if verdict.fired is Fired.TEST1:
		if witness.path is None:
			return True
		a = build_bridge_nfa(oriented)
		start = a.index[witness.anchor]
		reaches_final = bool(a.nfa.read((start,), witness.path) & a.nfa.finals)
		return reaches_final and witness.path != _loop_prefix(v, len(witness.path))

	assert witness.x is not None and witness.y is not None and witness.z is not None
	u = witness_prefix(verdict, inst)
	if u is None:
		return False
	vbar = bar_word(v)
	ubar = bar_word(u)
	middle = witness.x + witness.y + witness.z + bar_word(witness.x)
	least = max(oriented.dfa1.size, oriented.dfa2.size)
	for k in range(least, least + 3):
		head = u + v * k + middle
		for ell in sorted({0, k // 2, k}):
			if not membership(head + vbar * ell + ubar, oriented):
				return False
		if membership(head + vbar * (k + 1) + ubar, oriented):
			return False
	return True
