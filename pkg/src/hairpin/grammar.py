"""
Unambiguous linear grammar generating a hairpin completion.

Nonterminals come in two kinds indexed by state quadruples ``(p1, p2, q1, q2)``:

* ``B(p1, p2, q1, q2)`` derives the words β with ``p1·β = q1`` and
  ``p2·bar(β) = q2``;
* ``R(p1, p2, q1, q2)`` wraps a B-language into ``γ α … ᾱ γ̄``, tracking both
  automata on the left part and, backwards, on the right part.

Axioms are ``R(q01, q02, q1, q2)``. Every word of the completion has exactly
one derivation from exactly one axiom.

"""

from __future__ import annotations

import collections
import dataclasses
import enum
import functools
import itertools
import logging

from .alphabet import InvolutiveAlphabet
from .exceptions import LimitExceeded
from .limits import MAX_KAPPA
from .oracle import HairpinInstance, check_length
from .typing import LoggerLike, Word


__all__ = [
	"Kind",
	"NonterminalId",
	"Production",
	"LinearGrammar",
	"build_grammar",
	"count_by_length",
	"enumerate_grammar",
	"count_derivations",
	"check_kappa",
]


class Kind(enum.IntEnum):
	"""Kind of nonterminal."""

	B = 0
	R = 1


@dataclasses.dataclass(frozen=True, order=True)
class NonterminalId:
	kind: Kind
	p1: int
	p2: int
	q1: int
	q2: int

	def __str__(self) -> str:
		return f"{self.kind.name}({self.p1},{self.p2},{self.q1},{self.q2})"


@dataclasses.dataclass(frozen=True)
class Production:
	"""
	Rule ``head -> left body right``.

	``body`` is :obj:`None` for the terminal rule ``B(p, q, p, q) -> 1``.

	"""

	head: NonterminalId
	left: Word
	body: NonterminalId | None
	right: Word

	@property
	def width(self) -> int:
		"""Number of terminal letters the rule contributes."""
		return len(self.left) + len(self.right)

	def sort_key(self) -> tuple[NonterminalId, Word, tuple[NonterminalId, ...], Word]:
		return (self.head, self.left, () if self.body is None else (self.body,), self.right)


@dataclasses.dataclass(frozen=True)
class LinearGrammar:
	"""
	Trimmed linear grammar.

	Attributes:
		alphabet: Terminal alphabet.
		kappa: Minimum bonding length the grammar was built for.
		axioms: Start symbols, sorted.
		rules: Productions, sorted by head then right-hand side.

	"""

	alphabet: InvolutiveAlphabet
	kappa: int
	axioms: tuple[NonterminalId, ...]
	rules: tuple[Production, ...]

	@functools.cached_property
	def by_head(self) -> dict[NonterminalId, tuple[Production, ...]]:
		grouped: dict[NonterminalId, list[Production]] = collections.defaultdict(list)
		for rule in self.rules:
			grouped[rule.head].append(rule)
		return {head: tuple(rules) for head, rules in grouped.items()}

	@property
	def nonterminals(self) -> frozenset[NonterminalId]:
		return frozenset(self.by_head)

	def export(self) -> str:
		"""
		Render the grammar as text, one rule per line.

		The first line lists the axioms. The empty word is written ``1``.

		"""
		render = self.alphabet.render
		lines = ["# axioms: " + " ".join(str(axiom) for axiom in self.axioms)]
		for rule in self.rules:
			if rule.body is None:
				lines.append(f"{rule.head} -> 1")
				continue
			parts = [render(rule.left), str(rule.body)]
			if rule.right:
				parts.append(render(rule.right))
			lines.append(f"{rule.head} -> " + " ".join(parts))
		return "\n".join(lines) + "\n"


def check_kappa(kappa: int, limit: int | None = None) -> None:
	"""
	Raises:
		LimitExceeded: If ``kappa`` is above the configured cap.

	"""
	limit = MAX_KAPPA if limit is None else limit
	if kappa > limit:
		raise LimitExceeded("kappa", kappa, limit)


def _rules_for(head: NonterminalId, inst: HairpinInstance) -> list[Production]:
	d1, d2 = inst.dfa1, inst.dfa2
	bar = inst.alphabet.bar
	letters = range(len(inst.alphabet))
	p1, p2, q1, q2 = head.p1, head.p2, head.q1, head.q2
	rules = []
	if head.kind is Kind.B:
		if p1 == q1 and p2 == q2:
			rules.append(Production(head, (), None, ()))
		for a in letters:
			target = d1.delta[p1][a]
			for s2 in d2.predecessors[bar[a]][q2]:
				rules.append(Production(head, (a,), NonterminalId(Kind.B, target, p2, q1, s2), ()))
	elif q1 not in d1.finals and q2 not in d2.finals:
		for a in letters:
			abar = bar[a]
			t1, t2 = d1.delta[p1][a], d2.delta[p2][a]
			for s1 in d1.predecessors[abar][q1]:
				for s2 in d2.predecessors[abar][q2]:
					body = NonterminalId(Kind.R, t1, t2, s1, s2)
					rules.append(Production(head, (a,), body, (abar,)))
	else:
		bar_word = inst.alphabet.bar_word
		for alpha in itertools.product(letters, repeat=inst.kappa):
			alpha_bar = bar_word(alpha)
			t1, t2 = d1.step(p1, alpha), d2.step(p2, alpha)
			for s1 in sorted(d1.inverse(alpha_bar, q1)):
				for s2 in sorted(d2.inverse(alpha_bar, q2)):
					body = NonterminalId(Kind.B, t1, t2, s1, s2)
					rules.append(Production(head, alpha, body, alpha_bar))
	return rules


def build_grammar(inst: HairpinInstance, logger: LoggerLike | None = None) -> LinearGrammar:
	"""
	Build the trimmed unambiguous linear grammar of the hairpin completion.

	Only nonterminals reachable from an axiom are expanded; unproductive
	nonterminals are then removed.

	Raises:
		LimitExceeded: If κ is above the configured cap.

	"""
	if logger is None:
		logger = logging.getLogger("hairpin.grammar")
	check_kappa(inst.kappa)
	d1, d2 = inst.dfa1, inst.dfa2

	axioms = [
		NonterminalId(Kind.R, d1.initial, d2.initial, q1, q2)
		for q1 in range(d1.size)
		for q2 in range(d2.size)
	]
	rules: dict[NonterminalId, list[Production]] = {}
	queue = collections.deque(axioms)
	while queue:
		head = queue.popleft()
		if head in rules:
			continue
		rules[head] = _rules_for(head, inst)
		queue.extend(rule.body for rule in rules[head] if rule.body is not None)

	productive = _productive(rules)
	kept = {
		head: [rule for rule in head_rules if rule.body is None or rule.body in productive]
		for head, head_rules in rules.items()
		if head in productive
	}
	live_axioms = [axiom for axiom in axioms if axiom in kept]
	reachable = set(live_axioms)
	stack = list(live_axioms)
	while stack:
		head = stack.pop()
		for rule in kept[head]:
			if rule.body is not None and rule.body not in reachable:
				reachable.add(rule.body)
				stack.append(rule.body)

	final_rules = sorted(
		(rule for head in reachable for rule in kept[head]),
		key=Production.sort_key,
	)
	logger.info(
		"grammar: %d nonterminals expanded, %d kept, %d rules, %d axioms",
		len(rules),
		len(reachable),
		len(final_rules),
		len(live_axioms),
	)
	return LinearGrammar(inst.alphabet, inst.kappa, tuple(sorted(live_axioms)), tuple(final_rules))


def _productive(rules: dict[NonterminalId, list[Production]]) -> set[NonterminalId]:
	users: dict[NonterminalId, list[NonterminalId]] = collections.defaultdict(list)
	productive: set[NonterminalId] = set()
	stack = []
	for head, head_rules in rules.items():
		for rule in head_rules:
			if rule.body is None:
				if head not in productive:
					productive.add(head)
					stack.append(head)
			else:
				users[rule.body].append(head)
	while stack:
		body = stack.pop()
		for head in users[body]:
			if head not in productive:
				productive.add(head)
				stack.append(head)
	return productive


def count_by_length(g: LinearGrammar, max_len: int) -> list[int]:
	"""
	Return ``[c_0, …, c_max_len]`` where ``c_m`` counts derivations of length ``m``.

	The grammar is unambiguous, so ``c_m`` is the number of words of length ``m``.

	"""
	counts: dict[NonterminalId, list[int]] = {head: [0] * (max_len + 1) for head in g.by_head}
	for m in range(max_len + 1):
		for head, rules in g.by_head.items():
			total = 0
			for rule in rules:
				if rule.body is None:
					total += m == 0
				elif rule.width <= m:
					total += counts[rule.body][m - rule.width]
			counts[head][m] = total
	return [sum(counts[axiom][m] for axiom in g.axioms) for m in range(max_len + 1)]


def enumerate_grammar(g: LinearGrammar, max_len: int, limit: int | None = None) -> frozenset[Word]:
	"""
	Return the generated words of length at most ``max_len``.

	Raises:
		LimitExceeded: If ``max_len`` is above the enumeration cap.

	"""
	check_length(max_len, limit)

	@functools.cache
	def derive(head: NonterminalId, m: int) -> tuple[Word, ...]:
		words: list[Word] = []
		for rule in g.by_head[head]:
			if rule.body is None:
				if m == 0:
					words.append(())
			elif rule.width <= m:
				words.extend(rule.left + w + rule.right for w in derive(rule.body, m - rule.width))
		return tuple(words)

	return frozenset(w for axiom in g.axioms for m in range(max_len + 1) for w in derive(axiom, m))


def count_derivations(g: LinearGrammar, w: Word) -> int:
	"""
	Count the derivations of ``w`` from all axioms by tabular parsing.

	The result is 1 for generated words and 0 otherwise.

	"""

	@functools.cache
	def parse(head: NonterminalId, i: int, j: int) -> int:
		total = 0
		for rule in g.by_head[head]:
			if rule.body is None:
				total += i == j
				continue
			left, right = len(rule.left), len(rule.right)
			if j - i < left + right:
				continue
			if w[i : i + left] == rule.left and w[j - right : j] == rule.right:
				total += parse(rule.body, i + left, j - right)
		return total

	return sum(parse(axiom, 0, len(w)) for axiom in g.axioms)

