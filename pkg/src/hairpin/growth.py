"""
Growth of regular languages and of hairpin completions.

The growth indicator of a language is the least λ such that the number of
words of length m is bounded by ``c·λ^m``. For the language of a trim
unambiguous automaton it's 0 when the automaton has no cycle, 1 when every
strongly connected component is a simple cycle and the spectral radius of
the transition count matrix otherwise.

"""

from __future__ import annotations

import dataclasses
import enum
import itertools
import logging
import math
from typing import Any

import numpy as np

from .alphabet import InvolutiveAlphabet
from .automata import Dfa, Nfa, determinize, intersect, trim
from .bridges import Bridge, build_bridge_nfa, extract_pair_languages
from .decider import RegularityVerdict, Verdict
from .grammar import check_kappa
from .limits import MAX_ITERATIONS, REPORT_TOLERANCE, TOLERANCE
from .oracle import HairpinInstance
from .scc import tarjan_scc
from .typing import LoggerLike


__all__ = [
	"GrowthKind",
	"GrowthClass",
	"PairGrowth",
	"GrowthReport",
	"Formable",
	"hairpin_pattern",
	"restrict_hairpin_formable",
	"growth_indicator",
	"prefix_closure",
	"growth_report",
]


class GrowthKind(enum.IntEnum):
	FINITE = 0
	POLYNOMIAL = 1
	EXPONENTIAL = 2


@dataclasses.dataclass(frozen=True)
class GrowthClass:
	"""
	Growth of a language.

	Attributes:
		kind: Finite, polynomial or exponential growth.
		indicator: 0 for finite, 1 for polynomial, the dominant eigenvalue for
			exponential growth.
		tolerance: Bound on the error of :attr:`indicator`.
		converged: Whether the power iteration met the requested tolerance.

	"""

	kind: GrowthKind
	indicator: float
	tolerance: float = 0.0
	converged: bool = True

	def __post_init__(self) -> None:
		self.check()

	def check(self) -> None:
		"""
		Raises:
			ValueError: If the indicator doesn't match the kind.

		"""
		if self.kind is GrowthKind.FINITE and self.indicator != 0:
			raise ValueError("finite languages have indicator 0")
		if self.kind is GrowthKind.POLYNOMIAL and self.indicator != 1:
			raise ValueError("polynomial languages have indicator 1")
		if self.kind is GrowthKind.EXPONENTIAL and not self.indicator > 1 - self.tolerance:
			raise ValueError("exponential languages have an indicator above 1")

	def as_dict(self) -> dict[str, Any]:
		return {
			"class": self.kind.name.lower(),
			"indicator": round(self.indicator, 12),
			"tolerance": self.tolerance,
			"converged": self.converged,
		}


FINITE = GrowthClass(GrowthKind.FINITE, 0.0)
POLYNOMIAL = GrowthClass(GrowthKind.POLYNOMIAL, 1.0)


def _largest(classes: list[GrowthClass]) -> GrowthClass:
	return max(classes, key=lambda growth: (growth.indicator, growth.kind), default=FINITE)


class Formable(enum.Enum):
	"""Shape of the words able to fold into a hairpin."""

	PREFIX = "prefix-forming"
	SUFFIX = "suffix-forming"


def hairpin_pattern(alphabet: InvolutiveAlphabet, kappa: int, side: Formable) -> Nfa:
	"""
	Return an NFA for the union over ``α ∈ Σ^κ`` of ``Σ* α Σ* bar(α)`` when
	``side`` is :attr:`Formable.PREFIX` and of ``α Σ* bar(α) Σ*`` otherwise.

	Raises:
		LimitExceeded: If ``kappa`` is above the configured cap.

	"""
	check_kappa(kappa)
	letters = range(len(alphabet))
	number: dict[tuple[Any, ...], int] = {("start",): 0}

	def state(*key: Any) -> int:
		return number.setdefault(key, len(number))

	arcs = set()
	finals = set()
	for a in letters:
		if side is Formable.PREFIX:
			arcs.add((0, a, 0))
		arcs.add((0, a, state("alpha", (a,))))
	for alpha in itertools.product(letters, repeat=kappa):
		for i in range(1, kappa):
			arcs.add((state("alpha", alpha[:i]), alpha[i], state("alpha", alpha[: i + 1])))
		full = state("alpha", alpha)
		closing = alphabet.bar_word(alpha)
		arcs.update((full, a, full) for a in letters)
		previous = full
		for j, a in enumerate(closing, start=1):
			following = state("bar", alpha, j)
			arcs.add((previous, a, following))
			previous = following
		finals.add(previous)
		if side is Formable.SUFFIX:
			arcs.update((previous, a, previous) for a in letters)
	return Nfa(alphabet, len(number), frozenset({0}), frozenset(finals), frozenset(arcs))


def restrict_hairpin_formable(d: Dfa, kappa: int, side: Formable = Formable.PREFIX) -> Dfa:
	"""
	Restrict ``L(d)`` to the words matching :func:`hairpin_pattern`.

	A DFA for L1 uses :attr:`Formable.PREFIX`. The DFA for ``bar(L2)`` uses
	:attr:`Formable.PREFIX` too, since ``bar`` maps suffix-forming words to
	prefix-forming ones.

	"""
	return determinize(intersect(d, hairpin_pattern(d.alphabet, kappa, side)))


def prefix_closure(d: Dfa) -> Dfa:
	"""Return a DFA accepting the prefixes of the words of ``L(d)``."""
	return Dfa(d.alphabet, d.delta, d.initial, d.coreachable())


def _spectral_radius(
	matrix: np.ndarray,
	tolerance: float,
	max_iterations: int,
) -> tuple[float, float, bool]:
	# Collatz-Wielandt bounds on M + I, which is primitive for an irreducible M.
	shifted = matrix + np.eye(matrix.shape[0])
	x = np.ones(matrix.shape[0])
	low, high = 0.0, math.inf
	for _ in range(max_iterations):
		y = shifted @ x
		ratios = y / x
		low, high = float(ratios.min()), float(ratios.max())
		if high - low <= tolerance:
			return (low + high) / 2 - 1, high - low, True
		x = y / y.max()
	return (low + high) / 2 - 1, high - low, False


def growth_indicator(
	m: Dfa | Nfa,
	tolerance: float | None = None,
	max_iterations: int | None = None,
	logger: LoggerLike | None = None,
) -> GrowthClass:
	"""
	Return the growth of ``L(m)``.

	An :class:`~hairpin.automata.Nfa` must be unambiguous. Finite and
	polynomial growth are recognized from the shape of the components;
	exponential growth is measured by power iteration on each component.

	"""
	if logger is None:
		logger = logging.getLogger("hairpin.growth")
	tolerance = TOLERANCE if tolerance is None else tolerance
	max_iterations = MAX_ITERATIONS if max_iterations is None else max_iterations
	nfa = trim(m.to_nfa() if isinstance(m, Dfa) else m)
	components = [component for component in tarjan_scc(nfa.successors) if component.nontrivial]
	if not components:
		return FINITE

	blocks = []
	for component in components:
		local = {node: i for i, node in enumerate(component.nodes)}
		matrix = np.zeros((len(local), len(local)))
		for p, _, q in nfa.arcs:
			if p in local and q in local:
				matrix[local[p], local[q]] += 1
		blocks.append(matrix)
	if all((block.sum(axis=1) == 1).all() for block in blocks):
		return POLYNOMIAL

	estimates = []
	for block in blocks:
		if (block.sum(axis=1) == 1).all():
			continue
		radius, error, converged = _spectral_radius(block, tolerance, max_iterations)
		if not converged:
			logger.warning(
				"power iteration stopped after %d iterations, error %g",
				max_iterations,
				error,
			)
		estimates.append((radius, error, converged))
	return GrowthClass(
		GrowthKind.EXPONENTIAL,
		max(radius for radius, _, _ in estimates),
		max(error for _, error, _ in estimates),
		all(converged for _, _, converged in estimates),
	)


@dataclasses.dataclass(frozen=True)
class PairGrowth:
	"""Growths of the languages of a pair of an initial and a final bridge."""

	initial: Bridge
	final: Bridge
	sigma: GrowthClass
	rho: GrowthClass

	@property
	def tau(self) -> float:
		"""Growth indicator of ``{v β bar(v)}``."""
		return max(self.sigma.indicator, math.sqrt(self.rho.indicator))

	def as_dict(self) -> dict[str, Any]:
		return {
			"initial": str(self.initial),
			"final": str(self.final),
			"sigma": self.sigma.as_dict(),
			"rho": self.rho.as_dict(),
			"tau": round(self.tau, 12),
		}


@dataclasses.dataclass(frozen=True)
class GrowthReport:
	"""
	Growth of a hairpin completion compared with the growth of its inputs.

	Attributes:
		lam: Larger growth of the hairpin-formable parts of L1 and L2.
		lambda_l1: Growth of the hairpin-formable part of L1.
		lambda_l2: Growth of the hairpin-formable part of L2.
		raw_l1: Growth of L1.
		raw_l2: Growth of L2.
		sigma: Largest growth of a B-language.
		rho: Largest growth of an R-language.
		eta: Growth of the hairpin completion, ``max(σ, √ρ)``.
		pairs: Growths per pair of bridges.
		bounds_ok: Whether ``√λ ≤ η ≤ λ``.
		identity_ok: Whether ``λ = max(σ, ρ)``.
		regular_equality_ok: For a regular completion, whether ``η = λ`` and
			``ρ ≤ 1``; :obj:`None` otherwise.

	"""

	lam: GrowthClass
	lambda_l1: GrowthClass
	lambda_l2: GrowthClass
	raw_l1: GrowthClass
	raw_l2: GrowthClass
	sigma: GrowthClass
	rho: GrowthClass
	eta: GrowthClass
	pairs: tuple[PairGrowth, ...]
	bounds_ok: bool
	identity_ok: bool
	regular_equality_ok: bool | None

	def as_dict(self) -> dict[str, Any]:
		return {
			"lambda": self.lam.as_dict(),
			"lambda_l1": self.lambda_l1.as_dict(),
			"lambda_l2": self.lambda_l2.as_dict(),
			"raw": {"l1": self.raw_l1.as_dict(), "l2": self.raw_l2.as_dict()},
			"sigma": self.sigma.as_dict(),
			"rho": self.rho.as_dict(),
			"eta": self.eta.as_dict(),
			"pairs": [pair.as_dict() for pair in self.pairs],
			"bounds_ok": self.bounds_ok,
			"identity_ok": self.identity_ok,
			"regular_equality_ok": self.regular_equality_ok,
		}


def growth_report(
	inst: HairpinInstance,
	verdict: RegularityVerdict | None = None,
	tolerance: float | None = None,
	logger: LoggerLike | None = None,
) -> GrowthReport:
	"""
	Compute the growth of the hairpin completion of ``inst`` and compare it
	with the growth of its inputs.

	``tolerance`` applies to the comparisons; it defaults to
	:data:`~hairpin.limits.REPORT_TOLERANCE`.

	"""
	if logger is None:
		logger = logging.getLogger("hairpin.growth")
	tolerance = REPORT_TOLERANCE if tolerance is None else tolerance

	lambda_l1 = growth_indicator(restrict_hairpin_formable(inst.dfa1, inst.kappa), logger=logger)
	lambda_l2 = growth_indicator(restrict_hairpin_formable(inst.dfa2, inst.kappa), logger=logger)
	lam = _largest([lambda_l1, lambda_l2])

	a = build_bridge_nfa(inst, logger=logger)
	pairs = tuple(
		PairGrowth(
			pair.initial,
			pair.final,
			growth_indicator(determinize(pair.b_language), logger=logger),
			growth_indicator(pair.r_language, logger=logger),
		)
		for pair in extract_pair_languages(a, inst)
	)
	sigma = _largest([pair.sigma for pair in pairs])
	rho = _largest([pair.rho for pair in pairs])
	eta_kind = max((max(pair.sigma.kind, pair.rho.kind) for pair in pairs), default=GrowthKind.FINITE)
	eta_value = max(sigma.indicator, math.sqrt(rho.indicator))
	eta = GrowthClass(
		eta_kind,
		eta_value,
		max(sigma.tolerance, rho.tolerance),
		sigma.converged and rho.converged,
	)
	logger.info(
		"growth: lambda = %.9g, sigma = %.9g, rho = %.9g, eta = %.9g",
		lam.indicator,
		sigma.indicator,
		rho.indicator,
		eta.indicator,
	)

	bounds_ok = (
		math.sqrt(lam.indicator) <= eta.indicator + tolerance and eta.indicator <= lam.indicator + tolerance
	)
	identity_ok = abs(lam.indicator - max(sigma.indicator, rho.indicator)) <= tolerance
	regular_equality_ok = None
	if verdict is not None and verdict.verdict is Verdict.REGULAR:
		regular_equality_ok = (
			abs(eta.indicator - lam.indicator) <= tolerance and rho.indicator <= 1 + tolerance
		)
	return GrowthReport(
		lam=lam,
		lambda_l1=lambda_l1,
		lambda_l2=lambda_l2,
		raw_l1=growth_indicator(inst.dfa1, logger=logger),
		raw_l2=growth_indicator(inst.dfa2, logger=logger),
		sigma=sigma,
		rho=rho,
		eta=eta,
		pairs=pairs,
		bounds_ok=bounds_ok,
		identity_ok=identity_ok,
		regular_equality_ok=regular_equality_ok,
	)
