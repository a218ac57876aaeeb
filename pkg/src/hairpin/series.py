"""
Exact generating functions.

The generating function of a language counts its words by length. For the
language of a trim unambiguous automaton or an unambiguous linear grammar it
is the sum, over the start symbols, of the solutions of a linear system with
polynomial coefficients. The system is solved exactly over ``ZZ[z]`` one
strongly connected block at a time with fraction-free elimination.

"""

from __future__ import annotations

import dataclasses
from collections.abc import Iterable, Mapping, Sequence
from typing import Any

import sympy

from .automata import Dfa, Nfa, trim
from .bridges import PairLanguage
from .grammar import LinearGrammar
from .scc import tarjan_scc


__all__ = [
	"RationalSeries",
	"transfer_series",
	"generating_function",
	"grammar_generating_function",
	"pair_series",
]


Z = sympy.Symbol("z")

_ZERO = sympy.Poly(0, Z, domain=sympy.ZZ)
_ONE = sympy.Poly(1, Z, domain=sympy.ZZ)

_Quotient = tuple[sympy.Poly, sympy.Poly]


def _poly(coefficients: Sequence[int]) -> sympy.Poly:
	return sympy.Poly(list(reversed(coefficients)) or [0], Z, domain=sympy.ZZ)


def _ascending(p: sympy.Poly) -> tuple[int, ...]:
	coefficients = [int(c) for c in reversed(p.all_coeffs())]
	while len(coefficients) > 1 and coefficients[-1] == 0:
		coefficients.pop()
	return tuple(coefficients)


def _monomial(degree: int) -> sympy.Poly:
	return sympy.Poly(Z**degree, Z, domain=sympy.ZZ)


def _normalized(numerator: sympy.Poly, denominator: sympy.Poly) -> _Quotient:
	if numerator.is_zero:
		return _ZERO, _ONE
	common = numerator.gcd(denominator)
	numerator, denominator = numerator.exquo(common), denominator.exquo(common)
	if denominator.coeff_monomial(1) < 0:
		numerator, denominator = -numerator, -denominator
	return numerator, denominator


def _add(left: _Quotient, right: _Quotient) -> _Quotient:
	if left[0].is_zero:
		return right
	if right[0].is_zero:
		return left
	return _normalized(left[0] * right[1] + right[0] * left[1], left[1] * right[1])


@dataclasses.dataclass(frozen=True)
class RationalSeries:
	"""
	Power series ``numerator(z) / denominator(z)`` with integer coefficients.

	Attributes:
		numerator: Coefficients in ascending degree.
		denominator: Coefficients in ascending degree, with a positive constant term.

	Instances built by :meth:`from_polys` are in lowest terms, so equal
	series have equal fields.

	"""

	numerator: tuple[int, ...]
	denominator: tuple[int, ...]

	def __post_init__(self) -> None:
		if not self.denominator or self.denominator[0] == 0:
			raise ValueError("denominator must not vanish at 0")

	@classmethod
	def from_polys(cls, numerator: sympy.Poly, denominator: sympy.Poly) -> RationalSeries:
		numerator, denominator = _normalized(numerator, denominator)
		return cls(_ascending(numerator), _ascending(denominator))

	@classmethod
	def zero(cls) -> RationalSeries:
		return cls((0,), (1,))

	@property
	def polys(self) -> _Quotient:
		return _poly(self.numerator), _poly(self.denominator)

	def __add__(self, other: RationalSeries) -> RationalSeries:
		return RationalSeries.from_polys(*_add(self.polys, other.polys))

	def __mul__(self, other: RationalSeries) -> RationalSeries:
		(a, b), (c, d) = self.polys, other.polys
		return RationalSeries.from_polys(a * c, b * d)

	def at_square(self) -> RationalSeries:
		"""Return the series ``f(z²)``."""

		def spread(coefficients: tuple[int, ...]) -> tuple[int, ...]:
			result = [0] * (2 * len(coefficients) - 1)
			result[::2] = coefficients
			return tuple(result)

		return RationalSeries(spread(self.numerator), spread(self.denominator))

	def coefficients(self, count: int) -> list[int]:
		"""
		Return the first ``count`` Taylor coefficients.

		Raises:
			ValueError: If a coefficient isn't an integer.

		"""
		numerator, denominator = self.numerator, self.denominator
		result: list[int] = []
		for m in range(count):
			total = numerator[m] if m < len(numerator) else 0
			for i in range(1, min(m, len(denominator) - 1) + 1):
				total -= denominator[i] * result[m - i]
			quotient, remainder = divmod(total, denominator[0])
			if remainder:
				raise ValueError("series has non-integer coefficients")
			result.append(quotient)
		return result

	def as_dict(self) -> dict[str, Any]:
		return {"numerator": list(self.numerator), "denominator": list(self.denominator)}

	def __str__(self) -> str:
		numerator, denominator = self.polys
		return f"({numerator.as_expr()}) / ({denominator.as_expr()})"


def _solve(matrix: list[list[sympy.Poly]]) -> tuple[list[sympy.Poly], sympy.Poly]:
	"""
	Solve a nonsingular system given by its augmented matrix.

	Return ``(X, det)`` such that ``X[i] / det`` is the i-th unknown.

	"""
	n = len(matrix)
	a = [row[:] for row in matrix]
	previous = _ONE
	for k in range(n - 1):
		if a[k][k].is_zero:
			pivot = next(i for i in range(k + 1, n) if not a[i][k].is_zero)
			a[k], a[pivot] = a[pivot], a[k]
		for i in range(k + 1, n):
			for j in range(k + 1, n + 1):
				a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exquo(previous)
			a[i][k] = _ZERO
		previous = a[k][k]
	det = a[n - 1][n - 1]
	solution = [_ZERO] * n
	for i in reversed(range(n)):
		total = det * a[i][n]
		for j in range(i + 1, n):
			total -= a[i][j] * solution[j]
		solution[i] = total.exquo(a[i][i])
	return solution, det


def transfer_series(
	size: int,
	arcs: Iterable[tuple[int, int, int]],
	constants: Mapping[int, int],
	sources: Iterable[int],
) -> RationalSeries:
	"""
	Solve ``X_i = c_i + Σ z^d X_j`` over the arcs ``(i, j, d)`` and return the
	sum of ``X_s`` over the sources.

	Unknowns are eliminated block by block, sinks first, so that every block
	only refers to solved unknowns outside of it.

	"""
	successors: list[list[tuple[int, int]]] = [[] for _ in range(size)]
	for i, j, degree in arcs:
		successors[i].append((j, degree))
	solved: dict[int, _Quotient] = {}
	for component in tarjan_scc([[j for j, _ in row] for row in successors]):
		local = {node: r for r, node in enumerate(component.nodes)}
		n = len(local)
		matrix = [[_ONE if r == c else _ZERO for c in range(n)] for r in range(n)]
		rhs: list[_Quotient] = []
		for r, node in enumerate(component.nodes):
			value: _Quotient = (_poly([constants.get(node, 0)]), _ONE)
			for j, degree in successors[node]:
				if j in local:
					matrix[r][local[j]] -= _monomial(degree)
				else:
					numerator, denominator = solved[j]
					value = _add(value, _normalized(numerator * _monomial(degree), denominator))
			rhs.append(value)
		if not component.nontrivial:
			solved[component.nodes[0]] = rhs[0]
			continue
		common = _ONE
		for _, denominator in rhs:
			common = common.lcm(denominator)
		for r, (numerator, denominator) in enumerate(rhs):
			matrix[r].append(numerator * common.exquo(denominator))
		solution, det = _solve(matrix)
		for r, node in enumerate(component.nodes):
			solved[node] = _normalized(solution[r], det * common)

	total: _Quotient = (_ZERO, _ONE)
	for source in sources:
		total = _add(total, solved[source])
	return RationalSeries.from_polys(*total)


def generating_function(m: Dfa | Nfa) -> RationalSeries:
	"""
	Return the generating function of the language of ``m``.

	An :class:`~hairpin.automata.Nfa` must be unambiguous: every word has at
	most one accepting path.

	"""
	nfa = trim(m.to_nfa() if isinstance(m, Dfa) else m)
	return transfer_series(
		nfa.size,
		((p, q, 1) for p, _, q in nfa.arcs),
		{q: 1 for q in nfa.finals},
		nfa.initials,
	)


def grammar_generating_function(g: LinearGrammar) -> RationalSeries:
	"""Return the generating function of the language of an unambiguous linear grammar."""
	number = {head: i for i, head in enumerate(sorted(g.nonterminals))}
	constants: dict[int, int] = {}
	arcs = []
	for rule in g.rules:
		if rule.body is None:
			constants[number[rule.head]] = constants.get(number[rule.head], 0) + 1
		else:
			arcs.append((number[rule.head], number[rule.body], rule.width))
	return transfer_series(len(number), arcs, constants, (number[axiom] for axiom in g.axioms))


def pair_series(pair: PairLanguage) -> RationalSeries:
	"""
	Return the generating function of ``{v β bar(v)}`` for ``v`` in the
	R-language and β in the B-language of a pair.

	"""
	return generating_function(pair.b_language) * generating_function(pair.r_language).at_square()
