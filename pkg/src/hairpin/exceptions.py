"""
:mod:`hairpin.exceptions` defines the following hierarchy of exceptions.

* :exc:`HairpinError`
    * :exc:`InvalidInstance`
        * :exc:`MalformedInstance`
        * :exc:`InvalidInvolution`
        * :exc:`UndeclaredLetter`
        * :exc:`InvalidKappa`
        * :exc:`IncompatibleAlphabets`
    * :exc:`LimitExceeded`
    * :exc:`CrossCheckFailed`

"""

from __future__ import annotations


__all__ = [
	"HairpinError",
	"InvalidInstance",
	"MalformedInstance",
	"InvalidInvolution",
	"UndeclaredLetter",
	"InvalidKappa",
	"IncompatibleAlphabets",
	"LimitExceeded",
	"CrossCheckFailed",
]


class HairpinError(Exception):
	"""
	Base class for all exceptions defined by hairpin.

	"""


class InvalidInstance(HairpinError):
	"""
	Base class for exceptions raised when an input instance can't be used.

	The command line interface exits with status 2 on these errors.

	"""


class MalformedInstance(InvalidInstance):
	"""
	Raised when an instance file isn't valid JSON or doesn't have the expected shape.

	Attributes:
		source: Name of the file or other origin of the data.
		field: Path of the offending field, e.g. ``dfa_L1.transitions[3]``,
			or :obj:`None` when the document can't be decoded at all.
		msg: Description of the problem.
		line: Line number in the source, when known.

	"""

	def __init__(
		self,
		source: str,
		field: str | None,
		msg: str,
		line: int | None = None,
	) -> None:
		self.source = source
		self.field = field
		self.msg = msg
		self.line = line

	def __str__(self) -> str:
		where = self.source
		if self.line is not None:
			where += f", line {self.line}"
		if self.field is not None:
			where += f", field {self.field}"
		return f"malformed instance ({where}): {self.msg}"


class InvalidInvolution(InvalidInstance):
	"""
	Raised when the bar map of an alphabet isn't a self-inverse map.

	"""

	def __init__(self, letter: str, msg: str) -> None:
		self.letter = letter
		self.msg = msg

	def __str__(self) -> str:
		return f"invalid involution on letter {self.letter!r}: {self.msg}"


class UndeclaredLetter(InvalidInstance):
	"""
	Raised when a record uses a letter missing from the alphabet.

	"""

	def __init__(self, field: str, token: str) -> None:
		self.field = field
		self.token = token

	def __str__(self) -> str:
		return f"undeclared letter {self.token!r} in {self.field}"


class InvalidKappa(InvalidInstance):
	"""
	Raised when the minimum bonding length κ isn't a positive integer.

	"""

	def __init__(self, kappa: object) -> None:
		self.kappa = kappa

	def __str__(self) -> str:
		return f"kappa must be a positive integer, got {self.kappa!r}"


class IncompatibleAlphabets(InvalidInstance):
	"""
	Raised when combining automata defined over different alphabets.

	"""

	def __str__(self) -> str:
		return "automata are defined over different alphabets"


class LimitExceeded(HairpinError):
	"""
	Raised when a request exceeds a configured limit.

	Limits can be configured with environment variables, see :mod:`hairpin.limits`.

	"""

	def __init__(self, name: str, value: int, limit: int) -> None:
		self.name = name
		self.value = value
		self.limit = limit

	def __str__(self) -> str:
		return f"{self.name} = {self.value} exceeds limit ({self.limit})"


class CrossCheckFailed(HairpinError):
	"""
	Raised when two independent computations of the same quantity disagree.

	This indicates a bug. The command line interface exits with status 3.

	"""

	def __init__(self, checks: list[str]) -> None:
		self.checks = checks

	def __str__(self) -> str:
		return "cross-checks failed: " + ", ".join(self.checks)
