from __future__ import annotations

# Importing the typing module would conflict with hairpin.typing.
from typing import TYPE_CHECKING

from .imports import lazy_import
from .version import version as __version__  # noqa: F401


__all__ = [
	# .alphabet
	"InvolutiveAlphabet",
	"canonical_order",
	# .automata
	"Dfa",
	"Nfa",
	"determinize",
	"intersect",
	"reverse_complement_acceptor",
	"trim",
	# .bridges
	"Bridge",
	"BridgeNfa",
	"PairLanguage",
	"build_bridge_nfa",
	"compute_bridges",
	"extract_pair_languages",
	# .checks
	"run_checks",
	# .decider
	"Fired",
	"Orientation",
	"RegularityVerdict",
	"Verdict",
	"Witness",
	"decide",
	"validate_witness",
	# .exceptions
	"CrossCheckFailed",
	"HairpinError",
	"IncompatibleAlphabets",
	"InvalidInstance",
	"InvalidInvolution",
	"InvalidKappa",
	"LimitExceeded",
	"MalformedInstance",
	"UndeclaredLetter",
	# .grammar
	"LinearGrammar",
	"build_grammar",
	"count_by_length",
	"count_derivations",
	"enumerate_grammar",
	# .growth
	"Formable",
	"GrowthClass",
	"GrowthKind",
	"GrowthReport",
	"growth_indicator",
	"growth_report",
	"prefix_closure",
	"restrict_hairpin_formable",
	# .instance_file
	"dump_instance",
	"parse_instance",
	"parse_instance_text",
	# .oracle
	"HairpinInstance",
	"membership",
	"minimal_gamma_alpha_prefix",
	"oracle_hairpin_set",
	# .series
	"RationalSeries",
	"generating_function",
	"grammar_generating_function",
	"pair_series",
	# .typing
	"Letter",
	"LoggerLike",
	"State",
	"Word",
]

# When type checking, import everything eagerly. Else, import on demand so
# that numpy and sympy load only for growth analysis.
if TYPE_CHECKING:
	from .alphabet import InvolutiveAlphabet, canonical_order
	from .automata import Dfa, Nfa, determinize, intersect, reverse_complement_acceptor, trim
	from .bridges import (
		Bridge,
		BridgeNfa,
		PairLanguage,
		build_bridge_nfa,
		compute_bridges,
		extract_pair_languages,
	)
	from .checks import run_checks
	from .decider import (
		Fired,
		Orientation,
		RegularityVerdict,
		Verdict,
		Witness,
		decide,
		validate_witness,
	)
	from .exceptions import (
		CrossCheckFailed,
		HairpinError,
		IncompatibleAlphabets,
		InvalidInstance,
		InvalidInvolution,
		InvalidKappa,
		LimitExceeded,
		MalformedInstance,
		UndeclaredLetter,
	)
	from .grammar import (
		LinearGrammar,
		build_grammar,
		count_by_length,
		count_derivations,
		enumerate_grammar,
	)
	from .growth import (
		Formable,
		GrowthClass,
		GrowthKind,
		GrowthReport,
		growth_indicator,
		growth_report,
		prefix_closure,
		restrict_hairpin_formable,
	)
	from .instance_file import dump_instance, parse_instance, parse_instance_text
	from .oracle import HairpinInstance, membership, minimal_gamma_alpha_prefix, oracle_hairpin_set
	from .series import RationalSeries, generating_function, grammar_generating_function, pair_series
	from .typing import Letter, LoggerLike, State, Word

else:
	lazy_import(
		globals(),
		aliases={
			# .alphabet
			"InvolutiveAlphabet": ".alphabet",
			"canonical_order": ".alphabet",
			# .automata
			"Dfa": ".automata",
			"Nfa": ".automata",
			"determinize": ".automata",
			"intersect": ".automata",
			"reverse_complement_acceptor": ".automata",
			"trim": ".automata",
			# .bridges
			"Bridge": ".bridges",
			"BridgeNfa": ".bridges",
			"PairLanguage": ".bridges",
			"build_bridge_nfa": ".bridges",
			"compute_bridges": ".bridges",
			"extract_pair_languages": ".bridges",
			# .checks
			"run_checks": ".checks",
			# .decider
			"Fired": ".decider",
			"Orientation": ".decider",
			"RegularityVerdict": ".decider",
			"Verdict": ".decider",
			"Witness": ".decider",
			"decide": ".decider",
			"validate_witness": ".decider",
			# .exceptions
			"CrossCheckFailed": ".exceptions",
			"HairpinError": ".exceptions",
			"IncompatibleAlphabets": ".exceptions",
			"InvalidInstance": ".exceptions",
			"InvalidInvolution": ".exceptions",
			"InvalidKappa": ".exceptions",
			"LimitExceeded": ".exceptions",
			"MalformedInstance": ".exceptions",
			"UndeclaredLetter": ".exceptions",
			# .grammar
			"LinearGrammar": ".grammar",
			"build_grammar": ".grammar",
			"count_by_length": ".grammar",
			"count_derivations": ".grammar",
			"enumerate_grammar": ".grammar",
			# .growth
			"Formable": ".growth",
			"GrowthClass": ".growth",
			"GrowthKind": ".growth",
			"GrowthReport": ".growth",
			"growth_indicator": ".growth",
			"growth_report": ".growth",
			"prefix_closure": ".growth",
			"restrict_hairpin_formable": ".growth",
			# .instance_file
			"dump_instance": ".instance_file",
			"parse_instance": ".instance_file",
			"parse_instance_text": ".instance_file",
			# .oracle
			"HairpinInstance": ".oracle",
			"membership": ".oracle",
			"minimal_gamma_alpha_prefix": ".oracle",
			"oracle_hairpin_set": ".oracle",
			# .series
			"RationalSeries": ".series",
			"generating_function": ".series",
			"grammar_generating_function": ".series",
			"pair_series": ".series",
			# .typing
			"Letter": ".typing",
			"LoggerLike": ".typing",
			"State": ".typing",
			"Word": ".typing",
		},
	)
