from __future__ import annotations

import os


__all__ = [
	"MAX_LEN",
	"MAX_KAPPA",
	"TOLERANCE",
	"MAX_ITERATIONS",
	"REPORT_TOLERANCE",
]


# Word enumeration (oracle, grammar, CLI) is exponential in the length.
# 14 keeps desk-scale runs within seconds on four letters.
MAX_LEN = int(os.environ.get("HPC_MAX_LEN", "14"))

# Rules of the shape R -> α B ᾱ and the restriction patterns carry a |Σ|^κ factor.
MAX_KAPPA = int(os.environ.get("HPC_MAX_KAPPA", "4"))

# Convergence threshold of the power iteration between two successive estimates.
TOLERANCE = float(os.environ.get("HPC_TOLERANCE", "1e-9"))

# Iteration cap of the power iteration; hitting it widens the reported tolerance.
MAX_ITERATIONS = int(os.environ.get("HPC_MAX_ITERATIONS", "100_000"))

# Comparisons between growth indicators in reports.
REPORT_TOLERANCE = float(os.environ.get("HPC_REPORT_TOLERANCE", "1e-6"))
