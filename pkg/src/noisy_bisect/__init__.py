"""Binary search with a comparator that points the wrong way at a fixed rate.

The package evaluates closed-form expected-error formulas for this search,
computes the exact expectation by walking the search's interval tree, and
estimates it by seeded Monte Carlo simulation.
"""

from noisy_bisect.bounds import (
    BoundReport,
    a_recurrence,
    b_recurrence,
    bound_report,
    lemma1_bound,
    lemma2_value,
)
from noisy_bisect.exact import (
    DEFAULT_CAP,
    ExactErrorReport,
    OracleTooLarge,
    brute_force_expected_error,
    exact_average_error,
    exact_expected_error,
)
from noisy_bisect.model import (
    Decision,
    Direction,
    SearchOutcome,
    SearchParams,
    noisy_compare,
    run_noisy_search,
)
from noisy_bisect.montecarlo import (
    Fixed,
    MonteCarloEstimate,
    UniformRandom,
    monte_carlo,
    run_trial,
)
from noisy_bisect.rng import SplitMix64, substream_seed

__all__ = [
    "BoundReport",
    "DEFAULT_CAP",
    "Decision",
    "Direction",
    "ExactErrorReport",
    "Fixed",
    "MonteCarloEstimate",
    "OracleTooLarge",
    "SearchOutcome",
    "SearchParams",
    "SplitMix64",
    "UniformRandom",
    "a_recurrence",
    "b_recurrence",
    "bound_report",
    "brute_force_expected_error",
    "exact_average_error",
    "exact_expected_error",
    "lemma1_bound",
    "lemma2_value",
    "monte_carlo",
    "noisy_compare",
    "run_noisy_search",
    "run_trial",
    "substream_seed",
]
