"""Defaults used by the randomized checks, the CLI and the self-test."""

DEFAULT_SEED = 20190601

# exhaustive window for bicyclic checks (exponents 0..W)
BICYCLIC_WINDOW = 30

# points per coordinate beyond the base in filter-window oracles
FILTER_WINDOW = 8
