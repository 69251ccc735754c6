"""Size caps for the exponential workloads.

Every enumeration in this package is exponential in the universe size, so
each entry point takes an optional explicit cap and otherwise falls back to
a conservative default.  Setting the environment variable PBCI_MAX_SIZE
overrides all defaults at once; an explicit argument always wins.
"""

from __future__ import annotations

import os

UNIVERSE_CAP = 64   # validate() refuses larger tables
ENUM_CAP = 12       # derivation-operator enumeration (backtracking over n^n maps)
DS_CAP = 16         # deductive-system enumeration (2^n subsets)
SEARCH_CAP = 6      # model search (n^(2(n-1)(n-2)) table pairs)

ENV_VAR = "PBCI_MAX_SIZE"


def effective_cap(explicit: int | None, default: int) -> int:
    """Resolve a cap: explicit argument, then PBCI_MAX_SIZE, then default."""
    if explicit is not None:
        return explicit
    env = os.environ.get(ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be an integer, got {env!r}") from None
    return default
