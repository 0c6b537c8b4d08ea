"""Run configuration and cache location."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

#: Height to which the Riemann hypothesis is taken as verified: the 10^13-zero
#: computation puts every zero ordinate below A on the critical line.  Trusted
#: input, overridable everywhere it is used.
A_DEFAULT = 2_445_999_556_030.342362641

#: Constant of the zero-free region beta < 1 - 1/(R0 log|t|).
KADIRI_R0 = 5.69693

#: Fixed cutoff for the tabulated-zero block; exactly 620 zero ordinates lie
#: below it and their reciprocal |rho| sum stays under 2.
FIXED_D = 963.5670402

CACHE_ENV = "CHEBYBOUND_CACHE_DIR"


def cache_dir() -> Path:
    """Zero tables are cached here; override with $CHEBYBOUND_CACHE_DIR."""
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "chebybound"


@dataclass
class RunConfig:
    """Bundle of knobs shared by the CLI commands."""

    height: float = 1000.0          # zero-table height
    limit: int = 10**9              # sieve limit
    A: float = A_DEFAULT
    D: float = FIXED_D
    b_grid: list[float] = field(default_factory=list)  # empty -> bundled grid
    out_dir: Path = Path("out")
    mode: str = "certified"         # "certified" | "reference"
    figures: bool = True

    MAX_LIMIT = 10**10

    def validate(self) -> None:
        if not 14.0 < self.height:
            raise ValueError(f"height must exceed 14, got {self.height}")
        if not 2 <= self.limit <= self.MAX_LIMIT:
            raise ValueError(f"limit must be in [2, {self.MAX_LIMIT}], got {self.limit}")
        if self.mode not in ("certified", "reference"):
            raise ValueError(f"mode must be 'certified' or 'reference', got {self.mode!r}")
        if not 2.0 <= self.D <= self.A:
            raise ValueError(f"D must lie in [2, A], got {self.D}")
