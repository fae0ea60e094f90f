"""Tolerance profile threaded through the numeric layers.

All thresholds are relative unless stated otherwise; location-dependent gates
scale by ``(1 + |z|)`` or by a coefficient bound ``max|c| * (1 + |z|)**deg``.
Defaults target desk-scale degrees (<= ~12) where conditioning is mild.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class TolProfile:
    residual: float = 1e-10      # accepted root residual vs coefficient bound
    cluster: float = 1e-7        # unconditional root clustering radius, *(1+|z|)
    reality: float = 1e-8        # snap-to-real-axis half width, *(1+|z|)
    sign: float = 1e-7           # margin for sign / genericity decisions
    pair: float = 1e-6           # acceptance gate for matched system roots
    multiplicity: float = 1e-7   # derivative-smallness gate for verified multiple roots
    multi_radius: float = 2e-3   # candidate scatter radius for multiple-root merging, *(1+|z|)
    division: float = 1e-8       # remainder bound for exact-division checks
    resultant_zero: float = 1e-9 # vanishing-resultant gate vs a Hadamard bound

    def with_overrides(self, **kwargs) -> "TolProfile":
        """Return a copy with any non-None keyword replaced."""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


DEFAULT_TOL = TolProfile()
