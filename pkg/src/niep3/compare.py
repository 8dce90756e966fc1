"""Side-by-side run of the three constructions with a condition preamble."""

from __future__ import annotations

from dataclasses import dataclass, field

from .laffey import find_min_laffey
from .multiblock import find_min_multiblock
from .results import Method, NotFoundUpToCap, RealizationResult
from .shifted import find_min_shifted_companion
from .spectrum import (
    Spectrum3,
    check_n3_companion,
    check_rho_ge_2a,
    minimal_jll_dimension,
)


@dataclass(frozen=True)
class MethodCaps:
    """Per-method search ceilings: zeros for the shift method, dimension for
    the power-sum method, block count for the multi-block method."""

    shifted: int = 512
    laffey: int = 512
    multiblock: int = 16


@dataclass(frozen=True)
class ComparisonTable:
    """Everything compare_methods learned, ready for rendering."""

    sigma: Spectrum3
    conditions: tuple  # ConditionReports common to all methods
    jll_min_dimension: int | None  # least n passing every moment condition
    caps: MethodCaps
    outcomes: tuple  # (Method, RealizationResult | NotFoundUpToCap) pairs

    def best(self) -> RealizationResult | None:
        """The found result with the fewest zeros, ties broken by scan order."""
        winner = None
        for _, outcome in self.outcomes:
            if outcome.found and (
                winner is None or outcome.zeros_added < winner.zeros_added
            ):
                winner = outcome
        return winner


def compare_methods(sigma: Spectrum3, caps: MethodCaps | None = None) -> ComparisonTable:
    """Run every find_min search and the shared condition checks.

    The searches run sequentially in a fixed order so the table is
    deterministic for a given spectrum, caps, backend, and precision.
    """
    caps = caps or MethodCaps()
    conditions = (check_n3_companion(sigma), check_rho_ge_2a(sigma))
    jll_min = minimal_jll_dimension(sigma)
    outcomes = (
        (Method.SHIFTED_COMPANION, find_min_shifted_companion(sigma, caps.shifted)),
        (Method.LAFFEY, find_min_laffey(sigma, caps.laffey)),
        (Method.MULTI_BLOCK, find_min_multiblock(sigma, caps.multiblock)),
    )
    return ComparisonTable(
        sigma=sigma,
        conditions=conditions,
        jll_min_dimension=jll_min,
        caps=caps,
        outcomes=outcomes,
    )
