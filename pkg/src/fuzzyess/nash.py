"""Fuzzy Nash equilibrium degrees for two-player games.

A pure profile is an equilibrium to the degree that no unilateral
deviation looks better: the degree of profile (i, j) is the minimum, over
both players and all their alternative strategies, of the satisfaction
degree that the current payoff exceeds the deviation payoff.  A player
with a single strategy contributes no comparisons, so a 1x1 game has
degree 1 everywhere.

For a symmetric game the diagonal profile (i, i) simplifies to

    min over j != i of SF(payoff(i, i) > payoff(j, i))

which is also an upper bound for the evolutionary-stability membership of
i: the stability pipeline takes an infimum over positive mutant shares
whose share-0 seed is exactly the comparison above, so every membership is
dominated by the corresponding diagonal equilibrium degree.
:func:`verify_theorem1` checks that containment on a concrete game.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ess import fuzzy_ess
from .game import BiGame, SymGame, symmetrize
from .satisfaction import SFConfig, sf_greater

__all__ = [
    "NashReport",
    "TheoremCheck",
    "fuzzy_nash",
    "symmetric_nash_degrees",
    "verify_theorem1",
]

_DEFAULT = SFConfig()


@dataclass(frozen=True)
class NashReport:
    """Per-profile equilibrium degrees of a two-player game.

    ``degrees[i, j]`` covers the profile where player 1 plays their i-th
    strategy and player 2 their j-th.  ``symmetric_degrees`` carries the
    diagonal when both players share one strategy set, else None.
    """

    strategies1: tuple[str, ...]
    strategies2: tuple[str, ...]
    degrees: np.ndarray
    symmetric_degrees: np.ndarray | None

    def as_dict(self) -> dict:
        return {
            "strategies1": list(self.strategies1),
            "strategies2": list(self.strategies2),
            "degrees": self.degrees.tolist(),
            "symmetric_degrees": (
                None
                if self.symmetric_degrees is None
                else self.symmetric_degrees.tolist()
            ),
        }


def fuzzy_nash(game: BiGame | SymGame, cfg: SFConfig | None = None) -> NashReport:
    """Equilibrium degree of every pure strategy profile."""
    if isinstance(game, SymGame):
        game = symmetrize(game)
    cfg = cfg or _DEFAULT
    cfg.require_valid_combination()
    n1, n2 = game.shape
    degrees = np.ones((n1, n2))
    for i in range(n1):
        for j in range(n2):
            worst = 1.0
            own = game.payoff1[i][j]
            for k in range(n1):
                if k != i:
                    worst = min(worst, sf_greater(own, game.payoff1[k][j], cfg))
            own = game.payoff2[i][j]
            for l in range(n2):
                if l != j:
                    worst = min(worst, sf_greater(own, game.payoff2[i][l], cfg))
            degrees[i, j] = worst
    symmetric = None
    if game.strategies1 == game.strategies2:
        symmetric = degrees.diagonal().copy()
    return NashReport(
        strategies1=game.strategies1,
        strategies2=game.strategies2,
        degrees=degrees,
        symmetric_degrees=symmetric,
    )


def symmetric_nash_degrees(game: SymGame, cfg: SFConfig | None = None) -> np.ndarray:
    """Diagonal equilibrium degrees of a symmetric game, computed directly."""
    cfg = cfg or _DEFAULT
    cfg.require_valid_combination()
    n = game.size
    out = np.ones(n)
    for i in range(n):
        own = game.payoff[i][i]
        for j in range(n):
            if j != i:
                out[i] = min(out[i], sf_greater(own, game.payoff[j][i], cfg))
    return out


@dataclass(frozen=True)
class TheoremCheck:
    """Containment check: stability membership never exceeds Nash degree."""

    strategies: tuple[str, ...]
    nash_degrees: np.ndarray
    ess_memberships: np.ndarray
    margins: np.ndarray  # nash minus ess, should all be >= -tolerance
    passed: bool


def verify_theorem1(
    game: SymGame, cfg: SFConfig | None = None, tol: float = 1e-6
) -> TheoremCheck:
    """Check that the fuzzy ESS set sits inside the fuzzy equilibrium set."""
    cfg = cfg or _DEFAULT
    nash = symmetric_nash_degrees(game, cfg)
    ess = fuzzy_ess(game, cfg).memberships
    margins = nash - ess
    return TheoremCheck(
        strategies=game.strategies,
        nash_degrees=nash,
        ess_memberships=ess,
        margins=margins,
        passed=bool((margins >= -tol).all()),
    )
