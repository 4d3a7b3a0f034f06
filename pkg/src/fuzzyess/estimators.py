"""Scikit-learn style estimators wrapping the solver pipelines.

Both estimators accept anything the validation helpers in
:mod:`fuzzyess.game` understand: game objects, parsed JSON mappings,
numeric ``(n, n)`` matrices of crisp payoffs, ``(n, n, 2)`` arrays of
(center, half_width) pairs, or nested sequences mixing the entry forms.
Hyperparameters mirror :class:`~fuzzyess.satisfaction.SFConfig`, so
``get_params`` / ``set_params`` / ``clone`` compose with the usual tooling.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .ess import fuzzy_ess
from .game import as_symmetric_game, as_two_player_game
from .nash import fuzzy_nash
from .satisfaction import SFConfig

__all__ = ["FuzzyEss", "FuzzyNash"]


class _ConfiguredEstimator(BaseEstimator):
    def __init__(
        self,
        tnorm: str = "product",
        mode: str = "exact",
        grid_resolution: int = 2048,
        tolerance: float = 1e-9,
        crossing_tolerance: float = 1e-6,
    ):
        self.tnorm = tnorm
        self.mode = mode
        self.grid_resolution = grid_resolution
        self.tolerance = tolerance
        self.crossing_tolerance = crossing_tolerance

    def _config(self) -> SFConfig:
        cfg = SFConfig(
            tnorm=self.tnorm,
            mode=self.mode,
            grid_resolution=self.grid_resolution,
            tolerance=self.tolerance,
            crossing_tolerance=self.crossing_tolerance,
        )
        cfg.require_valid_combination()
        return cfg

    def _require_fitted(self, attr: str) -> None:
        if not hasattr(self, attr):
            raise NotFittedError(
                f"This {type(self).__name__} instance is not fitted yet; "
                "call fit first"
            )


class FuzzyEss(_ConfiguredEstimator):
    """Evolutionary-stability memberships of a symmetric fuzzy game.

    Parameters
    ----------
    tnorm : {"product", "min"}, default="product"
        T-norm combining the two memberships in every comparison.
    mode : {"exact", "grid"}, default="exact"
        Closed-form integration or grid quadrature ("min" requires "grid").
    grid_resolution : int, default=2048
        Samples per unit interval for curves and quadrature.
    tolerance : float, default=1e-9
        Numeric slack for exact-mode comparisons.
    crossing_tolerance : float, default=1e-6
        Absolute tolerance when locating stability crossings.

    Attributes
    ----------
    strategies_ : tuple of str
    memberships_ : ndarray of shape (n,)
        Degree to which each strategy is evolutionarily stable.
    resistibility_ : ndarray of shape (n, n)
        Pairwise stability degrees, NaN diagonal.
    ranking_ : tuple of str
        Strategies ordered by decreasing membership.
    report_ : EssReport
        The full pipeline output, including diagnostics.
    """

    def fit(self, X, y=None):
        game = as_symmetric_game(X)
        report = fuzzy_ess(game, self._config())
        self.strategies_ = report.strategies
        self.memberships_ = report.memberships
        self.resistibility_ = report.resistibility
        self.ranking_ = report.ranking
        self.report_ = report
        return self

    def membership(self, strategy: str) -> float:
        """Fitted membership of one strategy, addressed by name."""
        self._require_fitted("report_")
        return self.report_.membership(strategy)


class FuzzyNash(_ConfiguredEstimator):
    """Equilibrium degrees of every pure profile of a two-player game.

    Accepts symmetric or bimatrix input; symmetric games are expanded so
    both players face the same incentives.  Shares the hyperparameters of
    :class:`FuzzyEss`.

    Attributes
    ----------
    strategies1_, strategies2_ : tuple of str
    degrees_ : ndarray of shape (n1, n2)
        Equilibrium degree of each pure strategy profile.
    symmetric_degrees_ : ndarray of shape (n,) or None
        Diagonal degrees when both players share a strategy set.
    report_ : NashReport
    """

    def fit(self, X, y=None):
        game = as_two_player_game(X)
        report = fuzzy_nash(game, self._config())
        self.strategies1_ = report.strategies1
        self.strategies2_ = report.strategies2
        self.degrees_ = report.degrees
        self.symmetric_degrees_ = report.symmetric_degrees
        self.report_ = report
        return self

    def degree(self, strategy1: str, strategy2: str) -> float:
        """Fitted degree of one profile, addressed by strategy names."""
        self._require_fitted("report_")
        i = self.strategies1_.index(strategy1)
        j = self.strategies2_.index(strategy2)
        return float(np.asarray(self.degrees_)[i, j])
