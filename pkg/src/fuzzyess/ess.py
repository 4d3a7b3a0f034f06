"""Evolutionary stability degrees for symmetric fuzzy games.

For an incumbent strategy i challenged by a mutant j present at share eps,
the two sides earn fuzzy expected payoffs

    E_inc(eps) = (1 - eps) * payoff(i, i) + eps * payoff(i, j)
    E_mut(eps) = (1 - eps) * payoff(j, i) + eps * payoff(j, j)

and s(eps) = SF(E_inc > E_mut) measures how credibly the incumbent stays
ahead.  The stability degree up to a share cap is the infimum of s over
(0, cap); the resistibility r(i, j) is the best achievable balance

    r(i, j) = sup over cap in (0, 1] of min(stability(cap), cap),

a number in [0, 1] that acts as the membership of i in the fuzzy set of
evolutionarily stable strategies with respect to mutant j.  The overall
membership of i is the minimum of r(i, j) over all rivals j.

s is sampled on a uniform grid (no monotonicity is assumed; a running
prefix-minimum handles dips), the sup/min balance point is bracketed on
that grid and narrowed by subdividing the bracket until it is below the
configured crossing tolerance.  When all four payoffs of a pair are crisp,
s is a step function and everything is resolved analytically instead.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from .fuzzy import TriFuzzy, add, scale
from .game import SymGame
from .numerics import NumericError
from .satisfaction import SFConfig, _sf_product_exact_batch, sf_greater

__all__ = [
    "EssReport",
    "CrispEssReport",
    "expected_incumbent",
    "expected_mutant",
    "sf_curve",
    "stability_degree",
    "resistibility",
    "fuzzy_ess",
    "crisp_ess_check",
]

_DEFAULT = SFConfig()


def _strategy_index(game: SymGame, key) -> int:
    if isinstance(key, str):
        return game.index(key)
    idx = int(key)
    if idx != key or not 0 <= idx < game.size:
        raise ValueError(f"strategy index {key!r} out of range for size {game.size}")
    return idx


def _check_pair(game: SymGame, i, j) -> tuple[int, int]:
    i, j = _strategy_index(game, i), _strategy_index(game, j)
    if i == j:
        raise ValueError("incumbent and mutant must be distinct strategies")
    return i, j


def _check_share(eps: float) -> float:
    eps = float(eps)
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"mutant share must lie in [0, 1], got {eps}")
    return eps


def expected_incumbent(game: SymGame, i, j, eps: float) -> TriFuzzy:
    """Fuzzy payoff an i-incumbent expects when mutants j hold share eps."""
    i, j = _check_pair(game, i, j)
    eps = _check_share(eps)
    return add(
        scale(game.payoff[i][i], 1.0 - eps), scale(game.payoff[i][j], eps)
    )


def expected_mutant(game: SymGame, i, j, eps: float) -> TriFuzzy:
    """Fuzzy payoff a j-mutant expects in a population of i at share eps."""
    i, j = _check_pair(game, i, j)
    eps = _check_share(eps)
    return add(
        scale(game.payoff[j][i], 1.0 - eps), scale(game.payoff[j][j], eps)
    )


class _PairCurve:
    """s(eps) for one ordered (incumbent, mutant) pair, batch-evaluable."""

    def __init__(self, game: SymGame, i: int, j: int):
        pii, pij = game.payoff[i][i], game.payoff[i][j]
        pji, pjj = game.payoff[j][i], game.payoff[j][j]
        self.inc_ends = (pii, pij)  # expected incumbent payoff at eps 0 and 1
        self.mut_ends = (pji, pjj)
        self.crisp = all(
            p.half_width == 0.0 for p in (pii, pij, pji, pjj)
        )
        # center differences at the two ends of the share interval
        self.d0 = pii.center - pji.center
        self.d1 = pij.center - pjj.center

    def values(self, eps, cfg: SFConfig) -> np.ndarray:
        eps = np.asarray(eps, dtype=float)
        pii, pij = self.inc_ends
        pji, pjj = self.mut_ends
        com = 1.0 - eps
        if cfg.mode == "exact" and cfg.tnorm == "product":
            d = (com * pii.center + eps * pij.center) - (
                com * pji.center + eps * pjj.center
            )
            alpha = com * pii.half_width + eps * pij.half_width
            beta = com * pji.half_width + eps * pjj.half_width
            return _sf_product_exact_batch(d, alpha, beta)
        out = np.empty(eps.shape, dtype=float)
        for k, e in np.ndenumerate(eps):
            inc = add(scale(pii, 1.0 - e), scale(pij, e))
            mut = add(scale(pji, 1.0 - e), scale(pjj, e))
            out[k] = sf_greater(inc, mut, cfg)
        return out


def sf_curve(game: SymGame, i, j, cfg: SFConfig | None = None) -> Callable[[float], float]:
    """Evaluator for s(eps) = SF(incumbent payoff > mutant payoff)."""
    i, j = _check_pair(game, i, j)
    cfg = cfg or _DEFAULT
    cfg.require_valid_combination()
    curve = _PairCurve(game, i, j)

    def s(eps: float) -> float:
        return float(curve.values(_check_share(eps), cfg))

    return s


def _crisp_stability(d0: float, d1: float, eps_bar: float) -> float:
    # s is a step function of the sign of (1-eps)*d0 + eps*d1; the infimum
    # over (0, eps_bar) follows from where the sign changes
    if d0 < 0.0:
        return 0.0
    if d0 == 0.0:
        return 1.0 if d1 > 0.0 else (0.5 if d1 == 0.0 else 0.0)
    if d1 >= 0.0:
        return 1.0
    root = d0 / (d0 - d1)
    return 1.0 if eps_bar <= root else 0.0


def _crisp_resistibility(d0: float, d1: float) -> float:
    if d0 > 0.0:
        return 1.0 if d1 >= 0.0 else d0 / (d0 - d1)
    if d0 == 0.0:
        return 1.0 if d1 > 0.0 else (0.5 if d1 == 0.0 else 0.0)
    return 0.0


def stability_degree(
    game: SymGame, i, j, eps_bar: float, cfg: SFConfig | None = None
) -> float:
    """Infimum of s over mutant shares in (0, eps_bar).

    Grid-sampled with a prefix minimum; the share-0 limit participates as
    the seed, and crisp pairs are resolved from the step structure exactly.
    """
    i, j = _check_pair(game, i, j)
    eps_bar = float(eps_bar)
    if not 0.0 < eps_bar <= 1.0:
        raise ValueError(f"share cap must lie in (0, 1], got {eps_bar}")
    cfg = cfg or _DEFAULT
    cfg.require_valid_combination()
    curve = _PairCurve(game, i, j)
    if curve.crisp:
        return _crisp_stability(curve.d0, curve.d1, eps_bar)
    eps = np.linspace(0.0, eps_bar, cfg.grid_resolution + 1)
    return float(curve.values(eps, cfg).min())


def _solve_crossing(curve: _PairCurve, cfg: SFConfig) -> tuple[float, float]:
    """Balance point of min(stability(cap), cap) for a non-crisp pair.

    Returns (r, s(0)).  The prefix-minimum of the sampled curve is
    nonincreasing while the identity rises, so their crossing is bracketed
    by a scan and then narrowed by 64-way subdivision; the final bracket is
    smaller than the crossing tolerance, and a secant step inside it
    polishes the answer.
    """
    n = cfg.grid_resolution
    eps = np.linspace(0.0, 1.0, n + 1)
    svals = curve.values(eps, cfg)
    mu = np.minimum.accumulate(svals)
    sf_at_zero = float(svals[0])
    if mu[-1] >= 1.0 - cfg.tolerance:
        return 1.0, sf_at_zero
    below = mu[1:] < eps[1:]
    if not below.any():  # cannot happen: mu[-1] < 1 = eps[-1]
        raise NumericError("stability/identity crossing not bracketed")
    k = int(np.argmax(below)) + 1
    lo, mu_lo = float(eps[k - 1]), float(mu[k - 1])
    hi, mu_hi = float(eps[k]), float(mu[k])
    while hi - lo > cfg.crossing_tolerance:
        sub = np.linspace(lo, hi, 65)[1:]
        run = np.minimum(mu_lo, np.minimum.accumulate(curve.values(sub, cfg)))
        idx = int(np.argmax(run < sub))  # run[-1] <= mu_hi < hi keeps this valid
        if idx > 0:
            lo, mu_lo = float(sub[idx - 1]), float(run[idx - 1])
        hi, mu_hi = float(sub[idx]), float(run[idx])
    gap_lo = mu_lo - lo
    gap_hi = mu_hi - hi
    if gap_lo <= 0.0:
        return max(lo, 0.0), sf_at_zero
    r = lo + (hi - lo) * gap_lo / (gap_lo - gap_hi)
    return float(np.clip(r, 0.0, 1.0)), sf_at_zero


def resistibility(game: SymGame, i, j, cfg: SFConfig | None = None) -> float:
    """Membership of i in the set of strategies stable against mutant j."""
    i, j = _check_pair(game, i, j)
    cfg = cfg or _DEFAULT
    cfg.require_valid_combination()
    curve = _PairCurve(game, i, j)
    if curve.crisp:
        return _crisp_resistibility(curve.d0, curve.d1)
    r, _ = _solve_crossing(curve, cfg)
    return r


@dataclass(frozen=True)
class EssReport:
    """Full output of the stability pipeline on one symmetric game.

    ``resistibility[i, j]`` is r(i, j) with NaN on the diagonal;
    ``memberships[i]`` is its row minimum over rivals.  ``sf_at_zero`` and
    ``crossing`` are per-pair diagnostics: the satisfaction degree in the
    vanishing-mutant limit, and the share cap where the sup/min balance is
    struck (equal to the resistibility; 1.0 marks pairs whose stability
    never dips below the cap).  ``ranking`` sorts strategies by decreasing
    membership, ties broken by matrix order.
    """

    strategies: tuple[str, ...]
    memberships: np.ndarray
    resistibility: np.ndarray
    ranking: tuple[str, ...]
    sf_at_zero: np.ndarray
    crossing: np.ndarray

    def membership(self, strategy: str) -> float:
        return float(self.memberships[self.strategies.index(strategy)])

    def as_dict(self) -> dict:
        return {
            "strategies": list(self.strategies),
            "memberships": self.memberships.tolist(),
            "resistibility": self.resistibility.tolist(),
            "ranking": list(self.ranking),
            "sf_at_zero": self.sf_at_zero.tolist(),
            "crossing": self.crossing.tolist(),
        }


def fuzzy_ess(game: SymGame, cfg: SFConfig | None = None) -> EssReport:
    """Resistibility matrix, memberships, and ranking for every strategy."""
    cfg = cfg or _DEFAULT
    cfg.require_valid_combination()
    n = game.size
    res = np.full((n, n), np.nan)
    sf0 = np.full((n, n), np.nan)
    cross = np.full((n, n), np.nan)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            curve = _PairCurve(game, i, j)
            if curve.crisp:
                r = _crisp_resistibility(curve.d0, curve.d1)
                s0 = 1.0 if curve.d0 > 0 else (0.5 if curve.d0 == 0 else 0.0)
            else:
                r, s0 = _solve_crossing(curve, cfg)
            res[i, j] = r
            sf0[i, j] = s0
            cross[i, j] = r
    off_diag = np.where(np.eye(n, dtype=bool), np.inf, res)
    memberships = off_diag.min(axis=1)
    order = sorted(range(n), key=lambda k: (-memberships[k], k))
    return EssReport(
        strategies=game.strategies,
        memberships=memberships,
        resistibility=res,
        ranking=tuple(game.strategies[k] for k in order),
        sf_at_zero=sf0,
        crossing=cross,
    )


@dataclass(frozen=True)
class CrispEssReport:
    """Classical stability analysis of an all-crisp game.

    ``barriers[i, j]`` is the supremum of invasion barriers protecting i
    from j (NaN when no barrier exists), ``is_ess`` flags strategies with a
    barrier against every rival, and ``resistibility`` repeats the fuzzy
    pipeline's answer, which the constructor cross-checks against the
    barrier values.
    """

    strategies: tuple[str, ...]
    is_ess: tuple[bool, ...]
    barriers: np.ndarray
    resistibility: np.ndarray


def crisp_ess_check(game: SymGame, cfg: SFConfig | None = None) -> CrispEssReport:
    """Analytic stability classification for crisp games.

    A barrier against mutant j exists when the incumbent strictly wins at
    vanishing shares, or ties there and strictly wins among mutants; the
    fuzzy pipeline must then report exactly the barrier supremum, 0.5 for
    pairs with identical payoff lines, and 0 otherwise.
    """
    if not game.is_crisp:
        raise ValueError("crisp_ess_check requires every payoff to be crisp")
    n = game.size
    centers = game.centers()
    barriers = np.full((n, n), np.nan)
    expected = np.full((n, n), np.nan)
    actual = np.full((n, n), np.nan)
    exists = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            d0 = centers[i, i] - centers[j, i]
            d1 = centers[i, j] - centers[j, j]
            if d0 > 0.0:
                exists[i, j] = True
                barriers[i, j] = 1.0 if d1 >= 0.0 else d0 / (d0 - d1)
            elif d0 == 0.0 and d1 > 0.0:
                exists[i, j] = True
                barriers[i, j] = 1.0
            expected[i, j] = (
                barriers[i, j]
                if exists[i, j]
                else (0.5 if d0 == 0.0 and d1 == 0.0 else 0.0)
            )
            actual[i, j] = resistibility(game, i, j, cfg)
    if not np.allclose(expected, actual, rtol=0.0, atol=1e-12, equal_nan=True):
        raise NumericError(
            "fuzzy pipeline disagrees with the analytic barrier values"
        )
    is_ess = tuple(
        bool(all(exists[i, j] for j in range(n) if j != i)) for i in range(n)
    )
    return CrispEssReport(
        strategies=game.strategies,
        is_ess=is_ess,
        barriers=barriers,
        resistibility=actual,
    )
