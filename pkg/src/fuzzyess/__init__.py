"""Evolutionary stability and equilibrium degrees under fuzzy payoffs.

The package answers, for symmetric two-player games whose payoffs are
symmetric triangular fuzzy numbers, to what degree each pure strategy is
evolutionarily stable and to what degree each pure profile is a Nash
equilibrium.  Comparisons between fuzzy payoffs use a normalized
satisfaction function evaluated in closed form; everything degrades
gracefully to the classical crisp answers when the spreads are zero.
"""

from .fuzzy import TriFuzzy, add, membership, scale
from .numerics import (
    NumericError,
    PiecewisePoly,
    bisect,
    integrate_segments,
    prefix_min_scan,
)
from .satisfaction import (
    SFConfig,
    comparison_poly,
    sf_greater,
    sf_greater_oracle,
    sf_less,
)
from .game import (
    BiGame,
    GameFormatError,
    SymGame,
    as_symmetric_game,
    as_trifuzzy,
    as_two_player_game,
    fixture_path,
    load_fixture,
    parse_game,
    parse_game_file,
    prisoners_dilemma_game,
    random_symmetric_game,
    serialize_game,
    staghunt_game,
    symmetrize,
)
from .ess import (
    CrispEssReport,
    EssReport,
    crisp_ess_check,
    expected_incumbent,
    expected_mutant,
    fuzzy_ess,
    resistibility,
    sf_curve,
    stability_degree,
)
from .nash import (
    NashReport,
    TheoremCheck,
    fuzzy_nash,
    symmetric_nash_degrees,
    verify_theorem1,
)
from .estimators import FuzzyEss, FuzzyNash

__version__ = "0.1.0"

__all__ = [
    "TriFuzzy",
    "membership",
    "scale",
    "add",
    "NumericError",
    "PiecewisePoly",
    "integrate_segments",
    "bisect",
    "prefix_min_scan",
    "SFConfig",
    "sf_greater",
    "sf_less",
    "sf_greater_oracle",
    "comparison_poly",
    "GameFormatError",
    "SymGame",
    "BiGame",
    "parse_game",
    "parse_game_file",
    "serialize_game",
    "symmetrize",
    "as_trifuzzy",
    "as_symmetric_game",
    "as_two_player_game",
    "staghunt_game",
    "prisoners_dilemma_game",
    "random_symmetric_game",
    "fixture_path",
    "load_fixture",
    "EssReport",
    "CrispEssReport",
    "expected_incumbent",
    "expected_mutant",
    "sf_curve",
    "stability_degree",
    "resistibility",
    "fuzzy_ess",
    "crisp_ess_check",
    "NashReport",
    "TheoremCheck",
    "fuzzy_nash",
    "symmetric_nash_degrees",
    "verify_theorem1",
    "FuzzyEss",
    "FuzzyNash",
    "__version__",
]
