import numpy as np
import pytest

from fuzzyess import (
    BiGame,
    SFConfig,
    TriFuzzy,
    fuzzy_ess,
    fuzzy_nash,
    random_symmetric_game,
    symmetric_nash_degrees,
    symmetrize,
    verify_theorem1,
)
from fuzzyess.game import as_symmetric_game


class TestSymmetricDegrees:
    def test_table1_diagonal(self, table1, cfg):
        got = symmetric_nash_degrees(table1, cfg)
        assert got == pytest.approx([0.958, 0.0, 0.989], abs=0.002)
        # two of the three are exact fractions of the closed-form integral
        assert got[0] == pytest.approx(23 / 24, abs=1e-9)
        assert got[2] == pytest.approx(95 / 96, abs=1e-9)
        assert got[1] == 0.0

    def test_table2_diagonal(self, table2, cfg):
        got = symmetric_nash_degrees(table2, cfg)
        assert got == pytest.approx([0.5, 0.854, 0.958], abs=0.002)

    def test_matches_full_profile_matrix_exactly(self, table1, table2, cfg):
        for game in (table1, table2):
            direct = symmetric_nash_degrees(game, cfg)
            report = fuzzy_nash(symmetrize(game), cfg)
            assert report.symmetric_degrees is not None
            assert direct.tolist() == report.degrees.diagonal().tolist()
            assert direct.tolist() == report.symmetric_degrees.tolist()


class TestFuzzyNash:
    def test_accepts_symmetric_game_directly(self, table1, cfg):
        assert (
            fuzzy_nash(table1, cfg).degrees.tolist()
            == fuzzy_nash(symmetrize(table1), cfg).degrees.tolist()
        )

    def test_degrees_within_unit_interval(self, cfg):
        rng = np.random.default_rng(41)
        for _ in range(5):
            report = fuzzy_nash(random_symmetric_game(rng, 3), cfg)
            assert (report.degrees >= 0.0).all()
            assert (report.degrees <= 1.0).all()

    def test_identical_payoffs_score_half_everywhere(self, cfg):
        f = TriFuzzy(1, 1)
        game = BiGame(
            ("a", "b"), ("x", "y"), ((f, f), (f, f)), ((f, f), (f, f))
        )
        report = fuzzy_nash(game, cfg)
        assert report.degrees.tolist() == [[0.5, 0.5], [0.5, 0.5]]
        # strategy sets differ, so no diagonal is reported
        assert report.symmetric_degrees is None

    def test_single_strategy_players_trivially_stable(self, cfg):
        game = BiGame(
            ("only",), ("only",), ((TriFuzzy(1, 1),),), ((TriFuzzy(2, 1),),)
        )
        report = fuzzy_nash(game, cfg)
        assert report.degrees.tolist() == [[1.0]]
        assert report.symmetric_degrees.tolist() == [1.0]

    def test_asymmetric_bimatrix(self, cfg):
        # player 1 strictly prefers the first row, player 2 the second column
        game = BiGame(
            ("r1", "r2"),
            ("c1", "c2"),
            ((TriFuzzy(9), TriFuzzy(9)), (TriFuzzy(1), TriFuzzy(1))),
            ((TriFuzzy(1), TriFuzzy(9)), (TriFuzzy(1), TriFuzzy(9))),
        )
        deg = fuzzy_nash(game, cfg).degrees
        assert deg[0, 1] == 1.0
        assert deg[0, 0] == 0.0
        assert deg[1, 1] == 0.0

    def test_as_dict_shapes(self, table1, cfg):
        doc = fuzzy_nash(table1, cfg).as_dict()
        assert doc["strategies1"] == ["s1", "s2", "s3"]
        assert len(doc["degrees"]) == 3
        assert len(doc["symmetric_degrees"]) == 3


class TestTheorem:
    def test_fixture_games_pass(self, table1, table2, cfg):
        for game in (table1, table2):
            check = verify_theorem1(game, cfg)
            assert check.passed
            assert (check.margins >= -1e-6).all()

    def test_reports_both_sides(self, table1, cfg):
        check = verify_theorem1(table1, cfg)
        assert check.nash_degrees == pytest.approx([0.958, 0, 0.989], abs=0.002)
        assert check.ess_memberships == pytest.approx(
            [0.397, 0, 0.603], abs=0.002
        )
        assert check.margins == pytest.approx(
            check.nash_degrees - check.ess_memberships, abs=0
        )

    def test_equality_on_all_equal_game(self, cfg):
        game = as_symmetric_game([[[2, 1], [2, 1]], [[2, 1], [2, 1]]])
        check = verify_theorem1(game, cfg)
        assert check.nash_degrees == pytest.approx([0.5, 0.5], abs=0)
        assert check.ess_memberships == pytest.approx([0.5, 0.5], abs=1e-6)
        assert check.passed

    def test_random_games_contain(self, cfg):
        rng = np.random.default_rng(101)
        worst = np.inf
        for _ in range(150):
            size = int(rng.integers(2, 6))
            game = random_symmetric_game(rng, size)
            check = verify_theorem1(game, cfg)
            worst = min(worst, float(check.margins.min()))
            assert check.passed, worst
        assert worst >= -1e-6

    def test_membership_never_exceeds_diagonal_degree_structurally(
        self, table1, cfg
    ):
        # the stability seed at share zero is itself one of the compared
        # satisfaction values, so the containment has no numeric slack to lose
        ess = fuzzy_ess(table1, cfg)
        nash = symmetric_nash_degrees(table1, cfg)
        off = ~np.eye(3, dtype=bool)
        assert (ess.sf_at_zero[off] <= 1.0).all()
        for i in range(3):
            assert nash[i] == pytest.approx(
                np.nanmin(ess.sf_at_zero[i]), abs=1e-12
            )
