"""Game containers, validation helpers, and the JSON interchange format.

Two shapes are supported.  A symmetric game stores one payoff matrix read
from the row player's perspective: ``payoff[i][j]`` is what strategy ``i``
earns against strategy ``j``.  A two-player (bimatrix) game stores one
matrix per player.  Entries are :class:`~fuzzyess.fuzzy.TriFuzzy` values;
bare numbers are accepted everywhere as crisp shorthand.

The JSON documents mirror these shapes::

    {"type": "symmetric", "strategies": ["s1", "s2"],
     "payoffs": [[{"a": 5, "b": 1}, 3], ...]}

    {"type": "bimatrix", "strategies1": [...], "strategies2": [...],
     "payoffs1": [[...]], "payoffs2": [[...]]}

where ``a`` is the center and ``b`` the half-width.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .fuzzy import TriFuzzy

__all__ = [
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
]


class GameFormatError(ValueError):
    """Raised when a game document cannot be parsed or validated.

    ``location`` points at the offending field when one can be named.
    """

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


def _check_strategy_names(names, field: str, minimum: int) -> tuple[str, ...]:
    if not isinstance(names, (list, tuple)) or len(names) < minimum:
        raise GameFormatError(
            f"expected a list of at least {minimum} strategy names", field
        )
    out = []
    for k, name in enumerate(names):
        if not isinstance(name, str) or not name.strip():
            raise GameFormatError("strategy names must be nonempty strings", f"{field}[{k}]")
        out.append(name)
    if len(set(out)) != len(out):
        raise GameFormatError("strategy names must be unique", field)
    return tuple(out)


@dataclass(frozen=True)
class SymGame:
    """Symmetric two-player game over a shared strategy set (size >= 2)."""

    strategies: tuple[str, ...]
    payoff: tuple[tuple[TriFuzzy, ...], ...]

    def __post_init__(self) -> None:
        names = _check_strategy_names(self.strategies, "strategies", 2)
        object.__setattr__(self, "strategies", names)
        n = len(names)
        rows = tuple(tuple(row) for row in self.payoff)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise GameFormatError(f"payoff matrix must be {n}x{n}")
        for row in rows:
            for entry in row:
                if not isinstance(entry, TriFuzzy):
                    raise GameFormatError("payoff entries must be TriFuzzy values")
        object.__setattr__(self, "payoff", rows)

    @property
    def size(self) -> int:
        return len(self.strategies)

    @property
    def is_crisp(self) -> bool:
        return all(e.half_width == 0.0 for row in self.payoff for e in row)

    def index(self, strategy: str) -> int:
        try:
            return self.strategies.index(strategy)
        except ValueError:
            raise KeyError(f"unknown strategy {strategy!r}") from None

    def centers(self) -> np.ndarray:
        return np.array([[e.center for e in row] for row in self.payoff])

    def half_widths(self) -> np.ndarray:
        return np.array([[e.half_width for e in row] for row in self.payoff])


@dataclass(frozen=True)
class BiGame:
    """Two-player game with independent strategy sets and payoff matrices."""

    strategies1: tuple[str, ...]
    strategies2: tuple[str, ...]
    payoff1: tuple[tuple[TriFuzzy, ...], ...]
    payoff2: tuple[tuple[TriFuzzy, ...], ...]

    def __post_init__(self) -> None:
        n1 = _check_strategy_names(self.strategies1, "strategies1", 1)
        n2 = _check_strategy_names(self.strategies2, "strategies2", 1)
        object.__setattr__(self, "strategies1", n1)
        object.__setattr__(self, "strategies2", n2)
        for field in ("payoff1", "payoff2"):
            rows = tuple(tuple(row) for row in getattr(self, field))
            if len(rows) != len(n1) or any(len(row) != len(n2) for row in rows):
                raise GameFormatError(
                    f"{field} must be {len(n1)}x{len(n2)}", field
                )
            for row in rows:
                for entry in row:
                    if not isinstance(entry, TriFuzzy):
                        raise GameFormatError(
                            "payoff entries must be TriFuzzy values", field
                        )
            object.__setattr__(self, field, rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.strategies1), len(self.strategies2))


def as_trifuzzy(value, location: str = "value") -> TriFuzzy:
    """Coerce a payoff entry: TriFuzzy, bare number, {"a","b"} dict, or pair."""
    if isinstance(value, TriFuzzy):
        return value
    if isinstance(value, bool):
        raise GameFormatError("payoff entries cannot be booleans", location)
    if isinstance(value, (int, float)):
        try:
            return TriFuzzy(value, 0.0)
        except ValueError as exc:
            raise GameFormatError(str(exc), location) from None
    if isinstance(value, dict):
        extra = set(value) - {"a", "b"}
        if "a" not in value or extra:
            raise GameFormatError(
                'fuzzy entries need key "a" and optionally "b"', location
            )
        center, width = value["a"], value.get("b", 0.0)
    elif isinstance(value, (list, tuple)) and len(value) == 2:
        center, width = value
    else:
        raise GameFormatError(
            f"cannot interpret {value!r} as a fuzzy payoff", location
        )
    for part, name in ((center, "a"), (width, "b")):
        if isinstance(part, bool) or not isinstance(part, (int, float)):
            raise GameFormatError(f'"{name}" must be a number', f"{location}.{name}")
    try:
        return TriFuzzy(center, width)
    except ValueError as exc:
        raise GameFormatError(str(exc), f"{location}.b") from None


def _parse_matrix(raw, field: str, n_rows: int, n_cols: int):
    if not isinstance(raw, list) or len(raw) != n_rows:
        raise GameFormatError(f"expected {n_rows} rows", field)
    rows = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != n_cols:
            raise GameFormatError(f"expected {n_cols} entries", f"{field}[{i}]")
        rows.append(
            tuple(
                as_trifuzzy(entry, f"{field}[{i}][{j}]")
                for j, entry in enumerate(row)
            )
        )
    return tuple(rows)


def parse_game(document) -> SymGame | BiGame:
    """Parse a game from a JSON string or an already-decoded mapping."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise GameFormatError(
                f"invalid JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}"
            ) from None
    if not isinstance(document, dict):
        raise GameFormatError("top level must be a JSON object")
    kind = document.get("type")
    if kind == "symmetric":
        names = _check_strategy_names(document.get("strategies"), "strategies", 2)
        payoff = _parse_matrix(
            document.get("payoffs"), "payoffs", len(names), len(names)
        )
        return SymGame(names, payoff)
    if kind == "bimatrix":
        names1 = _check_strategy_names(document.get("strategies1"), "strategies1", 1)
        names2 = _check_strategy_names(document.get("strategies2"), "strategies2", 1)
        payoff1 = _parse_matrix(
            document.get("payoffs1"), "payoffs1", len(names1), len(names2)
        )
        payoff2 = _parse_matrix(
            document.get("payoffs2"), "payoffs2", len(names1), len(names2)
        )
        return BiGame(names1, names2, payoff1, payoff2)
    raise GameFormatError(
        'field "type" must be "symmetric" or "bimatrix"', "type"
    )


def parse_game_file(path) -> SymGame | BiGame:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return parse_game(text)
    except GameFormatError as exc:
        raise GameFormatError(str(exc), f"{path}") from None


def _entry_doc(e: TriFuzzy):
    if e.half_width == 0.0 and float(e.center).is_integer():
        return int(e.center)
    if e.half_width == 0.0:
        return e.center
    return {"a": e.center, "b": e.half_width}


def serialize_game(game: SymGame | BiGame) -> dict:
    """Round-trippable JSON document for a game."""
    if isinstance(game, SymGame):
        return {
            "type": "symmetric",
            "strategies": list(game.strategies),
            "payoffs": [[_entry_doc(e) for e in row] for row in game.payoff],
        }
    if isinstance(game, BiGame):
        return {
            "type": "bimatrix",
            "strategies1": list(game.strategies1),
            "strategies2": list(game.strategies2),
            "payoffs1": [[_entry_doc(e) for e in row] for row in game.payoff1],
            "payoffs2": [[_entry_doc(e) for e in row] for row in game.payoff2],
        }
    raise TypeError(f"cannot serialize {type(game).__name__}")


def symmetrize(game: SymGame) -> BiGame:
    """Expand a symmetric game to its bimatrix form.

    The column player's matrix is the transpose of the row player's, so
    both players face identical incentives.
    """
    n = game.size
    payoff1 = game.payoff
    payoff2 = tuple(
        tuple(game.payoff[j][i] for j in range(n)) for i in range(n)
    )
    return BiGame(game.strategies, game.strategies, payoff1, payoff2)


def as_symmetric_game(X, strategies=None) -> SymGame:
    """Validation helper turning estimator input into a SymGame.

    Accepts a SymGame, a parsed JSON mapping, an (n, n) numeric array of
    crisp payoffs, an (n, n, 2) array of (center, half_width) pairs, or a
    nested sequence of anything :func:`as_trifuzzy` understands.
    """
    if isinstance(X, SymGame):
        return X
    if isinstance(X, BiGame):
        raise GameFormatError("expected a symmetric game, got a bimatrix game")
    if isinstance(X, dict):
        game = parse_game(X)
        if not isinstance(game, SymGame):
            raise GameFormatError("expected a symmetric game document")
        return game
    try:
        arr = np.asarray(X, dtype=float)
    except (TypeError, ValueError):
        arr = None
    if arr is not None and arr.ndim == 2 and arr.shape[0] == arr.shape[1] >= 2:
        rows = [[TriFuzzy(v, 0.0) for v in row] for row in arr]
    elif (
        arr is not None
        and arr.ndim == 3
        and arr.shape[2] == 2
        and arr.shape[0] == arr.shape[1] >= 2
    ):
        try:
            rows = [[TriFuzzy(c, w) for c, w in row] for row in arr]
        except ValueError as exc:
            raise GameFormatError(str(exc)) from None
    else:
        if not isinstance(X, (list, tuple)) or not X:
            raise GameFormatError(f"cannot interpret {type(X).__name__} as a game")
        rows = [
            [as_trifuzzy(entry, f"payoffs[{i}][{j}]") for j, entry in enumerate(row)]
            for i, row in enumerate(X)
        ]
    n = len(rows)
    if strategies is None:
        strategies = tuple(f"s{k + 1}" for k in range(n))
    return SymGame(tuple(strategies), tuple(tuple(row) for row in rows))


def as_two_player_game(X) -> BiGame:
    """Validation helper turning estimator input into a BiGame."""
    if isinstance(X, BiGame):
        return X
    if isinstance(X, dict) and X.get("type") == "bimatrix":
        return parse_game(X)
    if isinstance(X, (list, tuple)) and len(X) == 2:
        try:
            m1 = [
                [as_trifuzzy(e, f"payoffs1[{i}][{j}]") for j, e in enumerate(row)]
                for i, row in enumerate(X[0])
            ]
            m2 = [
                [as_trifuzzy(e, f"payoffs2[{i}][{j}]") for j, e in enumerate(row)]
                for i, row in enumerate(X[1])
            ]
        except TypeError:
            m1 = m2 = None
        if m1 is not None:
            names1 = tuple(f"s{k + 1}" for k in range(len(m1)))
            names2 = tuple(f"t{k + 1}" for k in range(len(m1[0]) if m1 else 0))
            return BiGame(
                names1, names2, tuple(map(tuple, m1)), tuple(map(tuple, m2))
            )
    return symmetrize(as_symmetric_game(X))


def staghunt_game(stag_payoff: float = 3.0, hare_payoff: float = 1.0) -> SymGame:
    """Crisp stag hunt: G hunts the stag, H settles for the hare.

    Cooperation pays ``stag_payoff`` only when both pick G; H earns
    ``hare_payoff`` unconditionally; a lone stag hunter earns nothing.
    Requires 0 < hare_payoff < stag_payoff.
    """
    g, h = float(stag_payoff), float(hare_payoff)
    if not 0.0 < h < g:
        raise ValueError(f"need 0 < hare payoff < stag payoff, got h={h}, g={g}")
    payoff = (
        (TriFuzzy(g), TriFuzzy(0.0)),
        (TriFuzzy(h), TriFuzzy(h)),
    )
    return SymGame(("G", "H"), payoff)


def prisoners_dilemma_game(
    temptation: float = 5.0,
    reward: float = 3.0,
    punishment: float = 1.0,
    sucker: float = 0.0,
) -> SymGame:
    """Crisp prisoner's dilemma with the usual T > R > P > S ordering."""
    t, r, p, s = map(float, (temptation, reward, punishment, sucker))
    if not t > r > p > s:
        raise ValueError(f"need T > R > P > S, got {t}, {r}, {p}, {s}")
    payoff = (
        (TriFuzzy(r), TriFuzzy(s)),
        (TriFuzzy(t), TriFuzzy(p)),
    )
    return SymGame(("C", "D"), payoff)


def random_symmetric_game(
    rng: np.random.Generator,
    size: int,
    center_range: tuple[float, float] = (0.0, 10.0),
    width_range: tuple[float, float] = (0.0, 3.0),
) -> SymGame:
    """Random fuzzy symmetric game drawn from the given generator."""
    if size < 2:
        raise ValueError(f"size must be >= 2, got {size}")
    centers = rng.uniform(*center_range, size=(size, size))
    widths = rng.uniform(*width_range, size=(size, size))
    payoff = tuple(
        tuple(TriFuzzy(centers[i, j], widths[i, j]) for j in range(size))
        for i in range(size)
    )
    return SymGame(tuple(f"s{k + 1}" for k in range(size)), payoff)


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled example game (e.g. "table1")."""
    stem = name[:-5] if name.endswith(".json") else name
    ref = resources.files("fuzzyess") / "fixtures" / f"{stem}.json"
    path = Path(str(ref))
    if not path.exists():
        raise FileNotFoundError(f"no bundled game named {name!r}")
    return path


def load_fixture(name: str) -> SymGame | BiGame:
    return parse_game_file(fixture_path(name))
