"""Seeded random games for the property suites.

Integer payoffs uniform in [-3, 3]; the small range maximizes ties and
degenerate cases, which is exactly what stresses strictness handling.
Two-player games are 2x2 up to 4x4; three-player games are 3x3x3.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .game import Game

PAYOFF_LO = -3
PAYOFF_HI = 3


def random_game(rng: random.Random, players: int = 2) -> Game:
    if players == 2:
        sizes = (rng.randint(2, 4), rng.randint(2, 4))
    elif players == 3:
        sizes = (3, 3, 3)
    else:
        raise ValueError("generator covers 2- and 3-player games only")
    labels = tuple(tuple(f"s{k + 1}" for k in range(sz)) for sz in sizes)
    joints = 1
    for sz in sizes:
        joints *= sz
    payoffs = tuple(
        Fraction(rng.randint(PAYOFF_LO, PAYOFF_HI)) for _ in range(joints * players)
    )
    return Game(labels, payoffs)


def game_suite(seed: int, two_player: int, three_player: int) -> list[Game]:
    """The standard seeded suite: `two_player` 2p games then 3p games."""
    rng = random.Random(seed)
    games = [random_game(rng, 2) for _ in range(two_player)]
    games += [random_game(rng, 3) for _ in range(three_player)]
    return games
