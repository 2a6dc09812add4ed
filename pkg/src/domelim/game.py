"""Finite strategic games, restrictions, mixed strategies and beliefs.

All payoffs and probabilities are exact `fractions.Fraction` values; no
floating point enters any computation.  Strategies are identified
positionally: (player index, strategy index into the initial game's label
sequence).  Labels matter only for I/O.

The single canonical enumeration order everywhere is odometer order: the
last index varies fastest.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import StructuralError

ZERO = Fraction(0)
ONE = Fraction(1)


class BeliefMode(Enum):
    PURE = "pure"
    MIXED_INDEPENDENT = "mixed"
    CORRELATED = "correlated"


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise StructuralError(f"exact rational required, got {type(x).__name__}")


@dataclass(frozen=True)
class Game:
    """Immutable finite strategic game.

    `payoffs` is the flat payoff tensor: joints enumerated in odometer
    order, and within each joint one entry per player.
    """

    labels: tuple[tuple[str, ...], ...]
    payoffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.labels) < 2:
            raise StructuralError("at least 2 players required")
        for i, names in enumerate(self.labels):
            if not names:
                raise StructuralError(f"player {i} has no strategies")
            if len(set(names)) != len(names):
                raise StructuralError(f"player {i} has duplicate strategy labels")
        total = self.num_joints * self.n
        if len(self.payoffs) != total:
            raise StructuralError(
                f"payoff tensor has {len(self.payoffs)} entries, expected {total}"
            )
        if any(not isinstance(p, Fraction) for p in self.payoffs):
            raise StructuralError("payoffs must be Fractions")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(names) for names in self.labels)

    @property
    def num_joints(self) -> int:
        k = 1
        for s in self.sizes:
            k *= s
        return k

    @classmethod
    def from_table(
        cls,
        labels: Sequence[Sequence[str]],
        rows: Sequence[Sequence],
    ) -> "Game":
        """Build from per-joint payoff rows in odometer order."""
        flat = tuple(_as_fraction(x) for row in rows for x in row)
        return cls(tuple(tuple(names) for names in labels), flat)

    def _offset(self, joint: Sequence[int]) -> int:
        if len(joint) != self.n:
            raise StructuralError(f"joint has arity {len(joint)}, expected {self.n}")
        off = 0
        for idx, size in zip(joint, self.sizes):
            if not 0 <= idx < size:
                raise StructuralError(f"strategy index {idx} out of range")
            off = off * size + idx
        return off

    def payoff(self, i: int, joint: Sequence[int]) -> Fraction:
        if not 0 <= i < self.n:
            raise StructuralError(f"player index {i} out of range")
        return self.payoffs[self._offset(joint) * self.n + i]

    def joints(self) -> Iterator[tuple[int, ...]]:
        return product(*(range(s) for s in self.sizes))


def payoff_pure(g: Game, i: int, joint: Sequence[int]) -> Fraction:
    """Stored payoff of player `i` at a joint pure strategy."""
    return g.payoff(i, joint)


@dataclass(frozen=True)
class Restriction:
    """Per-player nonempty subsets of the initial game's strategies.

    `kept` holds strictly increasing strategy indices per player; payoffs
    are inherited from `game` unchanged.
    """

    game: Game
    kept: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.kept) != self.game.n:
            raise StructuralError("one kept-set per player required")
        for i, ks in enumerate(self.kept):
            if not ks:
                raise StructuralError(f"player {i} kept-set is empty")
            if any(ks[j] >= ks[j + 1] for j in range(len(ks) - 1)):
                raise StructuralError(f"player {i} kept-set not strictly increasing")
            if ks[0] < 0 or ks[-1] >= self.game.sizes[i]:
                raise StructuralError(f"player {i} kept-set out of range")

    @classmethod
    def full(cls, game: Game) -> "Restriction":
        return cls(game, tuple(tuple(range(s)) for s in game.sizes))

    @property
    def n(self) -> int:
        return self.game.n

    def is_full(self) -> bool:
        return self.kept == tuple(tuple(range(s)) for s in self.game.sizes)

    def strategies(self) -> Iterator[tuple[int, int]]:
        """All (player, strategy) pairs in canonical order."""
        for i, ks in enumerate(self.kept):
            for s in ks:
                yield (i, s)

    def contains(self, i: int, s: int) -> bool:
        return s in self.kept[i]

    def remove(self, removed: Iterable[tuple[int, int]]) -> "Restriction":
        gone: set[tuple[int, int]] = set(removed)
        for i, s in gone:
            if not self.contains(i, s):
                raise StructuralError(f"({i},{s}) not present in restriction")
        new_kept = tuple(
            tuple(s for s in ks if (i, s) not in gone) for i, ks in enumerate(self.kept)
        )
        return Restriction(self.game, new_kept)

    def opponent_joints(self, i: int) -> tuple[tuple[int, ...], ...]:
        """Joint opponent strategies (players j != i, ascending), odometer order."""
        if not 0 <= i < self.n:
            raise StructuralError(f"player index {i} out of range")
        pools = [self.kept[j] for j in range(self.n) if j != i]
        return tuple(product(*pools))

    def full_joint(self, i: int, s: int, opp: Sequence[int]) -> tuple[int, ...]:
        """Insert player `i`'s strategy into an opponent joint."""
        if len(opp) != self.n - 1:
            raise StructuralError("opponent joint has wrong arity")
        return tuple(opp[:i]) + (s,) + tuple(opp[i:])


def restriction_leq(r1: Restriction, r2: Restriction) -> bool:
    """Componentwise subset test; both restrictions must share one game."""
    if r1.game is not r2.game and r1.game != r2.game:
        raise StructuralError("restrictions of different initial games")
    return all(set(a) <= set(b) for a, b in zip(r1.kept, r2.kept))


@dataclass(frozen=True)
class MixedStrategy:
    """Exact probability distribution over one player's strategies in G.

    Only strictly positive weights are stored, sorted by strategy index.
    """

    player: int
    weights: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        total = ZERO
        prev = -1
        for s, w in self.weights:
            if s <= prev:
                raise StructuralError("weights not sorted by strategy index")
            if w <= 0:
                raise StructuralError("stored weights must be positive")
            prev = s
            total += w
        if total != 1:
            raise StructuralError(f"weights sum to {total}, expected 1")

    @classmethod
    def of(cls, player: int, weights: Mapping[int, Fraction]) -> "MixedStrategy":
        kept = tuple(
            sorted((s, _as_fraction(w)) for s, w in weights.items() if w != 0)
        )
        if any(w < 0 for _, w in kept):
            raise StructuralError("negative weight")
        return cls(player, kept)

    @classmethod
    def point(cls, player: int, s: int) -> "MixedStrategy":
        return cls(player, ((s, ONE),))

    def weight(self, s: int) -> Fraction:
        for t, w in self.weights:
            if t == s:
                return w
        return ZERO

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.weights)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.weights)


@dataclass(frozen=True)
class JointPureBelief:
    """One pure strategy per opponent (players j != player, ascending)."""

    player: int
    opponents: tuple[int, ...]


@dataclass(frozen=True)
class MixedProfileBelief:
    """One independent mixed strategy per opponent, ascending player order."""

    player: int
    profile: tuple[MixedStrategy, ...]


@dataclass(frozen=True)
class CorrelatedBelief:
    """Exact distribution over opponent joints; positive entries only."""

    player: int
    probs: tuple[tuple[tuple[int, ...], Fraction], ...]

    def __post_init__(self):
        total = ZERO
        for _, p in self.probs:
            if p <= 0:
                raise StructuralError("stored probabilities must be positive")
            total += p
        if total != 1:
            raise StructuralError(f"probabilities sum to {total}, expected 1")

    @classmethod
    def of(
        cls, player: int, probs: Mapping[tuple[int, ...], Fraction]
    ) -> "CorrelatedBelief":
        kept = tuple(sorted((o, _as_fraction(p)) for o, p in probs.items() if p != 0))
        if any(p < 0 for _, p in kept):
            raise StructuralError("negative probability")
        return cls(player, kept)


Belief = Union[JointPureBelief, MixedProfileBelief, CorrelatedBelief]


def belief_mode(b: Belief) -> BeliefMode:
    if isinstance(b, JointPureBelief):
        return BeliefMode.PURE
    if isinstance(b, MixedProfileBelief):
        return BeliefMode.MIXED_INDEPENDENT
    if isinstance(b, CorrelatedBelief):
        return BeliefMode.CORRELATED
    raise StructuralError(f"not a belief: {type(b).__name__}")


def expected_payoff(g: Game, i: int, s_i: int, belief: Belief) -> Fraction:
    """Exact expected payoff of playing `s_i` against `belief`."""
    if belief.player != i:
        raise StructuralError("belief belongs to a different player")
    if not 0 <= s_i < g.sizes[i]:
        raise StructuralError(f"strategy index {s_i} out of range")
    full = Restriction.full(g)
    if isinstance(belief, JointPureBelief):
        return g.payoff(i, full.full_joint(i, s_i, belief.opponents))
    if isinstance(belief, CorrelatedBelief):
        total = ZERO
        for opp, p in belief.probs:
            total += p * g.payoff(i, full.full_joint(i, s_i, opp))
        return total
    if isinstance(belief, MixedProfileBelief):
        if len(belief.profile) != g.n - 1:
            raise StructuralError("profile has wrong arity")
        opponents = [j for j in range(g.n) if j != i]
        for m, j in zip(belief.profile, opponents):
            if m.player != j:
                raise StructuralError("profile components out of order")
        total = ZERO
        for combo in product(*(m.weights for m in belief.profile)):
            prob = ONE
            opp = []
            for s, w in combo:
                prob *= w
                opp.append(s)
            total += prob * g.payoff(i, full.full_joint(i, s_i, opp))
        return total
    raise StructuralError(f"not a belief: {type(belief).__name__}")
