"""Elimination steps, traces, outcome search, and the step-level checkers.

A step removes any nonempty set of strategies that are each dominated in
the current restriction.  Policies fix which step to take:

  FullSpeed     remove everything dominated at once
  SingleLex     remove the first dominated strategy in (player, index) order
  SingleRandom  remove one dominated strategy uniformly, seeded
  AllSubsets    every nonempty subset of the dominated set (order analysis)

`all_outcomes` explores the AllSubsets graph memoized on restrictions;
order independence of a relation on a game is exactly this set being a
singleton.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .dominance import (
    Certificate,
    Relation,
    dominated_set,
    is_dominated,
)
from .errors import StructuralError
from .game import Game, Restriction, restriction_leq

DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class FullSpeed:
    pass


@dataclass(frozen=True)
class SingleLex:
    pass


@dataclass(frozen=True)
class SingleRandom:
    seed: int


@dataclass(frozen=True)
class AllSubsets:
    pass


OrderPolicy = Union[FullSpeed, SingleLex, SingleRandom, AllSubsets]


def policy_name(policy: OrderPolicy) -> str:
    return {
        FullSpeed: "fastest",
        SingleLex: "single-lex",
        SingleRandom: "single-random",
        AllSubsets: "all-subsets",
    }[type(policy)]


@dataclass(frozen=True)
class ReductionStep:
    before: Restriction
    after: Restriction
    removed: tuple[tuple[tuple[int, int], Certificate], ...]

    def __post_init__(self):
        if self.after == self.before:
            raise StructuralError("step removes nothing")
        if not restriction_leq(self.after, self.before):
            raise StructuralError("step does not shrink the restriction")


@dataclass(frozen=True)
class Trace:
    relation: Relation
    initial: Game
    policy: OrderPolicy
    steps: tuple[ReductionStep, ...]
    outcome: Restriction


def _step(r: Restriction, chosen: dict) -> ReductionStep:
    after = r.remove(chosen.keys())
    return ReductionStep(r, after, tuple(sorted(chosen.items())))


def successors(
    rel: Relation,
    r: Restriction,
    policy: OrderPolicy,
    rng: Optional[random.Random] = None,
) -> list[ReductionStep]:
    """Steps available from r under the policy; empty iff nothing is dominated."""
    dom = dominated_set(rel, r)
    if not dom:
        return []
    keys = sorted(dom)
    if isinstance(policy, FullSpeed):
        return [_step(r, dom)]
    if isinstance(policy, SingleLex):
        k = keys[0]
        return [_step(r, {k: dom[k]})]
    if isinstance(policy, SingleRandom):
        if rng is None:
            rng = random.Random(policy.seed)
        k = keys[rng.randrange(len(keys))]
        return [_step(r, {k: dom[k]})]
    if isinstance(policy, AllSubsets):
        out = []
        for mask in range(1, 1 << len(keys)):
            sub = {k: dom[k] for j, k in enumerate(keys) if mask >> j & 1}
            out.append(_step(r, sub))
        return out
    raise StructuralError(f"not a policy: {type(policy).__name__}")


def normal_form(rel: Relation, g: Game, policy: OrderPolicy) -> Trace:
    """Iterate the policy from the full game until no step remains."""
    if isinstance(policy, AllSubsets):
        raise StructuralError("AllSubsets does not define a single iteration")
    rng = random.Random(policy.seed) if isinstance(policy, SingleRandom) else None
    r = Restriction.full(g)
    steps = []
    while True:
        nxt = successors(rel, r, policy, rng)
        if not nxt:
            return Trace(rel, g, policy, tuple(steps), r)
        steps.append(nxt[0])
        r = nxt[0].after


@dataclass(frozen=True)
class OutcomeSearch:
    outcomes: frozenset[Restriction]
    complete: bool
    explored: int


def all_outcomes(rel: Relation, g: Game, budget: int = DEFAULT_BUDGET) -> OutcomeSearch:
    """All reachable irreducible restrictions, memoized on restrictions.

    Exceeding the budget returns the partial outcome set with
    `complete=False`; it never truncates silently.
    """
    start = Restriction.full(g)
    seen: set[Restriction] = {start}
    outcomes: set[Restriction] = set()
    stack = [start]
    complete = True
    while stack:
        r = stack.pop()
        dom = dominated_set(rel, r)
        if not dom:
            outcomes.add(r)
            continue
        keys = sorted(dom)
        for mask in range(1, 1 << len(keys)):
            child = r.remove(k for j, k in enumerate(keys) if mask >> j & 1)
            if child not in seen:
                if len(seen) >= budget:
                    complete = False
                    continue
                seen.add(child)
                stack.append(child)
    return OutcomeSearch(frozenset(outcomes), complete, len(seen))


def reachable_restrictions(
    rel: Relation, g: Game, budget: int = DEFAULT_BUDGET
) -> set[Restriction]:
    """Every restriction reachable from the full game, itself included."""
    start = Restriction.full(g)
    seen = {start}
    stack = [start]
    while stack:
        r = stack.pop()
        dom = dominated_set(rel, r)
        keys = sorted(dom)
        for mask in range(1, 1 << len(keys)):
            child = r.remove(k for j, k in enumerate(keys) if mask >> j & 1)
            if child not in seen and len(seen) < budget:
                seen.add(child)
                stack.append(child)
    return seen


def reachable_steps(
    rel: Relation, g: Game, budget: int = DEFAULT_BUDGET
) -> Iterator[ReductionStep]:
    """Every distinct step in the AllSubsets graph from the full game."""
    start = Restriction.full(g)
    seen = {start}
    stack = [start]
    while stack:
        r = stack.pop()
        for step in successors(rel, r, AllSubsets()):
            yield step
            if step.after not in seen and len(seen) < budget:
                seen.add(step.after)
                stack.append(step.after)


def check_hereditary_step(rel: Relation, step: ReductionStep) -> Optional[tuple[int, int]]:
    """First surviving strategy dominated before the step but not after."""
    for i, s in step.after.strategies():
        if is_dominated(rel, step.before, i, s) is not None:
            if is_dominated(rel, step.after, i, s) is None:
                return (i, s)
    return None


def check_monotonic_pair(
    rel: Relation, r: Restriction, r2: Restriction
) -> Optional[tuple[int, int]]:
    """First strategy of r2 dominated in r but not in r2; r2 must be inside r."""
    if not restriction_leq(r2, r):
        raise StructuralError("second restriction is not contained in the first")
    for i, s in r2.strategies():
        if is_dominated(rel, r, i, s) is not None:
            if is_dominated(rel, r2, i, s) is None:
                return (i, s)
    return None


def check_proof_shape(rel: Relation, step: ReductionStep) -> bool:
    """Weak-confluence shape: R' equals the full-speed reduct or steps to it."""
    r, r_prime = step.before, step.after
    dom = dominated_set(rel, r)
    r_full = r.remove(dom.keys())
    if r_prime == r_full:
        return True
    # R'' is inside R'; the residue must be a valid single step of R'.
    if not restriction_leq(r_full, r_prime):
        return False
    residue = [
        (i, s) for i, s in r_prime.strategies() if not r_full.contains(i, s)
    ]
    return all(is_dominated(rel, r_prime, i, s) is not None for i, s in residue)
