"""Exact rational linear programming.

Two-phase primal simplex over `fractions.Fraction` with Bland's
anti-cycling rule (first eligible index enters; ties in the ratio test
break toward the smallest basic variable index).  Strictness of every
game-theoretic inequality is decided by the sign of an exact optimum,
never by a tolerance.

On top of the solver sit the two decision oracles used by the dominance
relations: the max-min advantage of a mixed strategy pool over a fixed
pure strategy, and best-response feasibility under correlated (or
two-player independent-mixed) beliefs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import StructuralError, UnsupportedConfiguration
from .game import (
    ONE,
    ZERO,
    Belief,
    BeliefMode,
    CorrelatedBelief,
    JointPureBelief,
    MixedProfileBelief,
    MixedStrategy,
    Restriction,
)

LEQ = "<="
EQ = "="
GEQ = ">="


@dataclass(frozen=True)
class LinearProgram:
    """maximize objective . x subject to rows (coeffs, cmp, rhs).

    `nonneg[j]` marks x_j >= 0; unmarked variables are free.
    """

    objective: tuple[Fraction, ...]
    constraints: tuple[tuple[tuple[Fraction, ...], str, Fraction], ...]
    nonneg: tuple[bool, ...]

    def __post_init__(self):
        nv = len(self.objective)
        if len(self.nonneg) != nv:
            raise StructuralError("nonneg flags do not match variable count")
        for coeffs, cmp, _ in self.constraints:
            if len(coeffs) != nv:
                raise StructuralError("constraint row has wrong length")
            if cmp not in (LEQ, EQ, GEQ):
                raise StructuralError(f"bad comparator {cmp!r}")


OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpOutcome:
    status: str
    value: Optional[Fraction] = None
    solution: Optional[tuple[Fraction, ...]] = None


def _pivot(rows: list[list[Fraction]], obj: list[Fraction], basis: list[int], r: int, c: int) -> None:
    piv = rows[r][c]
    rows[r] = [x / piv for x in rows[r]]
    prow = rows[r]
    for k, row in enumerate(rows):
        if k != r and row[c] != 0:
            f = row[c]
            rows[k] = [x - f * y for x, y in zip(row, prow)]
    if obj[c] != 0:
        f = obj[c]
        for j in range(len(obj)):
            obj[j] -= f * prow[j]
    basis[r] = c


def _run(rows: list[list[Fraction]], obj: list[Fraction], basis: list[int]) -> str:
    """Bland simplex loop; obj holds negated reduced costs, rhs last."""
    ncols = len(obj) - 1
    while True:
        enter = -1
        for j in range(ncols):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave = -1
        best: Optional[Fraction] = None
        for r, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[r] < basis[leave]
                ):
                    best = ratio
                    leave = r
        if leave < 0:
            return UNBOUNDED
        _pivot(rows, obj, basis, leave, enter)


def solve(lp: LinearProgram) -> LpOutcome:
    """Exact optimum of `lp`; Optimal solutions satisfy every row exactly."""
    nv = len(lp.objective)

    # Column layout: free variables split into a positive and negative part.
    cols: list[tuple[int, int]] = []  # (original var, sign)
    for j in range(nv):
        cols.append((j, 1))
        if not lp.nonneg[j]:
            cols.append((j, -1))
    nstruct = len(cols)

    # Expand rows over the split columns, then force rhs >= 0.
    raw: list[tuple[list[Fraction], str, Fraction]] = []
    for coeffs, cmp, rhs in lp.constraints:
        row = [coeffs[j] * sign for j, sign in cols]
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
            cmp = {LEQ: GEQ, GEQ: LEQ, EQ: EQ}[cmp]
        raw.append((row, cmp, rhs))

    m = len(raw)
    nslack = sum(1 for _, cmp, _ in raw if cmp != EQ)
    # Artificials: every >= / = row; <= rows start basic on their slack.
    art_rows = [r for r, (_, cmp, _) in enumerate(raw) if cmp != LEQ]
    nart = len(art_rows)
    ncols = nstruct + nslack + nart

    rows: list[list[Fraction]] = []
    basis: list[int] = []
    slack_at = 0
    art_at = 0
    for r, (row, cmp, rhs) in enumerate(raw):
        full = row + [ZERO] * (nslack + nart) + [rhs]
        if cmp != EQ:
            full[nstruct + slack_at] = ONE if cmp == LEQ else -ONE
            slack_at += 1
        if cmp == LEQ:
            basis.append(nstruct + slack_at - 1)
        else:
            full[nstruct + nslack + art_at] = ONE
            basis.append(nstruct + nslack + art_at)
            art_at += 1
        rows.append(full)

    if nart:
        # Phase 1: maximize -(sum of artificials).
        obj = [ZERO] * (ncols + 1)
        for j in range(nstruct + nslack, ncols):
            obj[j] = ONE
        for r in range(m):
            if basis[r] >= nstruct + nslack:
                for j in range(ncols + 1):
                    obj[j] -= rows[r][j]
        status = _run(rows, obj, basis)
        assert status == OPTIMAL  # phase 1 is bounded above by 0
        if obj[-1] != 0:
            return LpOutcome(INFEASIBLE)
        # Drive leftover artificials out of the basis; drop redundant rows.
        r = 0
        while r < len(rows):
            if basis[r] >= nstruct + nslack:
                piv = next(
                    (j for j in range(nstruct + nslack) if rows[r][j] != 0), None
                )
                if piv is None:
                    rows.pop(r)
                    basis.pop(r)
                    continue
                _pivot(rows, obj, basis, r, piv)
            r += 1
        rows = [row[: nstruct + nslack] + row[-1:] for row in rows]
        ncols = nstruct + nslack

    # Phase 2 objective: negated reduced costs of the real objective.
    cost = [ZERO] * (ncols + 1)
    for k, (j, sign) in enumerate(cols):
        cost[k] = lp.objective[j] * sign
    obj = [-c for c in cost]
    for r, b in enumerate(basis):
        if cost[b] != 0:
            f = cost[b]
            for j in range(ncols + 1):
                obj[j] += f * rows[r][j]
    status = _run(rows, obj, basis)
    if status == UNBOUNDED:
        return LpOutcome(UNBOUNDED)

    split = [ZERO] * nstruct
    for r, b in enumerate(basis):
        if b < nstruct:
            split[b] = rows[r][-1]
    solution = [ZERO] * nv
    for k, (j, sign) in enumerate(cols):
        solution[j] += split[k] * sign
    return LpOutcome(OPTIMAL, obj[-1], tuple(solution))


def check_feasible(lp: LinearProgram, x: Sequence[Fraction]) -> bool:
    """Exact substitution check of a candidate solution."""
    if len(x) != len(lp.objective):
        raise StructuralError("solution has wrong length")
    for j, xi in enumerate(x):
        if lp.nonneg[j] and xi < 0:
            return False
    for coeffs, cmp, rhs in lp.constraints:
        lhs = sum((c * xi for c, xi in zip(coeffs, x)), ZERO)
        if cmp == LEQ and lhs > rhs:
            return False
        if cmp == GEQ and lhs < rhs:
            return False
        if cmp == EQ and lhs != rhs:
            return False
    return True


def max_min_advantage(
    r: Restriction, i: int, s: int, pool: Sequence[int]
) -> tuple[Fraction, MixedStrategy]:
    """Best guaranteed payoff margin of a pool mixture over `s`.

    Maximizes, over mixtures m of `pool`, the minimum over opponent joints
    in R of p_i(m, s_-i) - p_i(s, s_-i).  The margin is positive exactly
    when `s` is strictly dominated by some mixture of `pool` within R.
    """
    pool = list(pool)
    if not pool:
        raise StructuralError("empty dominator pool")
    if not r.contains(i, s):
        raise StructuralError(f"strategy {s} not in restriction for player {i}")
    g = r.game
    for t in pool:
        if not 0 <= t < g.sizes[i]:
            raise StructuralError(f"pool strategy {t} out of range")
    opps = r.opponent_joints(i)
    eps_col = len(pool)  # weights first, then the margin variable
    constraints = []
    for opp in opps:
        base = g.payoff(i, r.full_joint(i, s, opp))
        row = [g.payoff(i, r.full_joint(i, t, opp)) - base for t in pool]
        row.append(-ONE)
        constraints.append((tuple(row), GEQ, ZERO))
    constraints.append((tuple([ONE] * len(pool) + [ZERO]), EQ, ONE))
    objective = tuple([ZERO] * len(pool) + [ONE])
    nonneg = tuple([True] * len(pool) + [False])
    out = solve(LinearProgram(objective, tuple(constraints), nonneg))
    assert out.status == OPTIMAL and out.value is not None  # always feasible, bounded
    weights = {t: w for t, w in zip(pool, out.solution[:eps_col])}
    return out.value, MixedStrategy.of(i, weights)


def best_response_feasible(
    r: Restriction,
    i: int,
    s: int,
    mode: BeliefMode,
    compare: Optional[Sequence[int]] = None,
) -> Optional[Belief]:
    """Find a belief in R against which `s` is a best response, if any.

    The comparison pool defaults to R_i; passing the initial game's full
    strategy set yields the global variant.  Returns None when `s` is a
    never best response for the given belief set.
    """
    if not r.contains(i, s):
        raise StructuralError(f"strategy {s} not in restriction for player {i}")
    g = r.game
    pool = list(compare) if compare is not None else list(r.kept[i])
    if mode is BeliefMode.MIXED_INDEPENDENT and r.n > 2:
        raise UnsupportedConfiguration(
            "independent mixed beliefs with 3+ players are not decidable here"
        )
    opps = r.opponent_joints(i)

    if mode is BeliefMode.PURE:
        for opp in opps:
            mine = g.payoff(i, r.full_joint(i, s, opp))
            if all(g.payoff(i, r.full_joint(i, t, opp)) <= mine for t in pool):
                return JointPureBelief(i, opp)
        return None

    # Correlated case; with two players the independent case coincides.
    nv = len(opps)
    constraints = []
    for t in pool:
        row = tuple(
            g.payoff(i, r.full_joint(i, s, opp))
            - g.payoff(i, r.full_joint(i, t, opp))
            for opp in opps
        )
        constraints.append((row, GEQ, ZERO))
    constraints.append((tuple([ONE] * nv), EQ, ONE))
    lp = LinearProgram(
        tuple([ZERO] * nv), tuple(constraints), tuple([True] * nv)
    )
    out = solve(lp)
    if out.status != OPTIMAL:
        return None
    probs = {opp: p for opp, p in zip(opps, out.solution) if p != 0}
    if mode is BeliefMode.MIXED_INDEPENDENT:
        j = 1 - i  # two players only
        weights: dict[int, Fraction] = {}
        for opp, p in probs.items():
            weights[opp[0]] = weights.get(opp[0], ZERO) + p
        return MixedProfileBelief(i, (MixedStrategy.of(j, weights),))
    return CorrelatedBelief.of(i, probs)
