"""Independent brute-force oracles for the test suite.

These deliberately avoid the engine's decision paths: dominance is checked
by exhaustive scans, two-support max-min values by breakpoint enumeration
of the piecewise-linear objective, and mixed-dominance refutations by
dense rational grids.  They exist to compute expected values, not to be
fast.
"""

from __future__ import annotations

from fractions import Fraction

from domelim.game import Restriction

ZERO = Fraction(0)
ONE = Fraction(1)


def payoff_row(r: Restriction, i: int, s: int) -> list[Fraction]:
    g = r.game
    return [g.payoff(i, r.full_joint(i, s, opp)) for opp in r.opponent_joints(i)]


def pure_dominator_scan(r: Restriction, i: int, s: int, pool) -> int | None:
    """First pool strategy strictly beating s everywhere, by direct scan."""
    base = payoff_row(r, i, s)
    for t in pool:
        if t == s:
            continue
        if all(a > b for a, b in zip(payoff_row(r, i, t), base)):
            return t
    return None


def weak_dominator_scan(r: Restriction, i: int, s: int, opp_subset) -> int | None:
    g = r.game
    base = [g.payoff(i, r.full_joint(i, s, opp)) for opp in opp_subset]
    for t in r.kept[i]:
        if t == s:
            continue
        row = [g.payoff(i, r.full_joint(i, t, opp)) for opp in opp_subset]
        if all(a >= b for a, b in zip(row, base)) and any(
            a > b for a, b in zip(row, base)
        ):
            return t
    return None


def best_response_scan(r: Restriction, i: int, s: int, pool) -> tuple | None:
    """Opponent joint against which s is maximal over pool, if any."""
    g = r.game
    for opp in r.opponent_joints(i):
        mine = g.payoff(i, r.full_joint(i, s, opp))
        if all(g.payoff(i, r.full_joint(i, t, opp)) <= mine for t in pool):
            return opp
    return None


def maxmin_two_support(r: Restriction, i: int, s: int, a: int, b: int) -> Fraction:
    """Exact max over mixes of {a, b} of the min payoff margin over s.

    The objective min_o [t*p(a,o) + (1-t)*p(b,o) - p(s,o)] is piecewise
    linear and concave in t, so the optimum sits at 0, 1, or a crossing of
    two of the lines; enumerate all candidates.
    """
    base = payoff_row(r, i, s)
    rows_a = payoff_row(r, i, a)
    rows_b = payoff_row(r, i, b)
    lines = [(pb - ps, pa - pb) for pa, pb, ps in zip(rows_a, rows_b, base)]

    candidates = [ZERO, ONE]
    for j in range(len(lines)):
        for k in range(j + 1, len(lines)):
            c1, d1 = lines[j]
            c2, d2 = lines[k]
            if d1 != d2:
                t = (c2 - c1) / (d1 - d2)
                if 0 <= t <= 1:
                    candidates.append(t)
    return max(min(c + d * t for c, d in lines) for t in candidates)


def _compositions(total: int, k: int):
    if k == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, k - 1):
            yield (head,) + tail


def grid_mixes(k: int, denom: int):
    """All distributions over k points with weights of denominator `denom`."""
    for comp in _compositions(denom, k):
        yield tuple(Fraction(c, denom) for c in comp)


def grid_refutes_mixed_dominance(
    r: Restriction, i: int, s: int, pool, denom: int = 64
) -> bool:
    """True when no grid mixture of the pool strictly beats s everywhere."""
    pool = list(pool)
    base = payoff_row(r, i, s)
    rows = [payoff_row(r, i, t) for t in pool]
    for weights in grid_mixes(len(pool), denom):
        values = [
            sum((w * row[j] for w, row in zip(weights, rows)), ZERO)
            for j in range(len(base))
        ]
        if all(v > p for v, p in zip(values, base)):
            return False
    return True


def ars_normal_forms_brute(nodes: int, edges, start: int) -> set[int]:
    """Sinks reachable from start by path enumeration over an edge list."""
    succ = {a: set() for a in range(nodes)}
    for a, b in edges:
        succ[a].add(b)
    reach = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for y in succ[x]:
            if y not in reach:
                reach.add(y)
                frontier.append(y)
    return {x for x in reach if not succ[x]}
