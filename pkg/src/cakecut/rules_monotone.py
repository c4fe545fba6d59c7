"""Monotone division rules: exact-proportional, relative- and
absolute-equitable (moving-knife simulation cross-checked by a parametric
oracle), and the rightmost-mark rule for two agents.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cake_measure import (
    CakeError,
    Interval,
    Problem,
    Rat,
    leftmost_mark,
    rightmost_mark,
    total,
    value,
)
from .divisions import (
    ABSOLUTE,
    RELATIVE,
    Division,
    UtilityVector,
    division_from_cuts,
    sup_uniform_feasible,
    utilities,
)


@dataclass(frozen=True)
class EquitableResult:
    """Connected partition in an ordering whose pieces all equal v_pi."""

    ordering: tuple[str, ...]
    cuts: tuple[Rat, ...]
    value: Rat
    mode: str

    def division(self, p: Problem) -> Division:
        return division_from_cuts(p, self.ordering, self.cuts + (p.cake_length,))


@dataclass
class RuleOutput:
    rule: str
    divisions: list[Division]
    value: Optional[Rat] = None
    orderings: Optional[list[tuple[str, ...]]] = None


def _scales(p: Problem, mode: str) -> dict[str, Rat]:
    if mode == RELATIVE:
        return {a: total(p.density(a)) for a in p.agents}
    if mode == ABSOLUTE:
        return {a: Fraction(1) for a in p.agents}
    raise CakeError(f"unknown value mode {mode!r}")


def exact_proportional(p: Problem) -> Division:
    """Each round every remaining agent marks a prefix worth exactly V_i/n
    from the current left edge; the leftmost marker (ties: lowest index)
    takes it.  Every agent ends with relative value exactly 1/n; the tail
    after the last round is discarded."""
    start = Fraction(0)
    remaining = list(p.agents)
    pieces: dict[str, list[Interval]] = {}
    while remaining:
        marks = []
        for a in remaining:
            d = p.density(a)
            y = leftmost_mark(d, start, total(d) / p.n)
            assert y is not None, "discarded prefixes never exceed 1/n shares"
            marks.append((y, p.index(a), a))
        y, _, winner = min(marks)
        pieces[winner] = [Interval(start, y)]
        start = y
        remaining.remove(winner)
    return Division.of(pieces)


def rightmost_mark_rule(p: Problem) -> Division:
    """Two agents: cut at the rightmost of the two rightmost half-value
    points; the agent who made that mark takes the right piece.  Equal
    marks give the right piece to the second-listed agent."""
    if p.n != 2:
        raise CakeError("rightmost-mark requires exactly 2 agents")
    first, second = p.agents
    marks = {}
    for a in p.agents:
        d = p.density(a)
        y = rightmost_mark(d, total(d) / 2)
        assert y is not None
        marks[a] = y
    if marks[second] >= marks[first]:
        right_agent, cut = second, marks[second]
    else:
        right_agent, cut = first, marks[first]
    left_agent = first if right_agent == second else second
    return Division.of({
        left_agent: [Interval(Fraction(0), cut)],
        right_agent: [Interval(cut, p.cake_length)],
    })


# ---------------------------------------------------------------------------
# Equitable rules


def equitable_for_ordering(p: Problem, pi: Sequence[str],
                           mode: str) -> EquitableResult:
    """Exact event-driven simulation of the two-phase moving-knife.

    One knife per agent plus a value screen t.  In phase 1 all knives move
    so that agent i's piece [x_{i-1}, x_i] stays worth exactly t * scale_i.
    Whenever some knife sits at the left edge of a stretch where its own
    agent's density is zero, the rightmost such knife slides freely through
    the stretch while knives to its right keep their piece values constant
    (phase 2).  Stops when the last knife reaches the end of the cake.
    """
    pi = tuple(pi)
    if sorted(pi) != sorted(p.agents):
        raise CakeError("ordering must be a permutation of the agents")
    scale = _scales(p, mode)
    dens = [p.density(a) for a in pi]
    s = [scale[a] for a in pi]
    n = len(pi)
    c = p.cake_length
    grid = p.grid
    x = [Fraction(0)] * n
    t = Fraction(0)
    while x[-1] != c:
        blocked = [i for i in range(n)
                   if x[i] < c and dens[i].density_right_of(x[i]) == 0]
        if blocked:
            r = blocked[-1]
            v = [Fraction(0)] * n
            v[r] = Fraction(1)
            for k in range(r + 1, n):
                push = dens[k].density_right_of(x[k - 1]) * v[k - 1]
                v[k] = push / dens[k].density_right_of(x[k]) if push else Fraction(0)
            step = min((grid.next_breakpoint(x[i]) - x[i]) / v[i]
                       for i in range(r, n) if v[i] > 0)
            for i in range(r, n):
                x[i] += v[i] * step
        else:
            v = [Fraction(0)] * n
            prev = Fraction(0)
            prev_pos = Fraction(0)
            for k in range(n):
                back = dens[k].density_right_of(prev_pos) if k else Fraction(0)
                v[k] = (s[k] + back * prev) / dens[k].density_right_of(x[k])
                prev, prev_pos = v[k], x[k]
            step = min((grid.next_breakpoint(x[i]) - x[i]) / v[i]
                       for i in range(n))
            t += step
            for i in range(n):
                x[i] += v[i] * step
    result = EquitableResult(pi, tuple(x[:-1]), t, mode)
    lo = Fraction(0)
    for a, d, sc, hi in zip(pi, dens, s, x):
        assert value(d, Interval(lo, hi)) == t * sc
        lo = hi
    return result


def equitable_value_oracle(p: Problem, pi: Sequence[str], mode: str) -> Rat:
    """The equitable value for an ordering, computed independently of the
    simulation as sup{t : sequential minimal prefixes with targets
    t * scale_i fit in the cake}."""
    scale = _scales(p, mode)
    zeros = [Fraction(0)] * p.n
    return sup_uniform_feasible(p, pi, zeros, [scale[a] for a in pi], Fraction(0))


def max_equitable(p: Problem, mode: str) -> RuleOutput:
    """Equitable rule: maximize the common (relative or absolute) value over
    all agent orderings; returns the simulated divisions of all argmax
    orderings.  The oracle and the simulation must agree exactly."""
    rule = f"{mode}-equitable"
    best: Optional[Rat] = None
    winners: list[tuple[str, ...]] = []
    for pi in itertools.permutations(p.agents):
        v = equitable_value_oracle(p, pi, mode)
        if best is None or v > best:
            best, winners = v, [pi]
        elif v == best:
            winners.append(pi)
    divisions = []
    for pi in winners:
        sim = equitable_for_ordering(p, pi, mode)
        assert sim.value == best, "simulation and oracle disagree"
        divisions.append(sim.division(p))
    return RuleOutput(rule, divisions, best, winners)
