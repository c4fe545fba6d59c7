"""Divisions, utility evaluation, and exact axiom checkers.

Implements proportionality, envy-freeness, equitability, weak Pareto
optimality, Pareto optimality (over connected partitions), the Nash
product, and essential single-valuedness, all in exact rational
arithmetic.  The efficiency checkers rest on one feasibility primitive:
sequential minimal prefixes for an agent ordering (greedy_fit) and an
exact parametric sweep over a uniform slack parameter.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .cake_measure import (
    CakeError,
    Density,
    Interval,
    Problem,
    Rat,
    leftmost_mark,
    maximal_mark,
    merge_components,
    suffix_mark,
    total,
    value,
    value_piece,
)

CONNECTED = "connected"
ADDITIVE = "additive"
RELATIVE = "relative"
ABSOLUTE = "absolute"


@dataclass(frozen=True)
class Division:
    """Per-agent pieces (disjoint interval unions); need not cover the cake."""

    assignments: tuple[tuple[str, tuple[Interval, ...]], ...]

    @staticmethod
    def of(pieces: dict[str, Sequence[Interval]]) -> "Division":
        return Division(
            tuple((a, tuple(ivs)) for a, ivs in pieces.items())
        )

    def piece(self, agent: str) -> tuple[Interval, ...]:
        for a, ivs in self.assignments:
            if a == agent:
                return ivs
        raise CakeError(f"no piece for agent {agent!r}")

    def agents(self) -> tuple[str, ...]:
        return tuple(a for a, _ in self.assignments)


def validate_division(p: Problem, x: Division) -> None:
    """Check pieces lie inside the cake and are disjoint across agents."""
    if set(x.agents()) - set(p.agents):
        raise CakeError("division mentions unknown agents")
    all_parts = []
    for _, ivs in x.assignments:
        for iv in ivs:
            if iv.hi > p.cake_length:
                raise CakeError(f"interval {iv} outside cake")
        all_parts.extend(merge_components(ivs))
    all_parts.sort(key=lambda iv: (iv.lo, iv.hi))
    for a, b in zip(all_parts, all_parts[1:]):
        if b.lo < a.hi:
            raise CakeError(f"pieces overlap near {b.lo}")


# Division file format: [{"agent": ..., "intervals": [["p/q", "p/q"], ...]}, ...]


def division_from_json(obj) -> Division:
    from .cake_measure import parse_rat

    try:
        pieces = {
            entry["agent"]: [Interval(parse_rat(lo), parse_rat(hi))
                             for lo, hi in entry["intervals"]]
            for entry in obj
        }
    except (KeyError, TypeError, ValueError) as e:
        raise CakeError(f"malformed division object: {e}") from e
    return Division.of(pieces)


def division_to_json(x: Division) -> list:
    from .cake_measure import format_rat

    return [
        {"agent": a, "intervals": [[format_rat(iv.lo), format_rat(iv.hi)]
                                   for iv in ivs]}
        for a, ivs in x.assignments
    ]


@dataclass
class UtilityVector:
    """Absolute and relative piece values per agent, under a utility mode."""

    mode: str
    absolute: dict[str, Rat]
    relative: dict[str, Rat]


@dataclass(frozen=True)
class PartitionStats:
    v_min: Rat
    v_max: Rat


def utilities(p: Problem, x: Division, mode: str = CONNECTED) -> UtilityVector:
    validate_division(p, x)
    absolute: dict[str, Rat] = {}
    relative: dict[str, Rat] = {}
    for a in p.agents:
        d = p.density(a)
        piece = x.piece(a) if a in x.agents() else ()
        u = value_piece(d, piece, mode)
        absolute[a] = u
        relative[a] = u / total(d)
    return UtilityVector(mode, absolute, relative)


def partition_stats(p: Problem, x: Division, value_mode: str,
                    mode: str = CONNECTED) -> PartitionStats:
    u = utilities(p, x, mode)
    vals = u.relative if value_mode == RELATIVE else u.absolute
    return PartitionStats(min(vals.values()), max(vals.values()))


def check_prop(p: Problem, x: Division, mode: str = CONNECTED) -> bool:
    """True iff every agent's relative value is at least 1/n."""
    u = utilities(p, x, mode)
    share = Fraction(1, p.n)
    return all(u.relative[a] >= share for a in p.agents)


def check_ef(p: Problem, x: Division, mode: str = CONNECTED) -> bool:
    """True iff no agent values another agent's piece above its own."""
    u = utilities(p, x, mode)
    for a in p.agents:
        d = p.density(a)
        for b in x.agents():
            if b == a:
                continue
            if value_piece(d, x.piece(b), mode) > u.absolute[a]:
                return False
    return True


def check_equitable(p: Problem, x: Division, value_mode: str,
                    mode: str = CONNECTED) -> tuple[bool, PartitionStats]:
    stats = partition_stats(p, x, value_mode, mode)
    return stats.v_min == stats.v_max, stats


def nash_product(p: Problem, x: Division, mode: str = CONNECTED) -> Rat:
    u = utilities(p, x, mode)
    prod = Fraction(1)
    for a in p.agents:
        prod *= u.absolute[a]
    return prod


def check_esv(p: Problem, divisions: Sequence[Division],
              mode: str = CONNECTED) -> bool:
    """True iff all divisions induce identical utility vectors."""
    if not divisions:
        raise CakeError("empty division set")
    first = utilities(p, divisions[0], mode)
    return all(utilities(p, x, mode) == first for x in divisions[1:])


# ---------------------------------------------------------------------------
# Connected-partition feasibility primitives


def greedy_fit(p: Problem, pi: Sequence[str],
               targets: dict[str, Rat]) -> Optional[tuple[Rat, ...]]:
    """Sequential minimal prefixes along the ordering.

    Returns the cut vector (one cut per agent; the induced partition gives
    the last agent everything up to its cut, then extends to c), or None
    when the targets do not fit.  If this returns None, no connected
    partition in this ordering meets all the targets.
    """
    pos = Fraction(0)
    cuts = []
    for a in pi:
        t = targets[a]
        if t < 0:
            raise CakeError("targets must be nonnegative")
        y = leftmost_mark(p.density(a), pos, t)
        if y is None:
            return None
        cuts.append(y)
        pos = y
    return tuple(cuts)


def division_from_cuts(p: Problem, pi: Sequence[str],
                       cuts: Sequence[Rat]) -> Division:
    """Connected partition: agent i of pi gets [cut_{i-1}, cut_i]; the last
    piece is extended to the end of the cake."""
    pieces: dict[str, list[Interval]] = {}
    pos = Fraction(0)
    for i, a in enumerate(pi):
        hi = p.cake_length if i == len(pi) - 1 else cuts[i]
        pieces[a] = [Interval(pos, hi)]
        pos = cuts[i]
    return Division.of(pieces)


def constrained_max(p: Problem, pi: Sequence[str], pivot: str,
                    targets: dict[str, Rat]) -> Optional[Rat]:
    """Maximum value the pivot can get in a connected pi-partition in which
    every other agent gets at least its target; None if infeasible."""
    result = _constrained_partition(p, pi, pivot, targets)
    return None if result is None else result[0]


def _constrained_partition(p: Problem, pi: Sequence[str], pivot: str,
                           targets: dict[str, Rat]):
    pi = list(pi)
    j = pi.index(pivot)
    lefts, rights = pi[:j], pi[j + 1 :]
    pos = Fraction(0)
    left_cuts = []
    for a in lefts:
        y = leftmost_mark(p.density(a), pos, targets[a])
        if y is None:
            return None
        left_cuts.append(y)
        pos = y
    end = p.cake_length
    right_cuts = []
    for a in reversed(rights):
        x = suffix_mark(p.density(a), end, targets[a])
        if x is None:
            return None
        right_cuts.append(x)
        end = x
    right_cuts.reverse()
    if pos > end:
        return None
    pieces: dict[str, list[Interval]] = {}
    lo = Fraction(0)
    for a, cut in zip(lefts, left_cuts):
        pieces[a] = [Interval(lo, cut)]
        lo = cut
    pieces[pivot] = [Interval(pos, end)]
    hi_edges = right_cuts + [p.cake_length]
    for a, lo_r, hi_r in zip(rights, hi_edges, hi_edges[1:]):
        pieces[a] = [Interval(lo_r, hi_r)]
    best = value(p.density(pivot), Interval(pos, end))
    return best, Division.of(pieces)


# ---------------------------------------------------------------------------
# Exact parametric sweep: sup of a uniform slack parameter


def sup_uniform_feasible(p: Problem, pi: Sequence[str],
                         alphas: Sequence[Rat], betas: Sequence[Rat],
                         start: Rat) -> Rat:
    """Largest theta such that greedy_fit succeeds with per-agent targets
    max(0, alpha_i + beta_i * theta), for strictly positive betas.

    Exact event sweep: between events every cut position is an affine
    function of theta; events are cuts crossing grid breakpoints, a clamped
    target turning positive, and the remaining cake being exhausted.  The
    supremum is attained (feasibility is a closed condition), including at
    points where a cut jumps across a zero-density stretch.
    """
    dens = [p.density(a) for a in pi]
    if any(b <= 0 for b in betas):
        raise CakeError("sweep requires strictly positive slopes")
    c = p.cake_length
    theta = Fraction(start)
    if _greedy_raw(dens, alphas, betas, theta) is None:
        raise CakeError("sweep must start at a feasible parameter")
    while True:
        pos = Fraction(0)
        slope = Fraction(0)
        events: list[Rat] = []
        stuck = False
        for d, a, b in zip(dens, alphas, betas):
            tval = a + b * theta
            if tval < 0:
                # target clamped to zero; it unclamps at theta = -a/b
                events.append(-a / b)
                continue
            avail = total(d) - d.prefix_at(pos)
            if avail <= tval:
                stuck = True
                break
            y = maximal_mark(d, pos, tval)
            new_slope = (b + d.density_right_of(pos) * slope) / d.density_right_of(y)
            events.append(theta + (d.grid.next_breakpoint(y) - y) / new_slope)
            pos, slope = y, new_slope
        if stuck:
            return theta
        theta = min(e for e in events if e > theta)
        assert _greedy_raw(dens, alphas, betas, theta) is not None


def _greedy_raw(dens, alphas, betas, theta):
    pos = Fraction(0)
    for d, a, b in zip(dens, alphas, betas):
        t = max(Fraction(0), a + b * theta)
        y = leftmost_mark(d, pos, t)
        if y is None:
            return None
        pos = y
    return pos


def max_slack(p: Problem, pi: Sequence[str], base: UtilityVector) -> Rat:
    """Maximum uniform slack delta such that a connected pi-partition gives
    every agent at least u_i + delta * V_i; negative when even the base
    utilities are infeasible in this ordering."""
    alphas = [base.absolute[a] for a in pi]
    betas = [total(p.density(a)) for a in pi]
    start = min(-u / v for u, v in zip(alphas, betas))
    return sup_uniform_feasible(p, pi, alphas, betas, start)


# ---------------------------------------------------------------------------
# Pareto checkers over connected partitions


@dataclass
class EfficiencyResult:
    ok: bool
    ordering: Optional[tuple[str, ...]] = None
    witness: Optional[Division] = None
    witness_utilities: Optional[UtilityVector] = None

    def __bool__(self) -> bool:
        return self.ok


def check_wpo_connected(p: Problem, x: Division) -> EfficiencyResult:
    """False iff some connected partition is strictly better for every agent.

    Complete over connected partitions: sweeps all orderings, reporting the
    lexicographically first ordering that admits positive uniform slack,
    with a verified witness at half the maximal slack.
    """
    base = utilities(p, x, CONNECTED)
    for pi in itertools.permutations(p.agents):
        delta = max_slack(p, pi, base)
        if delta > 0:
            targets = {
                a: base.absolute[a] + delta / 2 * total(p.density(a))
                for a in p.agents
            }
            cuts = greedy_fit(p, pi, targets)
            assert cuts is not None
            witness = division_from_cuts(p, pi, cuts)
            wu = utilities(p, witness, CONNECTED)
            assert all(wu.absolute[a] > base.absolute[a] for a in p.agents)
            return EfficiencyResult(False, pi, witness, wu)
    return EfficiencyResult(True)


def check_po_connected(p: Problem, x: Division) -> EfficiencyResult:
    """False iff some connected partition is weakly better for all agents
    and strictly better for at least one (the pivot)."""
    base = utilities(p, x, CONNECTED)
    for pi in itertools.permutations(p.agents):
        for pivot in pi:
            targets = {a: base.absolute[a] for a in p.agents if a != pivot}
            result = _constrained_partition(p, pi, pivot, targets)
            if result is None:
                continue
            best, witness = result
            if best > base.absolute[pivot]:
                wu = utilities(p, witness, CONNECTED)
                assert all(wu.absolute[a] >= base.absolute[a] for a in p.agents)
                return EfficiencyResult(False, tuple(pi), witness, wu)
    return EfficiencyResult(True)
