"""Executable resource- and population-monotonicity checks for any rule,
plus the scripted counterexample fixture suite and the recomputed
rule-property grid.

Monotonicity comparisons use absolute utilities and existential semantics
over a rule's output set: enlarging the cake (or an agent leaving) must
admit some new division weakly better for every compared agent, and the
reverse change some division weakly worse.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import rules_classic, rules_monotone
from .cake_measure import (
    CakeError,
    Interval,
    Problem,
    Rat,
    append,
    merge_components,
    problem,
    remove_agent,
    total,
)
from .divisions import (
    ADDITIVE,
    CONNECTED,
    RELATIVE,
    ABSOLUTE,
    Division,
    check_ef,
    check_equitable,
    check_esv,
    check_prop,
    check_po_connected,
    check_wpo_connected,
    greedy_fit,
    constrained_max,
    nash_product,
    utilities,
)
from .rules_monotone import equitable_for_ordering, equitable_value_oracle


@dataclass(frozen=True)
class Rule:
    name: str
    mode: str
    arity: Optional[int]
    run: Callable[[Problem], list[Division]]


RULES: dict[str, Rule] = {}


def _register(name: str, mode: str, arity: Optional[int], run) -> None:
    RULES[name] = Rule(name, mode, arity, run)


_register("exact-proportional", CONNECTED, None,
          lambda p: [rules_monotone.exact_proportional(p)])
_register("relative-equitable", CONNECTED, None,
          lambda p: rules_monotone.max_equitable(p, RELATIVE).divisions)
_register("absolute-equitable", CONNECTED, None,
          lambda p: rules_monotone.max_equitable(p, ABSOLUTE).divisions)
_register("rightmost-mark", CONNECTED, 2,
          lambda p: [rules_monotone.rightmost_mark_rule(p)])
_register("cut-and-choose", CONNECTED, 2,
          lambda p: [rules_classic.cut_and_choose(p)])
_register("banach-knaster", CONNECTED, None,
          lambda p: [rules_classic.banach_knaster(p)])
_register("dubins-spanier", CONNECTED, None,
          lambda p: [rules_classic.dubins_spanier(p)])
_register("even-paz", CONNECTED, None,
          lambda p: [rules_classic.even_paz(p)])
_register("fink", ADDITIVE, None, lambda p: [rules_classic.fink(p)])
_register("selfridge-conway", ADDITIVE, 3,
          lambda p: [rules_classic.selfridge_conway(p)])


def get_rule(name: str) -> Rule:
    if name not in RULES:
        raise CakeError(f"unknown rule {name!r}")
    return RULES[name]


@dataclass
class MonotonicityVerdict:
    axiom: str
    direction: str
    ok: bool
    agents: tuple[str, ...]
    before: dict[str, Rat]
    after: dict[str, Rat]
    witness_pair: Optional[tuple[Division, Division]] = None


def _run(rule: Rule, p: Problem) -> list[tuple[Division, dict[str, Rat]]]:
    if rule.arity is not None and p.n != rule.arity:
        raise CakeError(f"{rule.name} requires exactly {rule.arity} agents")
    out = []
    for x in rule.run(p):
        out.append((x, utilities(p, x, rule.mode).absolute))
    return out


def _exists_verdict(axiom, direction, agents, base, other, sign) -> MonotonicityVerdict:
    """pass iff for every base division some other division is weakly
    better (sign=+1) or weakly worse (sign=-1) for every compared agent."""

    def dominates(u_other, u_base):
        return all(sign * (u_other[a] - u_base[a]) >= 0 for a in agents)

    for xb, ub in base:
        match = next(((xo, uo) for xo, uo in other if dominates(uo, ub)), None)
        if match is None:
            # report the closest candidate for diagnostics
            xo, uo = max(other,
                         key=lambda t: min(sign * (t[1][a] - ub[a]) for a in agents))
            return MonotonicityVerdict(axiom, direction, False, agents, ub, uo,
                                       (xb, xo))
    xb, ub = base[0]
    xo, uo = next((xo, uo) for xo, uo in other if dominates(uo, ub))
    return MonotonicityVerdict(axiom, direction, True, agents, ub, uo, (xb, xo))


def check_rm(rule, p: Problem, extra_lengths, extra_rows) -> list[MonotonicityVerdict]:
    """Resource-monotonicity, both directions, for a right-append enlargement."""
    if isinstance(rule, str):
        rule = get_rule(rule)
    big = append(p, extra_lengths, extra_rows)
    small_out = _run(rule, p)
    big_out = _run(rule, big)
    return [
        _exists_verdict("RM", "upwards", p.agents, small_out, big_out, +1),
        _exists_verdict("RM", "downwards", p.agents, big_out, small_out, -1),
    ]


def check_pm(rule, p: Problem, leaving: str) -> list[MonotonicityVerdict]:
    """Population-monotonicity, both directions, for one agent leaving."""
    if isinstance(rule, str):
        rule = get_rule(rule)
    reduced = remove_agent(p, leaving)
    full_out = _run(rule, p)
    red_out = _run(rule, reduced)
    agents = reduced.agents
    return [
        _exists_verdict("PM", "downwards", agents, full_out, red_out, +1),
        _exists_verdict("PM", "upwards", agents, red_out, full_out, -1),
    ]


# ---------------------------------------------------------------------------
# Randomized problem generation (fixed seeds supplied by callers)


def random_problem(rng: random.Random, n: Optional[int] = None,
                   max_slices: int = 6, strictly_positive: bool = False) -> Problem:
    n = n if n is not None else rng.choice([2, 2, 2, 3, 3, 4])
    k = rng.randint(1, max_slices)
    lengths = [rng.choice([Fraction(1), Fraction(1), Fraction(1, 2), Fraction(2)])
               for _ in range(k)]
    rows = []
    low = 1 if strictly_positive else 0
    for _ in range(n):
        row = [Fraction(rng.randint(low, 9)) for _ in range(k)]
        if all(v == 0 for v in row):
            row[rng.randrange(k)] = Fraction(rng.randint(1, 9))
        rows.append(row)
    return problem(["A", "B", "C", "D"][:n], lengths, rows)


def random_enlargement(rng: random.Random, p: Problem):
    m = rng.randint(1, 2)
    lengths = [rng.choice([Fraction(1), Fraction(1, 2), Fraction(2)])
               for _ in range(m)]
    rows = {a: [Fraction(rng.randint(0, 9)) for _ in range(m)] for a in p.agents}
    return lengths, rows


# ---------------------------------------------------------------------------
# Scripted fixture suite


@dataclass
class Claim:
    name: str
    ok: bool
    expected: str
    got: str

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {status} expected={self.expected} got={self.got}"


def _claim(claims: list[Claim], name: str, expected, got) -> None:
    claims.append(Claim(name, expected == got, str(expected), str(got)))


def _tup(*vals) -> str:
    return "(" + ", ".join(str(v) for v in vals) + ")"


def _iv(lo, hi) -> Interval:
    return Interval(Fraction(lo), Fraction(hi))


# paper counterexample cakes (unit slices unless noted)

def cake_two_agent_halves() -> Problem:
    # the cut-and-choose enlargement pair's smaller cake
    return problem(["A", "B"], [1, 1, 1, 1], [[1, 1, 1, 1], [1, 1, 3, 3]])


CC_EXTRA = ([1], {"A": [2], "B": [2]})


def cake_trimming_three() -> Problem:
    return problem(["A", "B", "C"], [1] * 6,
                   [[4, 2, 2, 4, 4, 2], [5, 2, 3, 4, 1, 1], [1, 2, 4, 4, 1, 1]])


SC_EXTRA = ([1], {"A": [6], "B": [1], "C": [1]})


def cake_sweep_three() -> Problem:
    return problem(["A", "B", "C"], [1] * 6,
                   [[20, 1, 1, 1, 10, 27], [1, 20, 10, 28, 1, 1],
                    [1, 1, 18, 10, 29, 1]])


def cake_join_order() -> Problem:
    return problem(["A", "B", "C"], [1] * 7,
                   [[2, 2, 2, 2, 1, 1, 2], [0, 0, 0, 4, 2, 2, 4],
                    [0, 0, 0, 2, 1, 1, 2]])


def cake_forced_pair() -> Problem:
    return problem(["A", "B"], [1] * 4, [[6, 0, 1, 1], [0, 4, 2, 2]])


FORCED_EXTRA = ([1], {"A": [6], "B": [0]})


def cake_no_po_ef() -> Problem:
    return problem(["A", "B", "C"], [1] * 7,
                   [[2, 0, 3, 0, 2, 0, 0], [0, 0, 0, 0, 0, 7, 0],
                    [0, 2, 0, 2, 0, 0, 3]])


def cake_nash() -> Problem:
    return problem(["A", "B"], [1] * 6, [[2] * 6, [1, 1, 4, 4, 1, 1]])


def cake_equitable_drop() -> Problem:
    m = 10
    return problem(["A", "B"], [1] * 4, [[m, m, 1, 1], [1, 1, m, m]])


EQ_DROP_EXTRA = ([1, 1], {"A": [10, 10], "B": [1, 1]})


def cake_prefix_greedy() -> Problem:
    return problem(["A", "B", "C"], [1] * 6,
                   [[2, 0, 0, 0, 0, 4], [2, 3, 1, 1, 5, 0], [2, 3, 1, 1, 5, 0]])


def cake_crumbs(eps=Fraction(1, 10)) -> Problem:
    return problem(["A", "B"], [1] * 4, [[0, 3, 2, 1], [2, 1, 2, 1 + eps]])


def cake_splitter_three() -> Problem:
    return problem(["A", "B", "C"], [1] * 6,
                   [[3, 1, 3, 1, 2, 2], [1, 3, 1, 3, 1, 2], [4, 0, 0, 0, 0, 3]])


def cake_opposed_pair() -> Problem:
    return problem(["A", "B"], [1, 1], [[2, 0], [0, 2]])


def _fx_noop() -> list[Claim]:
    claims: list[Claim] = []
    p = cake_two_agent_halves()
    verdicts = check_rm("cut-and-choose", p, [], {})
    _claim(claims, "noop/rm-identical", True, all(v.ok for v in verdicts))
    return claims


def _fx_cc_rm() -> list[Claim]:
    claims: list[Claim] = []
    p = cake_two_agent_halves()
    big = append(p, *CC_EXTRA)
    u_small = utilities(p, rules_classic.cut_and_choose(p)).absolute
    u_big = utilities(big, rules_classic.cut_and_choose(big)).absolute
    _claim(claims, "cc-rm/bob-before", Fraction(6), u_small["B"])
    _claim(claims, "cc-rm/bob-after", Fraction(5), u_big["B"])
    up, _down = check_rm("cut-and-choose", p, *CC_EXTRA)
    _claim(claims, "cc-rm/verdict", False, up.ok)
    return claims


def _fx_sc_rm() -> list[Claim]:
    claims: list[Claim] = []
    p = cake_trimming_three()
    big = append(p, *SC_EXTRA)
    u_small = utilities(p, rules_classic.selfridge_conway(p), ADDITIVE).absolute
    u_big = utilities(big, rules_classic.selfridge_conway(big), ADDITIVE).absolute
    _claim(claims, "sc-rm/carl-before", Fraction(8), u_small["C"])
    _claim(claims, "sc-rm/carl-after-at-most-7", True, u_big["C"] <= 7)
    _claim(claims, "sc-rm/carl-after-below-8", True, u_big["C"] < 8)
    up, _down = check_rm("selfridge-conway", p, *SC_EXTRA)
    _claim(claims, "sc-rm/verdict", False, up.ok)
    return claims


def _fx_ds_pm() -> list[Claim]:
    claims: list[Claim] = []
    p = cake_sweep_three()
    reduced = remove_agent(p, "B")
    for name in ("dubins-spanier", "even-paz", "banach-knaster"):
        rule = get_rule(name)
        u_full = _run(rule, p)[0][1]
        u_red = _run(rule, reduced)[0][1]
        _claim(claims, f"ds-pm/{name}-full", "(20, 30, 40)",
               _tup(u_full["A"], u_full["B"], u_full["C"]))
        _claim(claims, f"ds-pm/{name}-carl-after", Fraction(30), u_red["C"])
    down, _up = check_pm("dubins-spanier", p, "B")
    _claim(claims, "ds-pm/verdict", False, down.ok)
    return claims


def _fx_fink_pm() -> list[Claim]:
    claims: list[Claim] = []
    p = cake_join_order()
    u_full = utilities(p, rules_classic.fink(p), ADDITIVE).absolute
    reduced = remove_agent(p, "A")
    u_red = utilities(reduced, rules_classic.fink(reduced), ADDITIVE).absolute
    _claim(claims, "fink-pm/bob-before", Fraction(8), u_full["B"])
    _claim(claims, "fink-pm/bob-after", Fraction(6), u_red["B"])
    down, _up = check_pm("fink", p, "A")
    _claim(claims, "fink-pm/verdict", False, down.ok)
    return claims


def _fx_thm1() -> list[Claim]:
    claims: list[Claim] = []
    p = cake_forced_pair()
    share = {a: total(p.density(a)) / 2 for a in p.agents}

    def best(q: Problem, pivot: str, floor: dict[str, Rat]) -> Optional[Rat]:
        vals = [constrained_max(q, pi, pivot, floor)
                for pi in ((q.agents), tuple(reversed(q.agents)))]
        vals = [v for v in vals if v is not None]
        return max(vals, default=None)

    _claim(claims, "thm1/alice-max-given-prop", Fraction(6),
           best(p, "A", {"B": share["B"]}))
    _claim(claims, "thm1/bob-max-given-prop", Fraction(8),
           best(p, "B", {"A": share["A"]}))
    big = append(p, *FORCED_EXTRA)
    _claim(claims, "thm1/bob-max-given-alice-7", Fraction(6),
           best(big, "B", {"A": Fraction(7)}))
    _claim(claims, "thm1/greedy-7-7-infeasible", None,
           greedy_fit(big, big.agents, {"A": Fraction(7), "B": Fraction(7)}))
    return claims


def _fx_thm2() -> list[Claim]:
    claims: list[Claim] = []
    p = cake_no_po_ef()
    division = Division.of({"A": [_iv(0, 5)], "B": [_iv(5, 6)], "C": [_iv(6, 7)]})
    _claim(claims, "thm2/carl-envies-alice", False, check_ef(p, division))
    reduced = remove_agent(p, "B")
    vals = [constrained_max(reduced, pi, "A", {"C": Fraction(7, 2)})
            for pi in (("A", "C"), ("C", "A"))]
    best = max(v for v in vals if v is not None)
    _claim(claims, "thm2/alice-max-given-carl", Fraction(5), best)
    return claims


def _fx_nash() -> list[Claim]:
    claims: list[Claim] = []
    p = cake_nash()
    bps = p.grid.breakpoints
    best = Fraction(0)
    for cut in bps:
        for pieces in ({"A": [_iv(0, cut)], "B": [_iv(cut, 6)]},
                       {"B": [_iv(0, cut)], "A": [_iv(cut, 6)]}):
            x = Division.of(pieces)
            if check_prop(p, x):
                best = max(best, nash_product(p, x))
    _claim(claims, "nash/best-proportional-product", Fraction(36), best)
    lopsided = Division.of({"A": [_iv(0, 2)], "B": [_iv(2, 6)]})
    _claim(claims, "nash/lopsided-product", Fraction(40), nash_product(p, lopsided))
    return claims


def _fx_eq_not_rm() -> list[Claim]:
    claims: list[Claim] = []
    p = cake_equitable_drop()
    big = append(p, *EQ_DROP_EXTRA)
    small_rel = rules_monotone.max_equitable(p, RELATIVE)
    big_rel = rules_monotone.max_equitable(big, RELATIVE)
    _claim(claims, "eq-not-rm/small-value", Fraction(10, 11), small_rel.value)
    _claim(claims, "eq-not-rm/big-value", Fraction(1, 2), big_rel.value)
    u_small = utilities(p, small_rel.divisions[0]).absolute
    _claim(claims, "eq-not-rm/bob-before", Fraction(20), u_small["B"])
    after = {utilities(big, x).absolute["B"] for x in big_rel.divisions}
    _claim(claims, "eq-not-rm/bob-after", {Fraction(12)}, after)
    up, _down = check_rm("relative-equitable", p, *EQ_DROP_EXTRA)
    _claim(claims, "eq-not-rm/relative-verdict", False, up.ok)
    verdicts = check_rm("absolute-equitable", p, *EQ_DROP_EXTRA)
    _claim(claims, "eq-not-rm/absolute-verdict", True,
           all(v.ok for v in verdicts))
    return claims


def _fx_prefix_wpo() -> list[Claim]:
    claims: list[Claim] = []
    p = cake_prefix_greedy()
    for name in ("banach-knaster", "dubins-spanier", "even-paz"):
        rule = get_rule(name)
        x, u = _run(rule, p)[0]
        _claim(claims, f"classic-wpo/{name}-utilities", "(2, 5, 5)",
               _tup(u["A"], u["B"], u["C"]))
        result = check_wpo_connected(p, x)
        _claim(claims, f"classic-wpo/{name}-wpo", False, result.ok)
        wu = result.witness_utilities.absolute
        _claim(claims, f"classic-wpo/{name}-witness-dominates", True,
               all(wu[a] > u[a] for a in p.agents))
    witness = Division.of({"A": [_iv(5, 6)], "B": [_iv(0, 3)], "C": [_iv(3, 5)]})
    wu = utilities(p, witness).absolute
    _claim(claims, "classic-wpo/paper-witness", "(4, 6, 6)",
           _tup(wu["A"], wu["B"], wu["C"]))
    return claims


def _fx_crumbs_wpo() -> list[Claim]:
    claims: list[Claim] = []
    p = cake_crumbs()
    x = rules_classic.fink(p)
    u = utilities(p, x, ADDITIVE).absolute
    _claim(claims, "crumbs-wpo/output", "(3, 31/10)", _tup(u["A"], u["B"]))
    witness = Division.of({"A": [_iv(1, 2), _iv(3, 4)],
                           "B": [_iv(0, 1), _iv(2, 3)]})
    wu = utilities(p, witness, ADDITIVE).absolute
    _claim(claims, "crumbs-wpo/witness", "(4, 4)", _tup(wu["A"], wu["B"]))
    _claim(claims, "crumbs-wpo/witness-dominates", True,
           all(wu[a] > u[a] for a in p.agents))
    return claims


def _fx_splitter_wpo() -> list[Claim]:
    claims: list[Claim] = []
    p = cake_splitter_three()
    x = rules_classic.selfridge_conway(p)
    u = utilities(p, x, ADDITIVE).absolute
    _claim(claims, "splitter-wpo/output", "(4, 4, 4)",
           _tup(u["A"], u["B"], u["C"]))
    witness = Division.of({"A": [_iv(2, 3), _iv(4, 5)],
                           "B": [_iv(1, 2), _iv(3, 4)],
                           "C": [_iv(0, 1), _iv(5, 6)]})
    wu = utilities(p, witness, ADDITIVE).absolute
    _claim(claims, "splitter-wpo/witness", "(5, 6, 7)",
           _tup(wu["A"], wu["B"], wu["C"]))
    _claim(claims, "splitter-wpo/witness-dominates", True,
           all(wu[a] > u[a] for a in p.agents))
    return claims


# rule-property grid: recomputed entries for the four monotone rules

def cake_prefix_envy() -> Problem:
    # exact-proportional gives A a prefix that B and C value higher
    return problem(["A", "B", "C"], [1] * 3,
                   [[3, 0, 0], [1, 1, 1], [1, 1, 1]])


def cake_skewed_totals() -> Problem:
    # absolute-equitable output is neither proportional nor envy-free here
    return problem(["A", "B"], [1, 1], [[1, 0], [0, 10]])


def cake_eq_envy() -> Problem:
    # max-relative-equitable output: C values A's piece at 3/5 > 2/5
    return problem(["A", "B", "C"], [1] * 3,
                   [[1, 0, 2], [0, 1, 0], [0, 0, 1]])


def cake_mirrored_gap() -> Problem:
    return problem(["A", "B"], [1] * 3, [[1, 0, 1], [0, 1, 0]])


def cake_reversed_gap() -> Problem:
    return problem(["A", "B"], [1, 1], [[0, 1], [1, 0]])


def cake_flat_vs_skewed() -> Problem:
    return problem(["A", "B"], [1, 1], [[1, 0], [10, 10]])


def _grid_corpus(rule: Rule) -> list[Problem]:
    pool = [cake_two_agent_halves(), cake_equitable_drop(), cake_opposed_pair(),
            cake_sweep_three(), cake_prefix_greedy()]
    return [p for p in pool if rule.arity is None or p.n == rule.arity]


def _all_pass(rule: Rule, check) -> bool:
    return all(check(p, x) for p in _grid_corpus(rule) for x, _ in _run(rule, p))


def _connected_entry(rule: Rule) -> str:
    def connected(p, x):
        return all(len(merge_components(x.piece(a))) <= 1 for a in p.agents)
    return "Yes" if _all_pass(rule, connected) else "No"


def _ef_entry(rule: Rule) -> str:
    counterexample = {
        "exact-proportional": cake_prefix_envy,
        "absolute-equitable": cake_skewed_totals,
        "relative-equitable": cake_eq_envy,
    }.get(rule.name)
    if counterexample is not None:
        p = counterexample()
        if any(not check_ef(p, x) for x, _ in _run(rule, p)):
            return "No"
    return "Yes" if _all_pass(rule, lambda p, x: check_ef(p, x)) else "No"


def _prop_entry(rule: Rule) -> str:
    if rule.name == "absolute-equitable":
        p = cake_skewed_totals()
        if any(not check_prop(p, x) for x, _ in _run(rule, p)):
            return "No"
    return "Yes" if _all_pass(rule, lambda p, x: check_prop(p, x)) else "No"


def _wpo_entry(rule: Rule) -> str:
    if rule.name == "exact-proportional":
        p = cake_opposed_pair()
        if any(not check_wpo_connected(p, x).ok for x, _ in _run(rule, p)):
            return "No"
    return "Y.c.u." if _all_pass(
        rule, lambda p, x: check_wpo_connected(p, x).ok) else "No"


def _po_entry(rule: Rule) -> str:
    counterexample = {
        "exact-proportional": cake_opposed_pair,
        "absolute-equitable": cake_flat_vs_skewed,
        "relative-equitable": cake_mirrored_gap,
        "rightmost-mark": cake_reversed_gap,
    }[rule.name]()
    bad = any(not check_po_connected(counterexample, x).ok
              for x, _ in _run(rule, counterexample))
    return "No" if bad else "Yes"


def _rm_entry(rule: Rule) -> str:
    pairs = [(cake_two_agent_halves(), CC_EXTRA), (cake_equitable_drop(), EQ_DROP_EXTRA)]
    if rule.arity is None:
        pairs.append((cake_sweep_three(), ([1], {"A": [3], "B": [0], "C": [5]})))
    ok = all(v.ok for p, extra in pairs for v in check_rm(rule, p, *extra))
    return "Yes" if ok else "No"


def _pm_entry(rule: Rule) -> str:
    cases = [(cake_sweep_three(), "B"), (cake_join_order(), "A"),
             (cake_two_agent_halves(), "A")]
    cases = [(p, a) for p, a in cases if rule.arity is None or p.n == rule.arity]
    try:
        ok = all(v.ok for p, a in cases for v in check_pm(rule, p, a))
    except CakeError:
        # the reduced problem leaves the rule's domain
        return "No"
    return "Yes" if ok else "No"


GRID_EXPECTED = {
    "exact-proportional": dict(CON="Yes", EF="No", PROP="Yes", PO="No",
                               WPO="No", RM="Yes", PM="Yes"),
    "absolute-equitable": dict(CON="Yes", EF="No", PROP="No", PO="No",
                               WPO="Y.c.u.", RM="Yes", PM="Yes"),
    "relative-equitable": dict(CON="Yes", EF="No", PROP="Yes", PO="No",
                               WPO="Y.c.u.", RM="No", PM="Yes"),
    "rightmost-mark": dict(CON="Yes", EF="Yes", PROP="Yes", PO="No",
                           WPO="Y.c.u.", RM="Yes", PM="No"),
}


def compute_grid() -> dict[str, dict[str, str]]:
    grid = {}
    for name in GRID_EXPECTED:
        rule = get_rule(name)
        grid[name] = dict(
            CON=_connected_entry(rule),
            EF=_ef_entry(rule),
            PROP=_prop_entry(rule),
            PO=_po_entry(rule),
            WPO=_wpo_entry(rule),
            RM=_rm_entry(rule),
            PM=_pm_entry(rule),
        )
    return grid


def _fx_table1() -> list[Claim]:
    claims: list[Claim] = []
    grid = compute_grid()
    for name, row in GRID_EXPECTED.items():
        for prop, expected in row.items():
            _claim(claims, f"table1/{name}/{prop}", expected, grid[name][prop])
    return claims


FIXTURES: dict[str, Callable[[], list[Claim]]] = {
    "noop": _fx_noop,
    "cc-rm": _fx_cc_rm,
    "sc-rm": _fx_sc_rm,
    "ds-pm": _fx_ds_pm,
    "fink-pm": _fx_fink_pm,
    "thm1": _fx_thm1,
    "thm2": _fx_thm2,
    "nash-connected": _fx_nash,
    "eq-not-rm": _fx_eq_not_rm,
    "classic-wpo": _fx_prefix_wpo,
    "crumbs-wpo": _fx_crumbs_wpo,
    "splitter-wpo": _fx_splitter_wpo,
    "table1": _fx_table1,
}


def run_fixture(name: str) -> list[Claim]:
    if name not in FIXTURES:
        raise CakeError(f"unknown fixture {name!r}")
    return FIXTURES[name]()


def run_all_fixtures() -> list[Claim]:
    claims = []
    for name in FIXTURES:
        claims.extend(run_fixture(name))
    return claims
