"""Monotonicity harness semantics and the scripted fixture suite."""

from fractions import Fraction as F

import pytest

from cakecut.cake_measure import CakeError, problem
from cakecut.monotonicity_harness import (
    FIXTURES,
    GRID_EXPECTED,
    check_pm,
    check_rm,
    compute_grid,
    get_rule,
    run_all_fixtures,
    run_fixture,
)


def halves_pair():
    return problem(["A", "B"], [1] * 4, [[1, 1, 1, 1], [1, 1, 3, 3]])


class TestHarness:
    def test_empty_enlargement_always_passes(self):
        verdicts = check_rm("cut-and-choose", halves_pair(), [], {})
        assert all(v.ok for v in verdicts)
        assert {v.direction for v in verdicts} == {"upwards", "downwards"}

    def test_rm_failure_reports_utilities(self):
        up, down = check_rm("cut-and-choose", halves_pair(),
                            [1], {"A": [2], "B": [2]})
        assert not up.ok
        assert up.before["B"] == 6 and up.after["B"] == 5
        assert not down.ok

    def test_pm_identical_agents_survivor_gains(self):
        p = problem(["A", "B"], [1, 1], [[1, 1], [1, 1]])
        verdicts = check_pm("relative-equitable", p, "A")
        assert all(v.ok for v in verdicts)
        assert verdicts[0].agents == ("B",)

    def test_pm_failure(self):
        p = problem(["A", "B", "C"], [1] * 7,
                    [[2, 2, 2, 2, 1, 1, 2], [0, 0, 0, 4, 2, 2, 4],
                     [0, 0, 0, 2, 1, 1, 2]])
        down, up = check_pm("fink", p, "A")
        assert not down.ok
        assert down.before["B"] == 8 and down.after["B"] == 6

    def test_esv_rules_have_matching_directions(self):
        pairs = [
            (halves_pair(), ([1], {"A": [2], "B": [2]})),
            (problem(["A", "B"], [1] * 4, [[10, 10, 1, 1], [1, 1, 10, 10]]),
             ([1, 1], {"A": [10, 10], "B": [1, 1]})),
        ]
        for name in ("exact-proportional", "relative-equitable",
                     "absolute-equitable", "rightmost-mark"):
            for p, extra in pairs:
                up, down = check_rm(name, p, *extra)
                assert up.ok == down.ok

    def test_arity_enforced(self):
        p = problem(["A", "B", "C"], [1], [[1], [1], [1]])
        with pytest.raises(CakeError):
            check_rm("rightmost-mark", p, [], {})

    def test_unknown_rule(self):
        with pytest.raises(CakeError):
            get_rule("nonexistent")


class TestFixtures:
    def test_unknown_fixture(self):
        with pytest.raises(CakeError):
            run_fixture("nonexistent")

    def test_all_fixture_names_run(self):
        assert set(FIXTURES) == {
            "noop", "cc-rm", "sc-rm", "ds-pm", "fink-pm", "thm1", "thm2",
            "nash-connected", "eq-not-rm", "classic-wpo", "crumbs-wpo",
            "splitter-wpo", "table1",
        }

    @pytest.mark.parametrize("name", sorted(FIXTURES))
    def test_fixture_passes(self, name):
        claims = run_fixture(name)
        assert claims, "fixture must emit at least one claim"
        failures = [c.line() for c in claims if not c.ok]
        assert not failures, failures

    def test_report_lines_stable(self):
        lines = [c.line() for c in run_fixture("thm2")]
        assert lines == [
            "thm2/carl-envies-alice: PASS expected=False got=False",
            "thm2/alice-max-given-carl: PASS expected=5 got=5",
        ]


class TestGrid:
    def test_recomputed_grid_matches_expected(self):
        assert compute_grid() == GRID_EXPECTED

    def test_grid_shape(self):
        for row in GRID_EXPECTED.values():
            assert set(row) == {"CON", "EF", "PROP", "PO", "WPO", "RM", "PM"}
