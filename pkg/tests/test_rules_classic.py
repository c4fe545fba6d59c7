"""Classic protocols against their hand-traced outputs."""

from fractions import Fraction as F

import pytest

from cakecut.cake_measure import (
    CakeError,
    Interval,
    append,
    merge_components,
    problem,
    remove_agent,
)
from cakecut.divisions import ADDITIVE, check_prop, utilities
from cakecut.rules_classic import (
    banach_knaster,
    cut_and_choose,
    dubins_spanier,
    even_paz,
    fink,
    selfridge_conway,
    split_equal,
)


def iv(lo, hi):
    return Interval(F(lo), F(hi))


def halves_pair():
    return problem(["A", "B"], [1] * 4, [[1, 1, 1, 1], [1, 1, 3, 3]])


def sweep_three():
    return problem(["A", "B", "C"], [1] * 6,
                   [[20, 1, 1, 1, 10, 27], [1, 20, 10, 28, 1, 1],
                    [1, 1, 18, 10, 29, 1]])


def join_order():
    return problem(["A", "B", "C"], [1] * 7,
                   [[2, 2, 2, 2, 1, 1, 2], [0, 0, 0, 4, 2, 2, 4],
                    [0, 0, 0, 2, 1, 1, 2]])


def trimming_three():
    return problem(["A", "B", "C"], [1] * 6,
                   [[4, 2, 2, 4, 4, 2], [5, 2, 3, 4, 1, 1],
                    [1, 2, 4, 4, 1, 1]])


class TestSplitEqual:
    def test_uniform_quarters(self):
        p = problem(["A"], [1] * 4, [[1, 1, 1, 1]])
        parts = split_equal(p.density("A"), [iv(0, 4)], 4)
        assert parts == [[iv(0, 1)], [iv(1, 2)], [iv(2, 3)], [iv(3, 4)]]

    def test_last_part_absorbs_worthless_tail(self):
        p = problem(["A"], [1, 1], [[1, 0]])
        parts = split_equal(p.density("A"), [iv(0, 2)], 2)
        assert parts == [[iv(0, F(1, 2))], [iv(F(1, 2), 2)]]

    def test_split_across_components(self):
        p = problem(["A"], [1] * 4, [[1, 0, 1, 0]])
        parts = split_equal(p.density("A"), [iv(0, 1), iv(2, 3)], 2)
        assert parts == [[iv(0, 1)], [iv(2, 3)]]


class TestCutAndChoose:
    def test_small_cake(self):
        p = halves_pair()
        x = cut_and_choose(p)
        assert x.piece("A") == (iv(0, 2),)
        assert x.piece("B") == (iv(2, 4),)
        assert utilities(p, x).absolute == {"A": 2, "B": 6}

    def test_enlarged_cake_chooser_tie_takes_right(self):
        p = append(halves_pair(), [1], {"A": [2], "B": [2]})
        x = cut_and_choose(p)
        assert x.piece("A") == (iv(0, 3),)
        assert x.piece("B") == (iv(3, 5),)
        assert utilities(p, x).absolute["B"] == 5

    def test_chooser_takes_left_on_strict_preference(self):
        p = problem(["A", "B"], [1, 1], [[1, 1], [3, 1]])
        x = cut_and_choose(p)
        assert x.piece("B") == (iv(0, 1),)
        assert x.piece("A") == (iv(1, 2),)

    def test_requires_two_agents(self):
        with pytest.raises(CakeError):
            cut_and_choose(sweep_three())


class TestSweepProtocols:
    def test_three_agent_utilities_agree(self):
        p = sweep_three()
        for rule in (dubins_spanier, even_paz, banach_knaster):
            u = utilities(p, rule(p))
            assert u.absolute == {"A": 20, "B": 30, "C": 40}

    def test_reduced_cake_utilities_agree(self):
        p = remove_agent(sweep_three(), "B")
        for rule in (dubins_spanier, even_paz, banach_knaster):
            u = utilities(p, rule(p))
            assert u.absolute == {"A": 37, "C": 30}

    def test_dubins_spanier_pieces(self):
        x = dubins_spanier(sweep_three())
        assert x.piece("A") == (iv(0, 1),)
        # Bob's exact one-third stop falls inside the third slice
        assert x.piece("B")[0].lo == 1

    def test_outputs_proportional(self):
        for p in (sweep_three(), join_order(), trimming_three()):
            for rule in (dubins_spanier, even_paz, banach_knaster):
                assert check_prop(p, rule(p))

    def test_banach_knaster_trim_only_on_strict_excess(self):
        # identical agents: nobody trims, first agent in order takes each piece
        p = problem(["A", "B"], [1, 1], [[1, 1], [1, 1]])
        x = banach_knaster(p)
        assert x.piece("A") == (iv(0, 1),)
        assert x.piece("B") == (iv(1, 2),)


class TestFink:
    def test_three_agent_trace(self):
        p = join_order()
        x = fink(p)
        u = utilities(p, x, ADDITIVE)
        assert u.absolute == {"A": 4, "B": 8, "C": 2}
        assert merge_components(x.piece("A")) == [iv(0, 2)]
        assert merge_components(x.piece("B")) == [iv(3, 6)]
        assert merge_components(x.piece("C")) == [iv(2, 3), iv(6, 7)]

    def test_reduced_cake_trace(self):
        p = remove_agent(join_order(), "A")
        x = fink(p)
        u = utilities(p, x, ADDITIVE)
        assert u.absolute == {"B": 6, "C": 3}
        assert merge_components(x.piece("B")) == [iv(0, 5)]
        assert merge_components(x.piece("C")) == [iv(5, 7)]

    def test_every_agent_gets_proportional_additive_share(self):
        for p in (join_order(), sweep_three(), trimming_three()):
            u = utilities(p, fink(p), ADDITIVE)
            assert all(v >= F(1, p.n) for v in u.relative.values())


class TestSelfridgeConway:
    def test_pass_path_small_cake(self):
        p = trimming_three()
        x = selfridge_conway(p)
        assert x.piece("C") == (iv(2, 4),)
        assert x.piece("B") == (iv(0, 2),)
        assert x.piece("A") == (iv(4, 6),)
        u = utilities(p, x, ADDITIVE)
        assert u.absolute == {"A": 6, "B": 7, "C": 8}

    def test_trim_path_enlarged_cake(self):
        p = append(trimming_three(), [1], {"A": [6], "B": [1], "C": [1]})
        x = selfridge_conway(p)
        u = utilities(p, x, ADDITIVE)
        assert u.absolute["C"] == 7
        # Carl: whole middle part plus his piece of the trimmings
        assert set(x.piece("C")) == {iv(3, 5), iv(2, F(5, 2))}
        assert set(x.piece("B")) == {iv(0, 1), iv(1, 2)}
        assert set(x.piece("A")) == {iv(5, 7), iv(F(5, 2), 3)}

    def test_outputs_proportional_additive(self):
        for p in (trimming_three(), sweep_three(), join_order()):
            u = utilities(p, selfridge_conway(p), ADDITIVE)
            assert all(v >= F(1, 3) for v in u.relative.values())

    def test_requires_three_agents(self):
        with pytest.raises(CakeError):
            selfridge_conway(halves_pair())
