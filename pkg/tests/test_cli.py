"""Golden-file style CLI tests: stable line-oriented output and exit codes."""

import json

import pytest

from cakecut.cli import main

CC_SMALL = {
    "slices": [{"length": "1"}] * 4,
    "agents": [
        {"name": "A", "densities": ["1", "1", "1", "1"]},
        {"name": "B", "densities": ["1", "1", "3", "3"]},
    ],
}

CC_EXTRA = {
    "slices": [{"length": "1"}],
    "agents": [
        {"name": "A", "densities": ["2"]},
        {"name": "B", "densities": ["2"]},
    ],
}

DROP_SMALL = {
    "slices": [{"length": "1"}] * 4,
    "agents": [
        {"name": "A", "densities": ["10", "10", "1", "1"]},
        {"name": "B", "densities": ["1", "1", "10", "10"]},
    ],
}

SWEEP = {
    "slices": [{"length": "1"}] * 6,
    "agents": [
        {"name": "A", "densities": ["20", "1", "1", "1", "10", "27"]},
        {"name": "B", "densities": ["1", "20", "10", "28", "1", "1"]},
        {"name": "C", "densities": ["1", "1", "18", "10", "29", "1"]},
    ],
}

EXAMPLE_DIVISION = [
    {"agent": "A", "intervals": [["0", "5"]]},
    {"agent": "B", "intervals": [["5", "6"]]},
    {"agent": "C", "intervals": [["6", "7"]]},
]

EXAMPLE_CAKE = {
    "slices": [{"length": "1"}] * 7,
    "agents": [
        {"name": "A", "densities": ["2", "0", "3", "0", "2", "0", "0"]},
        {"name": "B", "densities": ["0", "0", "0", "0", "0", "7", "0"]},
        {"name": "C", "densities": ["0", "2", "0", "2", "0", "0", "3"]},
    ],
}


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


class TestDivide:
    def test_cut_and_choose_golden(self, files, capsys):
        prob = files("p.json", CC_SMALL)
        code, out, _ = run(capsys, "divide", "--rule", "cut-and-choose",
                           "--problem", prob)
        assert code == 0
        assert out == [
            "rule: cut-and-choose",
            "agent A: absolute 2 relative 1/2",
            "agent B: absolute 6 relative 3/4",
            'division: [{"agent": "A", "intervals": [["0", "2"]]}, '
            '{"agent": "B", "intervals": [["2", "4"]]}]',
        ]

    def test_relative_equitable_utilities(self, files, capsys):
        prob = files("p.json", DROP_SMALL)
        code, out, _ = run(capsys, "divide", "--rule", "relative-equitable",
                           "--problem", prob)
        assert code == 0
        assert "value: 10/11" in out
        assert "agent A: absolute 20 relative 10/11" in out
        assert "agent B: absolute 20 relative 10/11" in out

    def test_ordering_flag(self, files, capsys):
        prob = files("p.json", DROP_SMALL)
        code, out, _ = run(capsys, "divide", "--rule", "relative-equitable",
                           "--problem", prob, "--ordering", "B,A")
        assert code == 0
        assert "ordering: B,A" in out

    def test_arity_violation_exits_2(self, files, capsys):
        prob = files("p.json", SWEEP)
        code, _, err = run(capsys, "divide", "--rule", "rightmost-mark",
                           "--problem", prob)
        assert code == 2
        assert "requires exactly 2 agents" in err

    def test_output_file(self, files, capsys, tmp_path):
        prob = files("p.json", CC_SMALL)
        out_path = tmp_path / "division.json"
        code, out, _ = run(capsys, "divide", "--rule", "cut-and-choose",
                           "--problem", prob, "--output", str(out_path))
        assert code == 0
        written = json.loads(out_path.read_text())
        assert written[0] == {"agent": "A", "intervals": [["0", "2"]]}


class TestCheck:
    def test_round_trip_divide_then_check(self, files, capsys, tmp_path):
        prob = files("p.json", CC_SMALL)
        out_path = tmp_path / "division.json"
        run(capsys, "divide", "--rule", "exact-proportional",
            "--problem", prob, "--output", str(out_path))
        code, out, _ = run(capsys, "check", "--problem", prob,
                           "--division", str(out_path),
                           "--properties", "prop,equitable")
        assert code == 0
        assert out == ["prop: PASS", "equitable: PASS v_min=1/2 v_max=1/2"]

    def test_ef_failure(self, files, capsys):
        prob = files("p.json", EXAMPLE_CAKE)
        div = files("d.json", EXAMPLE_DIVISION)
        code, out, _ = run(capsys, "check", "--problem", prob,
                           "--division", div, "--properties", "ef")
        assert code == 1
        assert out == ["ef: FAIL"]

    def test_wpo_failure_with_witness(self, files, capsys):
        prob = files("p.json", {
            "slices": [{"length": "1"}] * 6,
            "agents": [
                {"name": "A", "densities": ["2", "0", "0", "0", "0", "4"]},
                {"name": "B", "densities": ["2", "3", "1", "1", "5", "0"]},
                {"name": "C", "densities": ["2", "3", "1", "1", "5", "0"]},
            ],
        })
        div = files("d.json", [
            {"agent": "A", "intervals": [["0", "1"]]},
            {"agent": "B", "intervals": [["1", "4"]]},
            {"agent": "C", "intervals": [["4", "6"]]},
        ])
        code, out, _ = run(capsys, "check", "--problem", prob,
                           "--division", div, "--properties", "wpo")
        assert code == 1
        assert out[0].startswith("wpo: FAIL witness ")

    def test_unknown_property_exits_2(self, files, capsys):
        prob = files("p.json", CC_SMALL)
        div = files("d.json", [{"agent": "A", "intervals": [["0", "4"]]}])
        code, _, err = run(capsys, "check", "--problem", prob,
                           "--division", div, "--properties", "bogus")
        assert code == 2
        assert "unknown property" in err


class TestMonotonicity:
    def test_rm_failure(self, files, capsys):
        prob = files("p.json", CC_SMALL)
        extra = files("e.json", CC_EXTRA)
        code, out, _ = run(capsys, "monotonicity", "rm",
                           "--rule", "cut-and-choose", "--problem", prob,
                           "--enlargement", extra)
        assert code == 1
        assert out[0] == "RM upwards: FAIL before[A=2 B=6] after[A=3 B=5]"

    def test_empty_enlargement_passes(self, files, capsys):
        prob = files("p.json", CC_SMALL)
        extra = files("e.json", {"slices": [], "agents": [
            {"name": "A", "densities": []}, {"name": "B", "densities": []}]})
        code, out, _ = run(capsys, "monotonicity", "rm",
                           "--rule", "cut-and-choose", "--problem", prob,
                           "--enlargement", extra)
        assert code == 0
        assert all(line.split(": ")[1].startswith("PASS") for line in out)

    def test_pm_failure(self, files, capsys):
        prob = files("p.json", SWEEP)
        code, out, _ = run(capsys, "monotonicity", "pm",
                           "--rule", "dubins-spanier", "--problem", prob,
                           "--remove", "B")
        assert code == 1
        assert out[0].startswith("PM downwards: FAIL")

    def test_missing_flag_exits_2(self, files, capsys):
        prob = files("p.json", SWEEP)
        code, _, err = run(capsys, "monotonicity", "rm",
                           "--rule", "dubins-spanier", "--problem", prob)
        assert code == 2
        assert "requires --enlargement" in err


class TestOtherCommands:
    def test_max_equitable(self, files, capsys):
        prob = files("p.json", DROP_SMALL)
        code, out, _ = run(capsys, "max-equitable", "--problem", prob,
                           "--mode", "absolute")
        assert code == 0
        assert out[0] == "mode: absolute"
        assert out[1] == "value: 20"

    def test_paper_tables_single_fixture(self, capsys):
        code, out, _ = run(capsys, "paper-tables", "--only", "thm2")
        assert code == 0
        assert out == [
            "thm2/carl-envies-alice: PASS expected=False got=False",
            "thm2/alice-max-given-carl: PASS expected=5 got=5",
        ]

    def test_paper_tables_unknown_fixture(self, capsys):
        code, _, err = run(capsys, "paper-tables", "--only", "bogus")
        assert code == 2
        assert "unknown fixture" in err

    def test_decimal_display(self, files, capsys):
        prob = files("p.json", DROP_SMALL)
        code, out, _ = run(capsys, "--decimal", "3", "divide",
                           "--rule", "relative-equitable", "--problem", prob)
        assert code == 0
        assert "value: 0.909" in out
        assert "agent A: absolute 20.000 relative 0.909" in out

    def test_parse_error_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, err = run(capsys, "divide", "--rule", "cut-and-choose",
                           "--problem", str(bad))
        assert code == 2
        assert "cannot read" in err

    def test_determinism(self, files, capsys):
        prob = files("p.json", SWEEP)
        runs = [run(capsys, "divide", "--rule", "banach-knaster",
                    "--problem", prob) for _ in range(2)]
        assert runs[0] == runs[1]
