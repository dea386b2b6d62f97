"""Expression language, rendering, subcommands, and exit codes."""

import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from cofmap import Bicyclic, CofMap, IDENTITY, ZERO
from cofmap.cli import (
    ExprTypeError,
    ParseError,
    eval_expr,
    main,
    parse,
    render,
    two_row_preview,
)

UP = CofMap((), (1,))


def run_cli(*args, stdin=None, env=None):
    cmd = [sys.executable, "-m", "cofmap", *args]
    return subprocess.run(cmd, input=stdin, capture_output=True, env=env)


class TestParse:
    def test_literals(self):
        assert eval_expr(parse("m[;1]")) == UP
        assert eval_expr(parse("m[;]")) == IDENTITY
        assert eval_expr(parse("id")) == IDENTITY
        assert eval_expr(parse("m[2;1,3]")) == CofMap((2,), (1, 3))
        assert eval_expr(parse("b[2,3]")) == Bicyclic(2, 3)
        assert eval_expr(parse("z[-7]")) == -7
        assert eval_expr(parse("O")) is ZERO

    def test_whitespace_insensitive(self):
        a = eval_expr(parse("m[ 1 , 2 ; 3 ] * ( m[;1] ' )"))
        b = eval_expr(parse("m[1,2;3]*(m[;1]')"))
        assert a == b

    def test_inversion_and_grouping(self):
        assert eval_expr(parse("m[2;1,3]'")) == CofMap((1, 3), (2,))
        assert eval_expr(parse("b[2,3]'")) == Bicyclic(3, 2)
        assert eval_expr(parse("(m[;1] * m[;1])'")) == CofMap((1, 2), ())
        assert eval_expr(parse("m[;1]''")) == UP

    def test_composition_is_left_to_right(self):
        assert eval_expr(parse("m[;1] * m[1;]")) == IDENTITY
        assert eval_expr(parse("m[1;] * m[;1]")) == CofMap((1,), (1,))

    @pytest.mark.parametrize(
        "text",
        ["m[3,2;]", "m[1,1;]", "m[0;]", "m[;1", "b[1]", "z[]", "q", "m[;1] *", "z[1]'", "O'", "id id"],
    )
    def test_syntax_errors(self, text):
        with pytest.raises(ParseError):
            parse(text)

    def test_error_position_reported(self):
        with pytest.raises(ParseError) as err:
            parse("m[;1] * m[5,4;]")
        assert err.value.span[0] >= 10

    def test_type_errors_surface_at_eval(self):
        # a literal inversion is already a parse error; a computed one is not
        with pytest.raises(ParseError):
            parse("(z[1])'")
        with pytest.raises(ExprTypeError):
            eval_expr(parse("(z[1] * z[2])'"))
        with pytest.raises(ExprTypeError):
            eval_expr(parse("z[1] * O"))
        with pytest.raises(ExprTypeError):
            eval_expr(parse("O * z[1]"))


class TestEval:
    def test_carrier_promotions(self):
        assert eval_expr(parse("b[0,1] * m[1;]")) == IDENTITY
        assert eval_expr(parse("m[1;] * b[0,1]")) == CofMap((1,), (1,))
        assert eval_expr(parse("b[0,1] * b[1,0]")) == Bicyclic(0, 0)
        assert eval_expr(parse("z[2] * m[;1]")) == 3
        assert eval_expr(parse("m[;1] * z[2]")) == 3
        assert eval_expr(parse("z[2] * b[0,1]")) == 3
        assert eval_expr(parse("z[3] * z[-2]")) == 1
        assert eval_expr(parse("O * m[;1]")) is ZERO
        assert eval_expr(parse("b[1,1] * O")) is ZERO


mixed_values = st.one_of(
    st.builds(
        CofMap,
        st.frozensets(st.integers(1, 30), max_size=10).map(lambda s: tuple(sorted(s))),
        st.frozensets(st.integers(1, 30), max_size=10).map(lambda s: tuple(sorted(s))),
    ),
    st.builds(Bicyclic, st.integers(0, 20), st.integers(0, 20)),
    st.integers(-50, 50),
    st.just(ZERO),
)


class TestRender:
    def test_canonical_forms(self):
        assert render(IDENTITY) == "m[;]"
        assert render(CofMap((1, 2), (5,))) == "m[1,2;5]"
        assert render(Bicyclic(0, 3)) == "b[0,3]"
        assert render(-4) == "z[-4]"
        assert render(ZERO) == "O"

    @given(mixed_values)
    def test_round_trip(self, v):
        assert eval_expr(parse(render(v))) == v

    def test_two_row_preview(self):
        top, bottom = two_row_preview(CofMap((2,), (1, 3)), 3)
        assert top == "( 1 3 4 ... )"
        assert bottom == "( 2 4 5 ... )"


class TestMainExitCodes:
    def test_success(self, capsys):
        assert main(["eval", "m[;1] * m[1;]"]) == 0
        assert capsys.readouterr().out == "m[;]\n"

    def test_parse_error_is_2(self, capsys):
        assert main(["eval", "m[3,2;]"]) == 2
        assert "parse error" in capsys.readouterr().err

    def test_literal_inversion_of_zero_is_parse_error(self, capsys):
        assert main(["eval", "z[1]'"]) == 2

    def test_domain_error_is_1(self, capsys):
        assert main(["leq", "nat", "m[;1]", "m[1;1]"]) == 1
        assert "idempotent" in capsys.readouterr().err

    def test_type_error_is_1(self, capsys):
        assert main(["eval", "z[1] * O"]) == 1

    def test_usage_error_is_2(self):
        with pytest.raises(SystemExit) as err:
            main(["green", "Q", "m[;]", "m[;]"])
        assert err.value.code == 2


class TestSubcommands:
    @pytest.mark.parametrize(
        "args,want",
        [
            (["f", "m[1,2,3;5]"], "-2\n"),
            (["green", "R", "m[;1]", "m[;2]"], "true\n"),
            (["green", "L", "m[;1]", "m[;2]"], "false\n"),
            (["green", "H", "m[;1]", "m[;1]"], "true\n"),
            (["green", "D", "m[;1]", "m[1,2;]"], "true\n"),
            (["leq", "nat", "m[1,2;1,2]", "m[1;1]"], "true\n"),
            (["leq", "canon", "m[1;1,2]", "m[;1]"], "true\n"),
            (["apply", "m[2;1,3]", "3"], "4\n"),
            (["apply", "m[2;1,3]", "2"], "undefined\n"),
            (["tail", "m[1,2,3;5]"], "8\n"),
            (["connect", "m[1;1]", "m[2;2]"], "m[1;2]\n"),
            (["bc-member", "m[1,2;1]"], "b[2,1]\n"),
            (["bc-member", "m[2;1]"], "absent\n"),
            (["below-c", "m[1,4;1,4]"], "m[1,2,3,4;1,2,3,4]\n"),
            (["nbhd-zero", "2", "m[1,3;2,5]"], "true\n"),
            (["nbhd-zero", "1", "O"], "true\n"),
            (["nbhd-adj", "1", "m[;1]", "z[1]"], "true\n"),
            (["nbhd-adj", "1", "m[;1]", "m[;1]"], "false\n"),
            (["f", "z[5]"], "5\n"),
            (["f", "b[2,0]"], "-2\n"),
        ],
    )
    def test_text_outputs(self, capsys, args, want):
        assert main(args) == 0
        assert capsys.readouterr().out == want

    def test_solve_text(self, capsys):
        assert main(["solve", "right", "m[;1]", "m[;1]"]) == 0
        assert capsys.readouterr().out == "2 solution(s)\nm[;]\nm[1;1]\n"

    def test_upset_lists_all(self, capsys):
        assert main(["upset", "m[1,2;1,2]"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "4 idempotent(s)"
        assert set(out[1:]) == {"m[;]", "m[1;1]", "m[2;2]", "m[1,2;1,2]"}

    def test_simple_witness(self, capsys):
        assert main(["simple-witness", "m[1;2]", "m[;1]"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("left = ") and lines[1].startswith("right = ")

    def test_fresh_bicyclic(self, capsys):
        assert main(["fresh-bicyclic", "m[2;2]"]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "unity = m[1,2,4;1,2,4]",
            "up = m[1,2,4;1,2,4,5]",
            "down = m[1,2,4,5;1,2,4]",
        ]

    def test_project_and_conj(self, capsys):
        assert main(["project-c", "m[1,2,3;5]"]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "approximant = m[1,2,3,4,5,6,7;1,2,3,4,5]",
            "idempotent = m[1,2,3,4,5,6,7;1,2,3,4,5,6,7]",
        ]
        assert main(["conj-witness", "m[;1]"]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "idempotent = m[1;1]",
            "conjugate_left = m[;]",
            "conjugate_right = m[1,2;1,2]",
        ]

    def test_gcong(self, capsys):
        assert main(["gcong", "m[;1]", "m[1;1,2]"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "true" and len(out) == 3
        assert main(["gcong", "m[;1]", "m[1;]"]) == 0
        assert capsys.readouterr().out == "false\n"

    def test_stability(self, capsys):
        assert main(["stability", "3", "m[;1]"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "bound = 4"
        assert out[1].endswith("0 violation(s)")

    def test_rows_preview(self, capsys):
        assert main(["eval", "m[2;1,3]'", "--rows", "3"]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "m[1,3;2]",
            "( 2 4 5 ... )",
            "( 1 3 4 ... )",
        ]


class TestJsonOutputs:
    def test_documented_examples_are_byte_exact(self):
        r = run_cli("f", "m[1,2,3;5]", "--json")
        assert (r.returncode, r.stdout) == (0, b"-2\n")
        r = run_cli("green", "R", "m[;1]", "m[;2]", "--json")
        assert (r.returncode, r.stdout) == (0, b"true\n")
        r = run_cli("solve", "right", "m[;1]", "m[;1]", "--json")
        want = (
            b'{"equation":{"side":"right","factor":{"dom_gaps":[],"ran_gaps":[1]},'
            b'"target":{"dom_gaps":[],"ran_gaps":[1]}},'
            b'"solutions":[{"dom_gaps":[],"ran_gaps":[]},'
            b'{"dom_gaps":[1],"ran_gaps":[1]}]}\n'
        )
        assert (r.returncode, r.stdout) == (0, want)

    def test_eval_json_schemas(self, capsys):
        assert main(["eval", "m[1;2]", "--json"]) == 0
        assert json.loads(capsys.readouterr().out) == {"dom_gaps": [1], "ran_gaps": [2]}
        assert main(["eval", "b[2,3]", "--json"]) == 0
        assert json.loads(capsys.readouterr().out) == {"m": 2, "n": 3}
        assert main(["eval", "z[2] * m[;1]", "--json"]) == 0
        assert json.loads(capsys.readouterr().out) == {"kind": "int", "value": 3}
        assert main(["eval", "O", "--json"]) == 0
        assert json.loads(capsys.readouterr().out) == {"kind": "zero"}

    def test_apply_json_null(self, capsys):
        assert main(["apply", "m[2;1,3]", "2", "--json"]) == 0
        assert capsys.readouterr().out == "null\n"

    def test_gcong_json(self, capsys):
        assert main(["gcong", "m[;1]", "m[1;]", "--json"]) == 0
        assert json.loads(capsys.readouterr().out) == {
            "congruent": False,
            "left_witness": None,
            "right_witness": None,
        }


class TestIO:
    def test_stdin_expression(self):
        r = run_cli("eval", "-", stdin=b"m[1,4;2] * m[;5]")
        assert (r.returncode, r.stdout) == (0, b"m[1,4;2,5]\n")

    def test_env_var_switches_default_mode(self):
        import os

        env = dict(os.environ, COFMAP_OUTPUT="json")
        r = run_cli("green", "R", "m[;1]", "m[;2]", env=env)
        assert (r.returncode, r.stdout) == (0, b"true\n")
        r = run_cli("eval", "m[1;2]", env=env)
        assert json.loads(r.stdout) == {"dom_gaps": [1], "ran_gaps": [2]}

    def test_selftest_smoke(self, capsys):
        assert main(["selftest", "--cases", "40", "--seed", "3"]) == 0
        out = capsys.readouterr().out
        assert "passed=" in out and "failed=0" in out

    def test_selftest_deterministic_across_processes(self):
        a = run_cli("selftest", "--cases", "30", "--json")
        b = run_cli("selftest", "--cases", "30", "--json")
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout
