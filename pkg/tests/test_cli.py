import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ginforge.cli import (
    CliError,
    SessionConfig,
    main,
    parse_polynomial,
)
from ginforge.polyring import Polynomial, degrevlex, default_variable_names, poly_to_string


def _config(n=3, **kw):
    return SessionConfig(n=n, varnames=default_variable_names(n), ordering=degrevlex(n), **kw)


def test_parse_basic_polynomial():
    f = parse_polynomial("x1^2*x2 - 3/2*x3", _config())
    assert f == Polynomial(3, {(2, 1, 0): 1, (0, 0, 1): "-3/2"})


def test_parse_rejects_parentheses():
    with pytest.raises(CliError) as err:
        parse_polynomial("x*(x-w)", _config(4))
    assert "position" in str(err.value)


def test_parse_zero():
    assert parse_polynomial("0", _config()).is_zero()
    assert parse_polynomial("x1 - x1", _config()).is_zero()


def test_parse_unknown_variable():
    with pytest.raises(CliError):
        parse_polynomial("x9", _config(2))


def test_parse_zero_denominator():
    with pytest.raises(CliError):
        parse_polynomial("1/0*x1", _config(2))


def test_parse_aliases_for_small_rings():
    f = parse_polynomial("x*y - w^2", _config(4))
    assert f == Polynomial(4, {(1, 1, 0, 0): 1, (0, 0, 0, 2): -1})


def test_parse_requires_explicit_star():
    with pytest.raises(CliError):
        parse_polynomial("2x1", _config(2))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 1 << 30))
def test_parse_print_round_trip(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    config = _config(n)
    terms = {}
    for _ in range(rng.randint(1, 5)):
        e = tuple(rng.randint(0, 3) for _ in range(n))
        c = rng.randint(-9, 9)
        d = rng.randint(1, 5)
        if c:
            terms[e] = "%d/%d" % (c, d)
    f = Polynomial(n, terms)
    text = poly_to_string(f, config.varnames, config.ordering)
    assert parse_polynomial(text, config) == f


def test_gin_subcommand_json(capsys):
    code = main(
        [
            "gin",
            "--n",
            "3",
            "--ord",
            "drl",
            "--ideal",
            "x1^2, x1*x2, x2^2, x2*x3",
            "--seed",
            "7",
            "--format",
            "json",
        ]
    )
    out = capsys.readouterr().out
    doc = json.loads(out)
    assert code == 0
    assert doc["result"]["gens"] == ["x1^2", "x1*x2", "x2^2", "x1*x3"]
    assert doc["result"]["agreed"] is True
    assert doc["ring"] == {"n": 3, "vars": ["x1", "x2", "x3"]}


def test_output_byte_identical(capsys):
    argv = ["gin", "--n", "2", "--ideal", "x1^2, x1*x2, x2^2", "--seed", "3", "--format", "json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    second = capsys.readouterr().out
    assert first == second


def test_gb_and_in_subcommands(capsys):
    code = main(["gb", "--n", "2", "--ideal", "x1^2 - x2^2, x1*x2", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["result"]["basis"] == ["x2^3", "x1^2 - x2^2", "x1*x2"]
    main(["in", "--n", "2", "--ideal", "x1^2 - x2^2, x1*x2", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["gens"] == ["x2^3", "x1^2", "x1*x2"]


def test_closure_hilbert_betti_decompose(capsys):
    main(["closure", "--n", "4", "--mode", "stable", "--ideal", "x1*x2, x2*x3*x4", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert "x2*x3*x4" in doc["result"]["gens"] and len(doc["result"]["gens"]) == 6

    main(["hilbert", "--n", "3", "--ideal", "x1^2, x1*x2, x2^2, x2*x3", "--dmax", "3", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["values"] == [1, 3, 2, 2]

    main(["betti", "--n", "2", "--ideal", "x1, x2", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["entries"] == [[0, 1, 2], [1, 2, 1]]

    main(["decompose", "--n", "3", "--ideal", "x1^2*x2^2, x1^2*x3^2, x2^2*x3^2", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["result"]["components"]) == 3


def test_saturate_and_intersect(capsys):
    main(["saturate", "--n", "3", "--ideal", "x^2, x*y, y^2, x*z", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["gens"] == ["x2^2", "x1"]

    main(["intersect", "--n", "3", "--ideal", "x, y^2", "--ideal2", "x^2, y, z", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert set(doc["result"]["gens"]) == {"x1^2", "x1*x2", "x2^2", "x1*x3"}


def test_ideal_file_input(tmp_path, capsys):
    path = tmp_path / "ideal.txt"
    path.write_text("# generators\nx1^2\nx2^2  # tail comment\n\n", encoding="utf-8")
    code = main(["in", "--n", "2", "--ideal-file", str(path), "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["result"]["gens"] == ["x1^2", "x2^2"]


def test_points_subcommand(capsys):
    code = main(
        ["points", "--n", "2", "--kind", "classic", "--N", "3", "--ideal", "x1^2, x1*x2, x2^2", "--format", "json"]
    )
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["result"]["points"] == ["0,0,1", "0,1,1", "1,0,1"]


def test_points_table_is_one_point_per_line(capsys):
    main(["points", "--n", "2", "--kind", "classic", "--N", "3", "--ideal", "x1^2, x1*x2, x2^2"])
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["0,0,1", "0,1,1", "1,0,1"]


def test_usage_errors_exit_2(capsys):
    assert main(["gin", "--n", "2", "--ideal", "x*(x-w)"]) == 2
    assert main(["gin", "--n", "2"]) == 2  # no generators
    with pytest.raises(SystemExit) as exc:
        main(["verify", "bogus-statement"])
    assert exc.value.code == 2


def test_verify_counterexample_exits_zero(capsys):
    code = main(["verify", "counterexample", "--seed", "1"])
    captured = capsys.readouterr()
    assert code == 0
    lines = [json.loads(l) for l in captured.out.strip().splitlines()]
    assert all(entry["status"] == "pass" for entry in lines)


def test_cli_pipeline_distract_then_gin_recovers_input(tmp_path, capsys):
    # distraction generators printed by one invocation parse back in another,
    # and the randomized gin of the distracted ideal recovers the input
    main(
        [
            "distract",
            "--n",
            "4",
            "--kind",
            "classic",
            "--N",
            "6",
            "--ideal",
            "x^5, x^4*y, x^4*z, x^3*y^2, x^2*y^3",
            "--format",
            "json",
        ]
    )
    doc = json.loads(capsys.readouterr().out)
    path = tmp_path / "distracted.txt"
    path.write_text("\n".join(doc["result"]["gens"]) + "\n", encoding="utf-8")
    code = main(["gin", "--n", "4", "--ideal-file", str(path), "--seed", "3", "--format", "json"])
    doc2 = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc2["result"]["agreed"] is True
    assert doc2["result"]["gens"] == ["x1^5", "x1^4*x2", "x1^3*x2^2", "x1^2*x2^3", "x1^4*x3"]


def test_custom_variable_names(capsys):
    code = main(["in", "--n", "2", "--vars", "a,b", "--ideal", "a^2 - b^2, a*b", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["ring"]["vars"] == ["a", "b"]
    assert doc["result"]["gens"] == ["b^3", "a^2", "a*b"]


def test_matrix_ordering_flag(capsys):
    # the four-variable weight matrix accepted through the --ord flag
    code = main(
        [
            "in",
            "--n",
            "4",
            "--ord",
            "matrix:[[1,1,1,1],[0,0,0,-1],[1,0,0,0],[0,1,0,0]]",
            "--ideal",
            "x*z - w^2",
            "--format",
            "json",
        ]
    )
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    # the weight matrix penalizes w, so x*z leads
    assert doc["result"]["gens"] == ["x1*x3"]
    assert doc["ordering"] == {"matrix": [[1, 1, 1, 1], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]]}


def test_bad_ordering_matrix_rejected(capsys):
    assert main(["in", "--n", "2", "--ord", "matrix:[[1,1]]", "--ideal", "x1"]) == 2
    assert main(["in", "--n", "2", "--ord", "sillylex", "--ideal", "x1"]) == 2


def test_env_seed_default(monkeypatch, capsys):
    monkeypatch.setenv("GINFORGE_SEED", "7")
    main(["gin", "--n", "3", "--ideal", "x1^2, x1*x2, x2^2, x2*x3", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert doc["seeds"] == [7]
