import io
import json

import pytest

from lrgen.cli import main

X = "beta=5,4,3,3,1;gamma=4,4,2,2"
Y = "beta=4,3,2,2,1,1;gamma=3,3,2,1,1,1"
Z = "beta=8,7,5,4,2,2,1;gamma=7,7,4,3,1,1"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_star_golden(capsys):
    assert run(capsys, "star", Y, X) == (0, Z + "\n", "")


def test_star_identity(capsys):
    assert run(capsys, "star", "beta=0;gamma=0", X)[1] == X + "\n"


def test_star_extended(capsys):
    code, out, _ = run(capsys, "star", Y + ";free=2", "beta=5,4,3,3,1;gamma=4,4,3,2,1;free=4")
    assert out == Z + ";free=4\n"


def test_star_trace(capsys):
    _, out, _ = run(capsys, "star", Y, X, "--trace")
    assert out.splitlines()[1] == "counters=0,1,1,1,2,2,1"


def test_star_render_transposed(capsys):
    _, out, _ = run(capsys, "star", Y, X, "--render", "paper")
    lines = out.splitlines()
    assert lines[0] == Z
    assert [len(r) for r in lines[1:]] == [7, 6, 4, 4, 3, 2, 2, 1]


def test_star_json(capsys):
    _, out, _ = run(capsys, "star", Y, X, "--json", "--trace")
    assert json.loads(out) == {"result": Z, "counters": [0, 1, 1, 1, 2, 2, 1]}


def test_non_associativity_through_cli(capsys):
    N, M = "beta=0;gamma=0;free=1", "beta=1;gamma=1;free=0"
    nm = run(capsys, "star", N, M)[1].strip()
    mm = run(capsys, "star", M, M)[1].strip()
    assert nm == "beta=1;gamma=0;free=0"
    assert mm == "beta=2;gamma=2;free=0"
    assert run(capsys, "star", nm, M)[1].strip() == "beta=1,1;gamma=1;free=0"
    assert run(capsys, "star", N, mm)[1].strip() == "beta=2;gamma=1;free=0"


@pytest.mark.parametrize("n, expected", [
    ("2", "beta=5,4,3,3,1;gamma=4,4,2,2;free=0"),
    ("5", "beta=5,4,3,3,1;gamma=4,3,2,2;free=2"),
    ("0", "beta=5,4,3,3,1;gamma=4,4,3,2,1;free=0"),
])
def test_fill_golden(capsys, n, expected):
    assert run(capsys, "fill", "beta=5,4,3,3,1;gamma=4,4,3,2,1", n)[1] == expected + "\n"


def test_fill_trace(capsys):
    assert run(capsys, "fill", "beta=5,4,3,3,1;gamma=4,4,3,2,1", "2", "--trace")[1].startswith("L=2,3,5\n")


def test_decompose_compose(capsys):
    t = "beta=7,7,5,2,2,1;gamma=7,6,4,1,1,1;free=2"
    obj = "P0^7+P1^7+P1^5+P1^2+P1^2+P0^1+P1^0+P1^0"
    assert run(capsys, "decompose", t)[1] == obj + "\n"
    assert run(capsys, "compose", obj)[1] == t + "\n"


@pytest.mark.parametrize("N, M, expected", [
    ("P1^0", "P0^1", "P1^1"),
    ("P0^1", "P0^1", "P0^2"),
    ("P1^1", "P0^1", "P0^1+P1^1"),
    ("P1^0", "P0^2", "P1^2"),
])
def test_genext_golden(capsys, N, M, expected):
    assert run(capsys, "genext", N, M)[1] == expected + "\n"


def test_hom_commands(capsys):
    assert run(capsys, "homdim", "P1^3", "P0^2")[1] == "2\n"
    assert run(capsys, "homdim", "P1^0", "P0^5")[1] == "0\n"
    assert run(capsys, "endo", "P0^1+P1^1")[1] == "3\n"
    assert run(capsys, "homorder", "P0^3+P1^1", "P1^3+P0^1")[1] == "LEQ\n"
    assert run(capsys, "homorder", "P1^2", "P0^2+P1^0")[1] == "LEQ\n"
    assert run(capsys, "homorder", "P1^3+P0^1", "P0^3+P1^1")[1] == "NOT_LEQ\n"


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "P1^0", "P0^1")
    assert code == 0
    assert out == "oracle=P1^1\ncombinatorial=P1^1\nAGREE\n"
    code, out, _ = run(capsys, "oracle", "P1^0", "P0^2", "--method", "morphisms", "--json")
    assert json.loads(out) == {"oracle": "P1^2", "combinatorial": "P1^2", "verdict": "AGREE"}


def test_oracle_dump_matrices(capsys):
    _, out, _ = run(capsys, "oracle", "P1^0", "P1^2", "--dump-matrices")
    assert "J (2x2)\n0 0\n1 0\nf (2x1)\n0\n1\n" in out


def test_oracle_disagreement_exit_code(capsys, monkeypatch):
    import lrgen.cli as cli
    from lrgen.pickets import H1Object

    monkeypatch.setattr(cli, "generic_extension", lambda N, M: H1Object())
    assert run(capsys, "oracle", "P1^0", "P0^1")[0] == 1


def test_exit_codes(capsys):
    code, _, err = run(capsys, "star", "beta=1;gamma=2", X)
    assert code == 2 and "NotContained" in err
    code, _, err = run(capsys, "star", "beta=3;gamma=1", X)
    assert code == 2 and "NotHorizontalStrip" in err
    assert run(capsys, "genext", "P2^1", "P0^1")[0] == 2
    assert run(capsys, "homorder", "P1^2", "P0^2")[0] == 2
    assert run(capsys, "oracle", "P0^4", "P0^3")[0] == 3


def test_stdin_argument(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(Y + "\n"))
    assert run(capsys, "star", "-", X)[1] == Z + "\n"


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite=main", "--max-b=3", "--max-free=1")
    assert code == 0
    assert out.startswith("main: PASS")


def test_verify_all_fast(capsys):
    code, out, _ = run(capsys, "verify", "--max-b=3", "--max-free=1", "--samples=500")
    assert code == 0
    assert [line.split(":")[0] for line in out.splitlines()] == [
        "table", "roundtrip", "main", "assoc", "lemmas", "fields", "minimality"]


def test_output_is_byte_stable(capsys):
    first = run(capsys, "verify", "--suite=assoc", "--samples=200")
    second = run(capsys, "verify", "--suite=assoc", "--samples=200")
    assert first == second
