import io
import json

import pytest

from monoprop.algebra import dump_algebra, parse_algebra, worked_example
from monoprop.cli import builtin_algebras, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def ex_file(tmp_path):
    p = tmp_path / "ex.alg"
    p.write_text(dump_algebra(worked_example()))
    return str(p)


def test_decide_holds(ex_file):
    code, out, _ = call("decide", "--algebra", ex_file, "--quad", "1", "2", "4", "4")
    assert code == 0
    assert out.splitlines()[0] == "1:2::4:4 holds"


def test_decide_fails_names_competitor(ex_file):
    code, out, _ = call("decide", "--algebra", ex_file, "--quad", "1", "2", "3", "4")
    assert code == 1
    assert "fails" in out
    assert "4->4" in out


def test_decide_deterministic(ex_file):
    runs = {call("decide", "--algebra", ex_file, "--quad", "1", "2", "3", "4", "--format", "json")[1]
            for _ in range(3)}
    assert len(runs) == 1
    data = json.loads(runs.pop())
    assert data["holds"] is False
    assert data["directions"][1]["reason"] == "dominated"


def test_decide_two_algebras():
    code, out, _ = call("decide", "--fixture", "example", "--right-fixture", "bool",
                        "--quad", "1", "2", "0_2", "1_2", "--arrow")
    assert code in (0, 1)
    assert out


def test_nat_and_parity():
    code, out, _ = call("nat", "--quad", "2", "4", "5", "7")
    assert (code, out.strip()) == (0, "holds (difference -2 = -2)")
    assert call("nat", "--quad", "2", "4", "5", "8")[0] == 1
    assert call("parity", "--quad", "1", "3", "0", "0")[0] == 0
    assert call("parity", "--quad", "0", "1", "0", "0")[0] == 1
    assert call("parity", "--quad", "0", "1", "0", "2")[0] == 2


def test_jus(ex_file):
    code, out, _ = call("jus", "--algebra", ex_file, "--pair", "4", "3")
    assert code == 0 and "{S^(1+m)(z) -> z}" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("decide", "--algebra", "/nonexistent.alg", "--quad", "1", "2", "3", "4"),
        ("decide", "--fixture", "example", "--quad", "1", "2", "3", "9"),
        ("decide", "--fixture", "nope", "--quad", "1", "2", "3", "4"),
        ("decide", "--quad", "1", "2", "3", "4"),
        ("search", "--max-size", "12", "--axiom", "reflexivity"),
        ("search", "--max-size", "2", "--axiom", "monotonicity"),
        ("factor", "--fixture", "lost-in-quotient", "--theta", "a,b"),
        ("bogus",),
    ],
)
def test_usage_errors(argv):
    code, _, err = call(*argv)
    assert code == 2
    assert err


def test_malformed_file(tmp_path):
    p = tmp_path / "bad.alg"
    p.write_text('{"succ": [0, 5]}')
    code, _, err = call("dot", "--algebra", str(p))
    assert code == 2 and "out of range" in err


def test_factor_roundtrip():
    code, out, _ = call("factor", "--fixture", "lost-in-quotient", "--theta", "a,a'|b,b'")
    assert code == 0
    Q = parse_algebra(out)
    assert Q.names == ("{a,a'}", "{b,b'}", "{c}", "{d}")
    code, out, _ = call("factor", "--fixture", "lost-in-quotient", "--theta", "a,a'|b,b'",
                        "--format", "json")
    assert parse_algebra(out) == Q


@pytest.mark.parametrize("fmt", ["text", "json"])
def test_enumerate_roundtrip(fmt):
    code, out, _ = call("enumerate", "--size", "3", "--canonical", "--format", fmt)
    assert code == 0
    if fmt == "json":
        algs = [parse_algebra(json.dumps(d)) for d in json.loads(out)]
    else:
        algs = [parse_algebra(line) for line in out.splitlines()]
    assert len(algs) == 7


def test_quotient_check():
    code, out, _ = call("quotient-check", "--fixture", "lost-in-quotient", "--theta", "a,a'|b,b'",
                        "--quad", "a", "b", "c", "d", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert (data["in_A"], data["in_quotient"]) == (True, False)


def test_congruences_and_axioms():
    code, out, _ = call("congruences", "--fixture", "cross-quotient")
    assert code == 0 and "a,a'|b,b'" in out
    code, out, _ = call("axioms", "--fixture", "strong-reflexivity", "--axiom", "strong-reflexivity")
    assert code == 1 and "fails" in out


def test_search_and_classify(tmp_path):
    code, out, _ = call("search", "--max-size", "3", "--axiom", "commutativity", "--limit", "2")
    assert code == 0 and "counterexample" in out
    csv_path, png_path = tmp_path / "t.csv", tmp_path / "t.png"
    code, out, _ = call("classify-transitivity", "--size", "3", "--canonical",
                        "--csv", str(csv_path), "--plot", str(png_path))
    assert code == 0
    assert csv_path.read_text().startswith("succ,")
    assert png_path.stat().st_size > 0


def test_plots_written(tmp_path, ex_file):
    p1, p2 = tmp_path / "d.png", tmp_path / "j.png"
    assert call("decide", "--algebra", ex_file, "--quad", "2", "1", "4", "3", "--arrow",
                "--plot", str(p1))[0] == 1
    assert call("jus", "--algebra", ex_file, "--pair", "2", "1", "--plot", str(p2))[0] == 0
    assert p1.read_bytes()[:4] == b"\x89PNG"
    assert p2.read_bytes()[:4] == b"\x89PNG"


def test_dot_and_fixtures():
    code, out, _ = call("dot", "--fixture", "fixpoint")
    assert code == 0 and out.count("->") == 1
    code, out, _ = call("fixtures")
    assert code == 0
    assert set(out.split()) >= set(builtin_algebras())
    code, out, _ = call("fixtures", "transitivity")
    assert parse_algebra(out).size == 9


def test_solve(ex_file):
    code, out, _ = call("solve", "--algebra", ex_file, "--triple", "1", "2", "1")
    assert code == 0 and "2" in out
