import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torusjones.ajpoly import APoly, check_aj
from torusjones.cli import build_tasks, main
from torusjones.exactalg import LaurentQ, qpow
from torusjones.jones import TorusKnotId, jones_morton

COPRIME = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (3, 7), (4, 5), (4, 7), (5, 6), (5, 7), (6, 7)]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestJones:
    def test_trefoil_plain(self, capsys):
        code, out, _ = run(capsys, "jones", "--s", "2", "--t", "3", "--n", "2")
        assert code == 0
        assert out.strip() == "-q^-4 + q^-3 + q^-1"

    def test_trivial_color(self, capsys):
        code, out, _ = run(capsys, "jones", "--s", "2", "--t", "3", "--n", "1")
        assert (code, out.strip()) == (0, "1")

    def test_latex(self, capsys):
        code, out, _ = run(capsys, "jones", "--s", "2", "--t", "3", "--n", "2", "--format", "latex")
        assert code == 0
        assert "q^{-4}" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "jones", "--s", "2", "--t", "5", "--n", "3", "--method", "cyclotomic", "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data["knot"] == [2, 5] and data["n"] == 3 and data["method"] == "cyclotomic"
        assert LaurentQ.from_json(data["value"]) == jones_morton(TorusKnotId(2, 5), 3).value

    @pytest.mark.parametrize("argv", [
        ("--s", "3", "--t", "4", "--n", "2", "--method", "hyper"),
        ("--s", "4", "--t", "6", "--n", "2"),
        ("--s", "2", "--t", "3", "--n", "0"),
        ("--s", "3", "--t", "5", "--n", "2", "--method", "t34"),
    ])
    def test_usage_errors(self, capsys, argv):
        code, out, err = run(capsys, "jones", *argv)
        assert code == 2
        assert out == "" and err.startswith("error:")

    def test_bad_flag_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["jones", "--s", "2"])
        assert exc.value.code == 2

    def test_deterministic(self, capsys):
        argv = ("jones", "--s", "3", "--t", "7", "--n", "5", "--format", "json")
        assert run(capsys, *argv) == run(capsys, *argv)


class TestVerify:
    @pytest.mark.parametrize("argv", [
        ("--suite", "methods", "--max-t", "5", "--max-n", "8"),
        ("--suite", "alexander", "--max-t", "4"),
        ("--suite", "hseries", "--h-order", "12"),
        ("--suite", "recursions", "--max-t", "5", "--max-n", "6"),
    ])
    def test_suites_pass(self, capsys, argv):
        code, out, _ = run(capsys, "verify", *argv)
        lines = out.strip().splitlines()
        assert code == 0
        assert all(line.startswith("PASS") for line in lines[:-1])
        n = len(lines) - 1
        assert lines[-1] == f"{n}/{n} checks passed"

    def test_aj_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "aj")
        assert code == 0
        aj_lines = [line for line in out.splitlines() if line.split()[1:2] == ["aj"]]
        assert len(aj_lines) == len(COPRIME)
        assert all("computed" in line and "reference" in line for line in aj_lines)

    def test_ordering_is_deterministic(self, capsys):
        argv = ("verify", "--suite", "methods", "--max-t", "4", "--max-n", "4")
        first = run(capsys, *argv)
        assert first == run(capsys, *argv)
        assert first == run(capsys, *argv, "--jobs", "2")

    def test_default_grid_is_acceptance_grid(self):
        tasks = build_tasks("aj", 7, 12)
        assert sorted({(t[1], t[2]) for t in tasks}) == COPRIME

    def test_bad_arguments(self, capsys):
        assert run(capsys, "verify", "--max-t", "2")[0] == 2


class TestApoly:
    def test_trefoil(self, capsys):
        code, out, _ = run(capsys, "apoly", "--s", "2", "--t", "3")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0].split(maxsplit=1)[1] == "(L-1)(1+L*M^6)"
        assert lines[1].split(maxsplit=1)[1] == "(L-1)(1+L*M^6)"
        assert lines[-1] == "MATCH"

    def test_t34(self, capsys):
        code, out, _ = run(capsys, "apoly", "--s", "3", "--t", "4")
        assert code == 0 and out.strip().endswith("MATCH")

    def test_second_order_two_strand_mismatch(self, capsys):
        code, out, _ = run(capsys, "apoly", "--s", "2", "--t", "3", "--order", "2")
        assert code == 1
        assert "cofactor:" in out and out.strip().endswith("MISMATCH")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "apoly", "--s", "3", "--t", "5", "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["match"]
        assert APoly.from_json(data["computed"]) == check_aj(TorusKnotId(3, 5)).computed

    @pytest.mark.parametrize("argv", [("--s", "4", "--t", "6"), ("--s", "3", "--t", "4", "--order", "1")])
    def test_usage_errors(self, capsys, argv):
        assert run(capsys, "apoly", *argv)[0] == 2


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(COPRIME), st.integers(1, 8))
def test_json_round_trip(knot, n):
    import contextlib
    import io

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        assert main(["jones", "--s", str(knot[0]), "--t", str(knot[1]), "--n", str(n), "--format", "json"]) == 0
    value = LaurentQ.from_json(json.loads(buf.getvalue())["value"])
    assert value == jones_morton(TorusKnotId(*knot), n).value


def test_laurent_json_round_trip_fractional():
    p = qpow("1/2", 3) - qpow("-7/4")
    assert LaurentQ.from_json(json.loads(json.dumps(p.to_json()))) == p
