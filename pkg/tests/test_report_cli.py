import pytest
from hypothesis import given
from hypothesis import strategies as st

from depthzero import cli
from depthzero import report as rep
from depthzero.qpoly import Q, QPolynomial
from depthzero.verify import Check, Suite, SuiteConfig

leaves = st.one_of(
    st.none(),
    st.booleans(),
    st.integers(),
    st.text(max_size=8),
    st.fractions(),
    st.lists(st.integers(-9, 9), max_size=5).map(QPolynomial),
)
values = st.recursive(
    leaves,
    lambda inner: st.one_of(
        st.lists(inner, max_size=4),
        st.lists(inner, max_size=4).map(tuple),
        st.dictionaries(st.text(max_size=6), inner, max_size=4),
    ),
    max_leaves=20,
)


@given(values)
def test_round_trip(v):
    assert rep.loads(rep.dumps(v)) == v


def test_encode_rejects():
    with pytest.raises(TypeError):
        rep.dumps({"x": 1.5})
    with pytest.raises(TypeError):
        rep.dumps({1: 2})
    with pytest.raises(TypeError):
        rep.dumps(object())


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rootinfo(capsys):
    code, out, _ = run(capsys, "rootinfo", "--spec", "A2", "--format", "structured")
    r = rep.loads(out)
    assert code == 0
    assert r["roots"] == 6 and r["weyl_order"] == 6
    assert r["poincare"] == (Q + 1) * (Q**2 + Q + 1)
    r = rep.loads(run(capsys, "rootinfo", "--spec", "G2", "--format", "structured")[1])
    assert (r["roots"], r["long_roots"], r["short_roots"]) == (12, 6, 6)
    r = rep.loads(run(capsys, "rootinfo", "--spec", "A1+A1", "--format", "structured")[1])
    assert (r["roots"], r["weyl_order"]) == (4, 4)
    code, out, _ = run(capsys, "rootinfo", "--spec", "G2")
    assert code == 0 and "weyl_order" in out


def test_mackey_report(capsys):
    code, out, _ = run(capsys, "mackey", "--spec", "A2", "--bound", "2", "--format", "structured")
    assert code == 0
    r = rep.loads(out)
    row = next(x for x in r["rows"] if x["ell"] == (1, 1))
    assert row["degree"] == Q * (Q + 1) * (Q**2 - 1) * (Q**3 - 1)
    assert (row["r0"], row["s0"]) == (1, 2)
    assert r["ps_fixed_dim_note"]["agree"] is False
    code, out, _ = run(capsys, "mackey", "--spec", "A2", "--bound", "0", "--format", "structured")
    rows = rep.loads(out)["rows"]
    assert len(rows) == 1 and rows[0]["note"] == "component = tau"
    code, out, _ = run(capsys, "mackey", "--spec", "C2", "--x", "1/2,1/2", "--bound", "2", "--format", "structured")
    assert code == 0 and all(x["r0"] == x["s0"] for x in rep.loads(out)["rows"])
    code, out, _ = run(capsys, "mackey", "--spec", "A2", "--assume-torus-intersection")
    assert code == 0 and "coincide" in out


def test_out_file(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "rootinfo", "--spec", "C2", "--format", "structured", "--out", str(path))
    assert code == 0 and out == ""
    assert rep.loads(path.read_text())["roots"] == 8


@pytest.mark.parametrize(
    "argv",
    [
        ["rootinfo", "--spec", "Q7"],
        ["rootinfo", "--spec", "B1"],
        ["mackey", "--x", "1/3,1/3"],
        ["mackey", "--y", "1/2,1/2", "--spec", "C2"],
        ["mackey", "--x", "1,2,3"],
        ["mackey", "--bound", "-1"],
        ["verify", "--q", "6"],
        ["verify", "--q", "7"],
        ["verify", "--q", "two"],
        ["verify", "--gxromega", "Z9"],
        ["frobnicate"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_exit_one_on_failed_check(capsys, monkeypatch):
    def fake(config):
        s = Suite(config)
        s.add(Check("x", "forced failure", 1, 2, False))
        s.add(Check("y", "skipped", None, None, None))
        return s

    monkeypatch.setattr(cli, "run_suite", fake)
    code, out, _ = run(capsys, "verify", "--q", "2")
    assert code == 1 and "FAILED" in out


def test_skipped_checks_do_not_fail(capsys, monkeypatch):
    def fake(config):
        s = Suite(config)
        s.add(Check("y", "skipped", None, None, None, "guard"))
        return s

    monkeypatch.setattr(cli, "run_suite", fake)
    code, out, _ = run(capsys, "verify", "--format", "structured")
    assert code == 0 and rep.loads(out)["checks"][0]["status"] == "skipped"


@pytest.mark.slow
def test_verify_full(capsys):
    code, out, _ = run(capsys, "verify", "--q", "2,3", "--level2", "--gxromega", "G2", "--gxromega", "A2", "--format", "structured")
    r = rep.loads(out)
    assert code == 0 and r["all_passed"]
    by_id = {c["id"]: c for c in r["checks"]}
    assert by_id["level2.p3"]["computed"]["double_cosets"] == 7
    assert by_id["gxromega.G2"]["computed"]["witness"] is not None
    assert by_id["gxromega.A2"]["computed"]["witness"] is None
    assert all(c["status"] == "pass" for c in r["checks"])


@pytest.mark.slow
def test_verify_guard_is_per_check(capsys):
    sc = SuiteConfig(sl3_q=(5,), sl2_q=(), torus_q=(), heisenberg_q=(), bop_q=(), mackey=False)
    from depthzero.verify import run_suite

    s = run_suite(sc)
    assert s.ok and [c.passed for c in s.checks] == [None]
