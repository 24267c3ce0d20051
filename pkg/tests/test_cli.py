import json
import os
import subprocess
import sys

import pytest

from parkingfn.cli import main, parse_stats, UsageError
from parkingfn.exactalg import Polynomial, w, x, y, z


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_oracle_example(capsys):
    code, out, _ = run(capsys, "gf", "--family", "pf", "--n", "2",
                       "--stats", "x=unl,y=dis,z=des,w=rlm", "--method", "oracle")
    assert code == 0
    assert Polynomial.from_json(out) == w + x * y * w + z * w ** 2


def test_empty_street(capsys):
    code, out, _ = run(capsys, "gf", "--n", "0", "--format", "text")
    assert (code, out) == (0, "1\n")


def test_closed_prime_example(capsys):
    code, out, _ = run(capsys, "gf", "--family", "ppf", "--n", "3", "--stats", "x=unl,y=rep",
                       "--method", "closed", "--format", "text")
    assert out.strip() == "x^2*y^2 + x^2*y + x*y + x"


@pytest.mark.parametrize("method", ["oracle", "recurrence", "closed"])
def test_methods_agree(capsys, method):
    _, out, _ = run(capsys, "gf", "--family", "pf", "--n", "4", "--stats", "y=unl,x=lel", "--method", method)
    assert Polynomial.from_json(out) == Polynomial.from_json(
        run(capsys, "gf", "--family", "pf", "--n", "4", "--stats", "y=unl,x=lel")[1]
    )


def test_renaming_and_marginals(capsys):
    _, full, _ = run(capsys, "gf", "--family", "rk", "--m", "3", "--r", "2", "--k", "1",
                     "--stats", "x=unl,y=rep", "--method", "closed")
    _, just_rep, _ = run(capsys, "gf", "--family", "rk", "--m", "3", "--r", "2", "--k", "1",
                         "--stats", "q=rep", "--method", "closed")
    assert Polynomial.from_json(full).subst({"x": 1, "y": Polynomial.var("q")}) == Polynomial.from_json(just_rep)


def test_probabilistic_oracle_matches_closed_form(capsys):
    args = ["gf", "--family", "rk", "--m", "3", "--r", "1", "--k", "2", "--stats", "x=unl,y=lel", "--protocol", "prob"]
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args, "--method", "closed")
    assert a == b


def test_json_round_trip_is_bit_exact(capsys):
    _, out, _ = run(capsys, "gf", "--family", "pf", "--n", "3", "--protocol", "prob")
    text = out.strip()
    assert Polynomial.from_json(text).to_json() == text
    assert json.loads(text)["vars"] == ["x", "y", "z", "w", "p", "q", "t"]


def test_output_is_deterministic(capsys):
    args = ["gf", "--family", "pfmn", "--m", "3", "--n", "4", "--protocol", "prob"]
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_worker_count_does_not_change_output(tmp_path):
    cmd = [sys.executable, "-m", "parkingfn", "gf", "--family", "pf", "--n", "5", "--stats", "x=unl,y=dis"]
    outs = []
    for workers in ("1", "2"):
        env = dict(os.environ, PARKINGFN_WORKERS=workers)
        outs.append(subprocess.run(cmd, capture_output=True, env=env, check=True).stdout)
    assert outs[0] == outs[1]


@pytest.mark.parametrize("argv", [
    ["gf", "--family", "nope"],
    ["gf", "--family", "pfmn", "--n", "3"],
    ["gf", "--family", "pf", "--n", "3", "--stats", "v=unl"],
    ["gf", "--family", "pf", "--n", "3", "--stats", "x=des", "--method", "closed"],
    ["gf", "--family", "pfmn", "--m", "4", "--n", "3"],
    ["gf", "--family", "u", "--u", "3,2"],
    ["gf", "--family", "ppf", "--n", "3", "--protocol", "prob"],
    ["verify", "no-such-suite"],
    ["dist"],
    ["dist", "--pmf", "displacement", "--n", "3", "--i", "5"],
])
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse rejects the flag itself
        code = exc.code
    assert code == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["gf", "--bogus"])
    assert info.value.code == 2


def test_guard_exit_3(capsys):
    code, _, err = run(capsys, "gf", "--family", "pf", "--n", "8", "--guard", "1000")
    assert code == 3 and "too large" in err


def test_parse_stats():
    assert parse_stats("x=unl, y=dis") == [("x", "unl"), ("y", "dis")]
    with pytest.raises(UsageError):
        parse_stats("x")


def test_verify_table_and_counterexamples(capsys):
    code, out, _ = run(capsys, "verify", "table1", "counterexamples")
    assert code == 0
    assert "table1: 18/18 pass" in out
    assert "counterexamples: 3/3 pass" in out


def test_verify_alias_and_max_n(capsys):
    code, out, _ = run(capsys, "verify", "thm2.1", "--max-n", "6")
    assert code == 0 and out.startswith("tree-correspondence:")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "upf-egf", "--format", "json")
    assert code == 0
    assert json.loads(out)[0]["passed"] is True


def test_verify_failure_exit_1(capsys, monkeypatch):
    from parkingfn import verify

    def broken(max_n=None):
        res = verify.SuiteResult("broken")
        res.add("always wrong", False)
        return res

    monkeypatch.setitem(verify.SUITES, "broken", broken)
    code, out, _ = run(capsys, "verify", "broken")
    assert code == 1 and "FAIL always wrong" in out


def test_dist_displacement_csv(capsys):
    code, out, _ = run(capsys, "dist", "--pmf", "displacement", "--n", "4", "--i", "2")
    assert code == 0
    assert out == "k,prob\n0,3/5\n1,7/25\n2,3/25\n"
    _, out, _ = run(capsys, "dist", "--pmf", "displacement", "--n", "4", "--i", "0")
    assert out == "k,prob\n0,1/1\n"


def test_dist_other_laws(capsys):
    _, out, _ = run(capsys, "dist", "--pmf", "unlucky", "--n", "3")
    assert out == "i,prob\n0,0/1\n1,1/4\n2,1/2\n"
    _, out, _ = run(capsys, "dist", "--pmf", "ur", "--m", "2", "--r", "1", "--k", "1")
    assert out == "u,r,prob\n0,0,2/3\n1,1,1/3\n"
    _, out, _ = run(capsys, "dist", "--pmf", "ppf-ur", "--n", "3")
    assert out.splitlines()[0] == "u,r,prob"


def test_dist_limits(capsys):
    code, out, _ = run(capsys, "dist", "--limits", "--m", "200", "--c", "0", "--r", "1")
    rows = out.strip().splitlines()
    assert code == 0 and rows[0] == "family,m,c,r,tv_R,tv_L,ks_U"
    assert [r.split(",")[1] for r in rows[1:]] == ["50", "100", "200"]
    assert float(rows[-1].split(",")[4]) < 0.01
    code, out, _ = run(capsys, "dist", "--limits", "--family", "ppf", "--m", "40")
    assert code == 0 and out.count("\n") == 4
