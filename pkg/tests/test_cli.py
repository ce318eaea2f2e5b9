import json
from fractions import Fraction

import pytest
from click.testing import CliRunner

from bezminors.cli import JobSpec, main, run


@pytest.fixture
def cli():
    runner = CliRunner()

    def invoke(*args, input_text=None):
        return runner.invoke(main, list(args), input=input_text)

    return invoke


def as_json(result):
    return json.loads(result.output)


def test_minors_example1_text(cli):
    r = cli("minors", "--p-roots", "-1,1,4", "--p-lead", "1", "--q-coeffs", "-6,11,-6,1")
    assert r.exit_code == 0
    assert "minors (size 1..n): -2, -24, 0" in r.output
    assert "[-38   48  -10]" in r.output


def test_minors_example1_json(cli):
    r = cli("minors", "--p-roots", "-1,1,4", "--q-coeffs", "-6,11,-6,1", "--format", "json")
    out = as_json(r)
    assert out["minors"] == ["-2", "-24", "0"]
    assert out["delta_minors"] == ["-2", "-24", "0"]
    assert out["matrices"]["B"] == [["-38", "48", "-10"], ["48", "-60", "12"], ["-10", "12", "-2"]]
    assert out["matrices"]["Delta"] == [["0", "0", "6"], ["0", "0", "2"], ["-24", "12", "-2"]]


def test_interlace_example2(cli):
    r = cli("interlace", "--q-coeffs", "-15,23,-9,1", "--nodes", "2,4,6", "--format", "json")
    assert r.exit_code == 0
    out = as_json(r)
    assert out["verdict"] == "RealDistinctInterlacing"
    assert out["pattern"] == "AllPositive"
    assert out["sturm_confirmed"] is True
    (a1, b1), (a2, b2) = [[Fraction(x) for x in iv] for iv in out["isolated_roots"]]
    assert 2 < a1 and b1 < 4 < a2 and b2 < 6
    assert b1 - a1 < Fraction(1, 4294967296)


def test_verify_batch(cli):
    r = cli("verify", "--family", "multiple-roots", "--n", "5", "--count", "50", "--seed", "7", "--format", "json")
    assert r.exit_code == 0
    out = as_json(r)
    assert out["count"] == 50 and out["failures"] == 0
    assert all(inst["equal"] for inst in out["instances"])
    assert all(len(inst["P"]["roots"]) == 5 for inst in out["instances"])


def test_verify_single(cli):
    r = cli("verify", "--p-roots", "2,4,6", "--p-lead", "-3", "--q-roots", "1,3,5")
    assert r.exit_code == 0
    assert "MISMATCH" not in r.output


def test_verify_deterministic(cli):
    args = ("verify", "--family", "shared-roots", "--count", "15", "--seed", "123", "--format", "json")
    assert cli(*args).output == cli(*args).output
    assert cli(*args).output != cli(*args[:-4], "--seed", "124", "--format", "json").output


def test_theorem1(cli):
    out = as_json(cli("theorem1", "--p-roots", "-1,1,4", "--q-coeffs", "-6,11,-6,1", "--format", "json"))
    assert [(c["lhs"], c["rhs"]) for c in out["checks"]] == [("-2", "-2"), ("-24", "-24"), ("0", "0")]
    r = cli("theorem1", "--p-roots", "1,1,4", "--q-coeffs", "1")
    assert r.exit_code == 1 and "simple roots" in r.output


def test_bezout_and_defect(cli):
    out = as_json(cli("bezout", "--p-coeffs", "-48,44,-12,1", "--q-coeffs", "-15,23,-9,1", "--format", "json"))
    assert out["constructions_agree"] and out["symmetric"]
    assert out["matrices"]["B"][0] == ["444", "-252", "33"]
    r = cli("defect", "--p-coeffs", "4,-1,-4,1", "--q-coeffs", "-6,11,-6,1", "--format", "json")
    assert r.exit_code == 0
    out = as_json(r)
    assert (out["defect"], out["gcd_degree"], out["rank"]) == (1, 1, 2)


def test_delta_and_interp(cli):
    out = as_json(cli("delta", "--q-coeffs", "-15,23,-9,1", "--nodes", "2,4,6", "--format", "json"))
    assert out["matrices"]["Delta"] == [["0", "0", "15"], ["0", "-3", "9"], ["3", "-3", "3"]]
    out = as_json(cli("interp", "--q-coeffs", "-15,23,-9,1", "--nodes", "2,4,6", "--format", "json"))
    assert out["interpolant"]["coeffs"] == ["33", "-21", "3"]


def test_hermite_flags(cli):
    out = as_json(cli("interp", "--hermite", "1:3,6", "--format", "json"))
    assert out["nodes"] == ["1", "1"]
    assert out["interpolant"]["coeffs"] == ["-3", "6"]


def test_sturm(cli):
    out = as_json(cli("sturm", "--p-roots", "1,1,2,3", "--interval", "3/2,3", "--format", "json"))
    assert out["real_roots"] == 3
    assert out["roots_in_interval"] == 2
    assert len(out["isolated_roots"]) == 3


def test_json_round_trip(cli):
    out = as_json(cli("minors", "--p-roots", "1/2,-3,7/3", "--p-lead", "5/4", "--q-coeffs", "1/3,-2,0,3/7", "--format", "json"))
    for row in out["matrices"]["B"] + out["matrices"]["Delta"]:
        for v in row:
            q = Fraction(v)
            assert "." not in v and str(q) == v
    assert all(str(Fraction(m)) == m for m in out["minors"])


def test_input_file(cli, tmp_path):
    job = {
        "command": "verify",
        "P": {"leading": "2", "roots": ["1", "1", "-3/2"]},
        "Q": {"coeffs": ["0", "1", "1"]},
        "options": {"format": "json"},
    }
    path = tmp_path / "job.json"
    path.write_text(json.dumps(job))
    r = cli("verify", "--input", str(path))
    assert r.exit_code == 0
    assert all(c["equal"] for c in as_json(r)["checks"])


def test_input_file_hermite(cli, tmp_path):
    job = {"command": "interlace", "Q": {"hermite": [{"node": "2", "values": ["3"]}, {"node": "4", "values": ["-3"]}, {"node": "6", "values": ["15"]}]}}
    path = tmp_path / "job.json"
    path.write_text(json.dumps(job))
    r = cli("interlace", "--input", str(path), "--format", "json")
    assert as_json(r)["verdict"] == "RealDistinctInterlacing"


@pytest.mark.parametrize(
    "args, fieldname",
    [
        (("minors", "--p-roots", "1,x", "--q-coeffs", "1"), "P.roots[1]"),
        (("minors", "--p-roots", "1,2", "--q-coeffs", "1/0"), "Q.coeffs[0]"),
        (("bezout", "--p-coeffs", "1,1", "--q-coeffs", "1,1,1"), "Q"),
        (("bezout", "--p-coeffs", "1,1", "--p-roots", "1", "--q-coeffs", "1"), "P"),
        (("delta", "--nodes", "0,2,0", "--hermite", "0:1,1", "--hermite", "2:3"), "nodes"),
        (("delta", "--nodes", "0,0,2", "--hermite", "0:1", "--hermite", "2:3"), "Q.hermite"),
        (("verify", "--family", "nope"), "options.family"),
        (("theorem1", "--p-coeffs", "1,2,1", "--q-coeffs", "1"), "P"),
    ],
)
def test_input_errors(cli, args, fieldname):
    r = cli(*args, "--format", "json")
    assert r.exit_code == 1
    assert as_json(r)["field"] == fieldname


def test_violation_exit_code(monkeypatch):
    import bezminors.cli as cli_mod

    monkeypatch.setattr(cli_mod, "bezout_via_bilinear", lambda P, Q: cli_mod.bezout_via_product(P, Q).scale(2))
    code, out = run(JobSpec("bezout", {"coeffs": ["1", "2", "1"]}, {"coeffs": ["3", "1"]}))
    assert code == 2 and out["constructions_agree"] is False


def test_approx_column(cli):
    r = cli("minors", "--p-roots", "1,2", "--q-coeffs", "1/3", "--approx")
    assert "approx (display only)" in r.output
