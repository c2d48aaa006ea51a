import json

import pytest

from noncross.cli import main, parse_bfile
from noncross.sequences import SequenceId, f_value


def run_cli(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_seq_bfile_output(capsys):
    code, out = run_cli(
        capsys, ["seq", "N", "--from", "1", "--to", "9", "--method", "closed"]
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 9
    assert lines[0] == "1 1"
    assert lines[-1] == "9 644908"


def test_seq_bfile_round_trip(capsys):
    code, out = run_cli(capsys, ["seq", "f2", "--from", "0", "--to", "12"])
    assert code == 0
    pairs = parse_bfile(out)
    assert pairs == [(n, f_value(SequenceId.F2, n)) for n in range(13)]


def test_seq_csv_format(capsys):
    code, out = run_cli(
        capsys, ["seq", "f1", "--from", "0", "--to", "3", "--format", "csv"]
    )
    assert code == 0
    assert out.splitlines() == ["n,value", "0,1", "1,6", "2,48", "3,420"]


def test_seq_json_format(capsys):
    code, out = run_cli(
        capsys, ["seq", "f5", "--from", "0", "--to", "2", "--format", "json"]
    )
    assert code == 0
    body = json.loads(out)
    assert body["sequence"] == "f5"
    assert [v["value"] for v in body["values"]] == [1, 4, 30]


def test_seq_domain_error_exits_nonzero(capsys):
    with pytest.raises(SystemExit) as err:
        main(["seq", "f4", "--from", "0", "--to", "0", "--method", "closed"])
    assert "f4" in str(err.value)


def test_seq_unknown_method_exits_nonzero():
    with pytest.raises(SystemExit):
        main(["seq", "N", "--from", "1", "--to", "5", "--method", "sum"])


def test_verify_kummer(capsys):
    code, out = run_cli(
        capsys, ["verify", "kummer", "--n-max", "10", "--a-max", "6"]
    )
    assert code == 0
    assert "[PASS] kummer" in out
    assert out.endswith("all 1 checks passed\n")


def test_verify_identity_with_params(capsys):
    code, out = run_cli(
        capsys, ["verify", "e-a1", "--r", "1", "--i", "2", "--order", "25"]
    )
    assert code == 0
    assert "[PASS] e-a1" in out


def test_verify_zero_valued_flags_pass_through(capsys):
    # r=0 is a legitimate parameter and must not fall back to a default
    code, out = run_cli(
        capsys, ["verify", "e-a1", "--r", "0", "--i", "0", "--order", "15"]
    )
    assert code == 0
    assert '"r": 0' in out


def test_verify_json_format(capsys):
    code, out = run_cli(
        capsys,
        ["verify", "kummer", "--n-max", "6", "--a-max", "4", "--format", "json"],
    )
    assert code == 0
    body = json.loads(out)
    assert body["passed"] is True
    check = body["checks"][0]
    assert set(check) == {"check", "params", "status", "lhs", "rhs", "location"}


def test_verify_csv_format(capsys):
    code, out = run_cli(
        capsys,
        ["verify", "kummer", "--n-max", "6", "--a-max", "4", "--format", "csv"],
    )
    assert code == 0
    assert out.splitlines()[0] == "check,params,status,lhs,rhs,location"


def test_oracle_rows(capsys):
    code, out = run_cli(capsys, ["oracle", "--to", "4"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n=1 connected=1 formula=1 OK"
    assert lines[3] == "n=4 connected=23 formula=23 OK"


def test_oracle_edges(capsys):
    code, out = run_cli(capsys, ["oracle", "--to", "5", "--edges"])
    assert code == 0
    assert "edges=765 expected=765" in out.splitlines()[-1]


def test_output_is_deterministic(capsys):
    argv = ["verify", "identities", "--order", "12", "--format", "json"]
    code1, out1 = run_cli(capsys, argv)
    code2, out2 = run_cli(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_all_scaled_down(capsys):
    code, out = run_cli(
        capsys,
        [
            "all",
            "--order", "12",
            "--oracle-to", "4",
            "--congruence-to", "81",
            "--agree-to", "8",
            "--f-to", "5",
            "--kummer-n", "5",
            "--kummer-a", "4",
            "--instances", "2",
        ],
    )
    assert code == 0
    assert "checks passed" in out.splitlines()[-1]


def test_version(capsys):
    with pytest.raises(SystemExit) as err:
        main(["--version"])
    assert err.value.code == 0
