import json

from quotamaj import Alternative, CountTable, QuotaSeq, to_table
from quotamaj.cli import BUDGET_EXCEEDED, INVALID_INPUT, OK, PROPERTY_VIOLATED, main
from quotamaj.fileformats import format_count_table, format_full_table
from quotamaj.oracle import expand_to_full

A, B = Alternative.A, Alternative.B


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def majority3():
    return CountTable.from_function(3, lambda p: A if p.na > p.nb else B)


def test_eval_worked_rule(capsys):
    code, out, _ = run(capsys, "eval", "--n", "11", "--quotas", "5,2,12", "--na", "3", "--nb", "6")
    assert code == OK and out == "a (lambda=1)\n"
    code, out, _ = run(capsys, "eval", "--n", "11", "--quotas", "12", "--na", "0", "--nb", "0")
    assert code == OK and out == "b (lambda=0)\n"
    code, out, _ = run(capsys, "eval", "--n", "11", "--quotas", "5,2,12", "--na", "3", "--nb", "7")
    assert code == OK and out == "b (lambda=0)\n"


def test_eval_rejects_bad_input(capsys):
    code, _, err = run(capsys, "eval", "--n", "11", "--quotas", "5,2", "--na", "0", "--nb", "0")
    assert code == INVALID_INPUT and "error:" in err
    code, _, err = run(capsys, "eval", "--n", "3", "--quotas", "2,4", "--na", "2", "--nb", "2")
    assert code == INVALID_INPUT and "error:" in err


def test_canon(capsys):
    code, out, _ = run(capsys, "canon", "--n", "11", "--quotas", "5,2,7,12")
    assert code == OK and out == "5,2,12\n"
    code, out, _ = run(capsys, "canon", "--n", "11", "--subset", "2,5")
    assert code == OK and out == "5,2,12\n"
    code, out, _ = run(capsys, "canon", "--n", "11", "--subset", "-", "--default", "a")
    assert code == OK and out == "0\n"
    code, _, err = run(capsys, "canon", "--n", "11")
    assert code == INVALID_INPUT and "error:" in err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--n", "3")
    assert code == OK and out == "16\n"
    code, out, _ = run(capsys, "count", "--n", "11")
    assert code == OK and out == "4096\n"


def test_enum_to_file(tmp_path, capsys):
    out_file = tmp_path / "family.txt"
    code, _, _ = run(capsys, "enum", "--n", "2", "--out", str(out_file))
    assert code == OK
    lines = out_file.read_text().splitlines()
    assert lines[0] == "n=2" and lines[1] == "count=8"
    assert len(lines) == 10
    # stable bytes across runs
    code, _, _ = run(capsys, "enum", "--n", "2", "--out", str(out_file))
    assert out_file.read_text().splitlines() == lines


def test_enum_structured(tmp_path, capsys):
    out_file = tmp_path / "family.json"
    code, _, _ = run(capsys, "enum", "--n", "1", "--out", str(out_file), "--format", "structured")
    assert code == OK
    data = json.loads(out_file.read_text())
    assert data["count"] == 4
    assert data["family"][0]["table"] == "bbb"


def test_verify_good_table(tmp_path, capsys):
    path = tmp_path / "majority.tbl"
    path.write_text(format_count_table(majority3()))
    code, out, _ = run(capsys, "verify", "--table", str(path))
    assert code == OK
    assert out == "anonymous: yes (count table)\nstrategy-proof: yes\nonto: yes\n"


def test_verify_manipulable_table(tmp_path, capsys):
    def rule(p):
        if (p.na, p.nb) == (1, 1):
            return A
        if (p.na, p.nb) == (2, 1):
            return B
        return A if p.na > p.nb else B

    path = tmp_path / "broken.tbl"
    path.write_text(format_count_table(CountTable.from_function(3, rule)))
    code, out, err = run(capsys, "verify", "--table", str(path))
    assert code == PROPERTY_VIOLATED
    assert "strategy-proof: no" in out and "error:" in err


def test_verify_non_anonymous_table(tmp_path, capsys):
    from quotamaj import FullTable, Preference

    dictator = FullTable.from_function(
        2, lambda prof: A if prof[0] is Preference.A else B
    )
    path = tmp_path / "dictator.tbl"
    path.write_text(format_full_table(dictator))
    code, out, _ = run(capsys, "verify", "--table", str(path))
    assert code == PROPERTY_VIOLATED
    assert "anonymous: no" in out


def test_verify_full_anonymous_table(tmp_path, capsys):
    path = tmp_path / "full.tbl"
    path.write_text(format_full_table(expand_to_full(majority3())))
    code, out, _ = run(capsys, "verify", "--table", str(path))
    assert code == OK
    assert "anonymous: yes" in out and "strategy-proof: yes" in out


def test_represent(tmp_path, capsys):
    path = tmp_path / "majority.tbl"
    path.write_text(format_count_table(majority3()))
    code, out, _ = run(capsys, "represent", "--table", str(path))
    assert code == OK
    assert out == "2,3,1,4\nx=b; (l,k)=(0,2),(2,1)\n"


def test_represent_worked_rule(tmp_path, capsys):
    path = tmp_path / "worked.tbl"
    path.write_text(format_count_table(to_table(QuotaSeq(11, (5, 2, 12)))))
    code, out, _ = run(capsys, "represent", "--table", str(path))
    assert code == OK
    assert out.splitlines()[0] == "5,2,12"
    assert out.splitlines()[1] == "x=b; (l,k)=(0,5),(1,4),(2,3),(3,2)"


def test_represent_manipulable_is_property_violation(tmp_path, capsys):
    def rule(p):
        if (p.na, p.nb) == (1, 1):
            return A
        if (p.na, p.nb) == (2, 1):
            return B
        return A if p.na > p.nb else B

    path = tmp_path / "broken.tbl"
    path.write_text(format_count_table(CountTable.from_function(3, rule)))
    code, _, err = run(capsys, "represent", "--table", str(path))
    assert code == PROPERTY_VIOLATED and "manipulable" in err


def test_convert_both_directions(capsys):
    code, out, _ = run(capsys, "convert", "--n", "11", "--quotas", "5,2,12")
    assert code == OK
    assert out == "default=b r=10 y=2,2,2,2,2,2,2,3,4,5\n"
    code, out, _ = run(
        capsys,
        "convert",
        "--n", "11",
        "--default", "b",
        "--r", "10",
        "--thresholds", "2,2,2,2,2,2,2,3,4,5",
    )
    assert code == OK and out == "5,2,12\n"


def test_convert_rejects_constant(capsys):
    code, _, err = run(capsys, "convert", "--n", "11", "--quotas", "12")
    assert code == INVALID_INPUT and "error:" in err


def test_missing_table_file(capsys):
    code, _, err = run(capsys, "verify", "--table", "/nonexistent/nowhere.tbl")
    assert code == INVALID_INPUT and "cannot read" in err


def test_enum_budget_exit_code(capsys):
    code, _, err = run(capsys, "enum", "--n", "30")
    assert code == BUDGET_EXCEEDED and "budget" in err


def test_sequence_file_input(tmp_path, capsys):
    from quotamaj.fileformats import format_sequence

    path = tmp_path / "rule.seq"
    path.write_text(format_sequence(QuotaSeq(11, (5, 2, 7, 12))))
    code, out, _ = run(capsys, "canon", "--seq-file", str(path))
    assert code == OK and out == "5,2,12\n"
    code, out, _ = run(capsys, "eval", "--seq-file", str(path), "--na", "3", "--nb", "6")
    assert code == OK and out == "a (lambda=1)\n"
    code, _, err = run(capsys, "eval", "--n", "5", "--seq-file", str(path), "--na", "0", "--nb", "0")
    assert code == INVALID_INPUT and "contradicts" in err
    code, _, err = run(
        capsys, "canon", "--seq-file", str(path), "--quotas", "5,2,12"
    )
    assert code == INVALID_INPUT and "not both" in err


def test_missing_n_is_invalid_input(capsys):
    code, _, err = run(capsys, "eval", "--quotas", "5,2,12", "--na", "3", "--nb", "6")
    assert code == INVALID_INPUT and "society size" in err
