import io
import json

from quadsums.cli import main


def run(argv):
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()


def test_eval_running_example():
    code, out = run(["eval", "--p", "5", "--n", "1", "--coeffs", "1,2,3,4,1", "--m", "13"])
    assert code == 0
    assert "t=-1" in out and "l=4" in out
    assert "value = -g^9*p^4" in out


def test_eval_table_first_row():
    code, out = run(["eval", "--p", "3", "--n", "1", "--coeffs", "1", "--m", "1"])
    assert code == 0
    assert "value = g\n" in out


def test_eval_sparse_zero_coefficient_rejected():
    code, _ = run(["eval", "--p", "5", "--n", "1", "--coeffs", "3,0,1", "--alphas", "1,2,3", "--m", "2"])
    assert code == 1


def test_eval_alpha_count_mismatch_rejected():
    code, _ = run(["eval", "--p", "5", "--n", "1", "--coeffs", "3,1", "--alphas", "1,2,3", "--m", "2"])
    assert code == 1


def test_eval_json_schema():
    code, out = run(["eval", "--p", "5", "--coeffs", "1,2,3,4,1", "--m", "13", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"p", "n", "m", "N", "l", "t", "value_exact", "value_cyclotomic", "value_complex", "provenance"}
    assert doc["value_exact"] == "-g^9*p^4"
    assert doc["l"] == 4 and doc["t"] == -1
    assert len(doc["value_cyclotomic"]) == 4


def test_profile_running_example():
    code, out = run(["profile", "--p", "5", "--n", "1", "--coeffs", "1,2,3,4,1"])
    assert code == 0
    assert "s = 26" in out
    assert "(1,0) (2,0) (13,4) (26,8)" in out


def test_profile_json_roundtrip():
    code, out = run(["profile", "--p", "5", "--coeffs", "1,2,3,4,1", "--format", "json"])
    doc = json.loads(out)
    assert doc["s"] == 26 and doc["entries"] == [[1, 0], [2, 0], [13, 4], [26, 8]]


def test_table_diff_clean():
    code, out = run(["table", "--p", "3", "--alpha-max", "4", "--diff", "table1"])
    assert code == 0
    assert out.strip() == "OK: 121 rows, 0 diffs"


def test_table_csv_output(tmp_path):
    target = tmp_path / "t.csv"
    code, _ = run(["table", "--p", "3", "--alpha-max", "1", "--out", str(target)])
    assert code == 0
    assert target.read_text().splitlines()[0] == "1;1;(1,0)"


def test_verify_text_and_exit():
    code, out = run(["verify", "--p", "3", "--coeffs", "1,1", "--m", "2"])
    assert code == 0
    assert out.startswith("exact-equal")


def test_verify_cap_too_small():
    code, _ = run(["verify", "--p", "3", "--coeffs", "1,1", "--m", "10", "--cap", "100"])
    assert code == 1


def test_shift_phase_and_zero():
    code, out = run(["shift", "--p", "5", "--coeffs", "1", "--m", "1", "--b", "1"])
    assert code == 0
    assert "zeta^(-4)" in out
    code, out = run(["shift", "--p", "3", "--coeffs", "2,1", "--m", "1", "--b", "1"])
    assert code == 0
    assert out.startswith("0 ")


def test_monomial_case_iii():
    code, out = run(["monomial", "--p", "3", "--a", "1", "--alpha", "1", "--N", "4"])
    assert code == 0
    assert "case iii" in out and "integer value = -27" in out


def test_unsupported_exit_code():
    code, _ = run(["eval", "--p", "3", "--coeffs", "1,1", "--m", str(3**6)])
    assert code == 2


def test_invalid_prime_exit_code():
    code, _ = run(["eval", "--p", "9", "--coeffs", "1", "--m", "1"])
    assert code == 1
    code, _ = run(["eval", "--p", "2", "--coeffs", "1", "--m", "1"])
    assert code == 1


def test_extension_base_input():
    code, out = run(["eval", "--p", "3", "--n", "2", "--coeffs", "1,0;0,1", "--m", "2"])
    assert code == 0
    assert "N=4" in out and "modulus=1,0,1" in out


def test_output_deterministic():
    args = ["eval", "--p", "5", "--coeffs", "1,2,3,4,1", "--m", "26", "--format", "json"]
    assert run(args) == run(args)


def test_table_diff_failure_exit_code(tmp_path):
    from quadsums.tabulate import generate_table, rows_to_csv

    rows = generate_table(3, 1)
    lines = rows_to_csv(rows).splitlines()
    ref = tmp_path / "ref.csv"
    ref.write_text("\n".join(lines[:-1] + [lines[-1].replace("(3,2)", "(3,1)")]) + "\n")
    code, out = run(["table", "--p", "3", "--alpha-max", "1", "--diff", str(ref)])
    assert code == 3
    assert "1 diffs" in out
