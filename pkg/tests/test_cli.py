"""End-to-end tests of the command-line front end.

Everything drives main() in process and asserts on captured stdout/stderr,
including the documented exit-code contract (0 success, 1 identity failure,
2 usage error, 3 resource/cap error) and byte determinism.
"""

import json

from wstirling.cli import main
from wstirling.stirling import b_stirling_by_series


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_csv_classical(capsys):
    code, out, err = run(capsys, "table", "--kind", "second",
                         "--weights", "builtin:classical", "--nmax", "4",
                         "--format", "csv")
    assert code == 0 and err == ""
    assert out == "1;0,1;0,1,1;0,1,3,1;0,1,7,6,1\n"


def test_table_nmax_zero_is_single_line(capsys):
    code, out, _ = run(capsys, "table", "--nmax", "0")
    assert code == 0
    assert out == "1\n"


def test_table_negative_nmax_is_usage_error(capsys):
    code, _, err = run(capsys, "table", "--nmax", "-3")
    assert code == 2
    assert "nonnegative" in err


def test_table_bfile_matches_independent_rows(capsys):
    code, out, _ = run(capsys, "table", "--kind", "second",
                       "--weights", "builtin:b-stirling", "--nmax", "6",
                       "--format", "bfile")
    assert code == 0
    expected = []
    index = 0
    for n in range(7):
        for k in range(n + 1):
            expected.append(f"{index} {b_stirling_by_series(n, k).as_int()}")
            index += 1
    assert out.splitlines() == expected


def test_table_bfile_rejects_symbolic_entries(capsys):
    code, _, err = run(capsys, "table", "--kind", "first",
                       "--weights", "builtin:jacobi", "--nmax", "3",
                       "--format", "bfile")
    assert code == 3
    assert "integer entries" in err


def test_table_json_shape(capsys):
    code, out, _ = run(capsys, "table", "--kind", "first",
                       "--weights", "builtin:classical", "--nmax", "3",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["params"]["kind"] == "first"
    assert payload["params"]["label"] == "classical"
    assert payload["rows"] == [["1"], ["0", "1"], ["0", "1", "1"],
                               ["0", "2", "3", "1"]]


def test_table_output_is_byte_deterministic(capsys):
    args = ("table", "--kind", "second", "--weights", "builtin:pq-binomial",
            "--nmax", "5", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_unknown_weights_are_usage_errors(capsys):
    assert run(capsys, "table", "--weights", "builtin:nope", "--nmax", "2")[0] == 2
    assert run(capsys, "table", "--weights", "classical", "--nmax", "2")[0] == 2
    assert run(capsys, "table", "--weights", "@/no/such/file.json",
               "--nmax", "2")[0] == 2


def test_det_example(capsys):
    code, out, _ = run(capsys, "det", "--kind", "second", "--r", "1", "--s", "1",
                       "--weights", "builtin:classical")
    assert code == 0
    assert out == ("matrix (dim 2):\n"
                   "[ 1  1 ]\n"
                   "[ 1  3 ]\n"
                   "det=2\n"
                   "formula=2\n"
                   "EQUAL\n")


def test_det_symbolic_weights(capsys):
    code, out, _ = run(capsys, "det", "--kind", "first", "--r", "2", "--s", "1",
                       "--weights", "builtin:jacobi")
    assert code == 0
    assert out.rstrip().endswith("EQUAL")


def test_enumerate_signed_partitions_example(capsys):
    code, out, _ = run(capsys, "enumerate", "--object", "signed-partitions",
                       "--n", "2", "--k", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "count=2"
    assert sorted(lines[:-1]) == ["{0,-2}{1,-1,2}", "{0,2}{1,-1,-2}"]


def test_enumerate_forced_singleton_column(capsys):
    code, out, _ = run(capsys, "enumerate", "--object", "T", "--r", "0",
                       "--s", "1", "--alpha", "0", "--beta", "0")
    assert code == 0
    assert out == "[0 / 0]\ncount=1\n"


def test_enumerate_zero_one(capsys):
    code, out, _ = run(capsys, "enumerate", "--object", "zero-one", "--tops", "1",
                       "--column-sum", "1", "--weights", "builtin:classical")
    assert code == 0
    assert out == "[1 / 0] above 2_1 below 1_1\ncount=1\n"


def test_enumerate_permutations_match_figure_notation(capsys):
    code, out, _ = run(capsys, "enumerate", "--object", "permutations",
                       "--n", "2", "--k", "1", "--weights", "builtin:classical")
    assert code == 0
    # v(0) = 0 forbids colored letters right after 0, leaving one permutation
    assert out == "(0)(1 2_1)\ncount=1\n"


def test_enumerate_cap_exceeded_exits_3(capsys):
    code, _, err = run(capsys, "enumerate", "--object", "T", "--r", "6",
                       "--s", "6", "--cap", "10")
    assert code == 3
    assert "cap" in err
    code, _, err = run(capsys, "enumerate", "--object", "partitions",
                       "--n", "5", "--k", "2", "--weights", "builtin:merris(2)",
                       "--cap", "3")
    assert code == 3


def test_enumerate_symbolic_weights_rejected(capsys):
    code, _, err = run(capsys, "enumerate", "--object", "partitions",
                       "--n", "3", "--k", "1", "--weights", "builtin:jacobi")
    assert code == 2


def test_enumerate_missing_flags(capsys):
    code, _, err = run(capsys, "enumerate", "--object", "partitions", "--n", "3")
    assert code == 2
    assert "--k" in err


def test_verify_negative_nmax_is_usage_error(capsys):
    assert run(capsys, "verify", "--suite", "lu", "--nmax", "-1")[0] == 2


def test_verify_bad_range_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--suite", "lu", "--alpha-range", "2")
    assert code == 2
    assert "LO:HI" in err


def test_verify_single_suite_classical(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "recurrences",
                       "--weights", "builtin:classical", "--nmax", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("verify: suite=recurrences")
    assert all(line.startswith("PASS ") for line in lines[1:-1])
    assert lines[-1].startswith("result: 7 identities, 7 passed, 0 failed")


def test_verify_q_weights_report_skips(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "orthogonality",
                       "--weights", "builtin:q-stirling", "--nmax", "4")
    assert code == 0
    assert "skipped=" in out
    assert "SKIP orthogonality/inverse-pair-alpha" in out


def test_verify_output_is_byte_deterministic(capsys):
    args = ("verify", "--suite", "orthogonality", "--weights",
            "builtin:b-stirling", "--nmax", "4")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_verify_corrupted_table_weights_fail_with_counterexample(capsys, tmp_path):
    spec = tmp_path / "corrupt.json"
    spec.write_text(json.dumps({
        "v": {"kind": "table", "values": {"0": 1, "1": 3, "2": 2}, "default": 1},
        "w": {"kind": "constant", "value": 1},
    }))
    code, out, _ = run(capsys, "verify", "--suite", "combinatorial",
                       "--weights", "@" + str(spec), "--nmax", "4")
    assert code == 1
    assert "FAIL combinatorial/zero-one-counts" in out
    assert "counterexample:" in out
    assert "result:" in out.splitlines()[-1]


def test_verify_malformed_spec_is_usage_error(capsys, tmp_path):
    spec = tmp_path / "bad.json"
    spec.write_text('{"v": {"kind": "bogus"}}')
    code, _, err = run(capsys, "verify", "--suite", "lu",
                       "--weights", "@" + str(spec))
    assert code == 2
    assert "invalid weight spec" in err


def test_verify_all_on_one_small_weight(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all",
                       "--weights", "builtin:classical", "--nmax", "4")
    assert code == 0
    assert "0 failed" in out.splitlines()[-1]
