"""Command-line behavior: parsing, formats, exit codes, table bytes."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from nstep.bfile import BFileFormatError, parse_bfile, verify_terms
from nstep.cli import (format_rational, main, parse_index_list,
                       parse_rational)
from nstep.engine import Family, TermCache, make_spec
from nstep.identities import all_ids
from nstep.series import weighted_partial_sum

FIXTURES = Path(__file__).parent / "fixtures"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# helpers


def test_parse_index_list():
    assert parse_index_list("1..4") == [1, 2, 3, 4]
    assert parse_index_list("-4..2") == list(range(-4, 3))
    assert parse_index_list("0,5,9") == [0, 5, 9]
    assert parse_index_list("3") == [3]
    assert parse_index_list("1..3,7,-2") == [1, 2, 3, 7, -2]


@pytest.mark.parametrize("bad", ["5..1", "", "a..b", "1,,2", "1.5"])
def test_parse_index_list_rejects(bad):
    with pytest.raises(ValueError):
        parse_index_list(bad)


def test_rational_round_trip():
    assert parse_rational("7/3") == Fraction(7, 3)
    assert parse_rational("-3/5") == Fraction(-3, 5)
    assert parse_rational("0.5") == Fraction(1, 2)
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 5)) == "-3/5"
    assert format_rational(7) == "7"


# ---------------------------------------------------------------------------
# b-file parsing and verification


def test_parse_bfile_accepts_comments_and_blanks():
    text = "# header\n\n1 0\n2 1\n\n# mid comment\n3 1\n"
    entries = parse_bfile(text)
    assert [(e.index, e.value) for e in entries] == [(1, 0), (2, 1), (3, 1)]


@pytest.mark.parametrize("text,fragment", [
    ("1 2 3\n", "line 1"),
    ("1 x\n", "non-integer"),
    ("5 1\n4 1\n", "does not increase"),
    ("5 1\n5 2\n", "does not increase"),
])
def test_parse_bfile_rejects(text, fragment):
    with pytest.raises(BFileFormatError) as excinfo:
        parse_bfile(text)
    assert fragment in str(excinfo.value)


def test_verify_terms_offset_and_mismatch():
    cache = TermCache(make_spec(Family.U, 2))
    good = parse_bfile("1 0\n2 1\n3 1\n4 2\n")
    report = verify_terms(good, cache, offset=-1)
    assert report.ok and report.entries == 4

    bad = parse_bfile("1 0\n2 1\n3 9\n")
    report = verify_terms(bad, cache, offset=-1)
    assert not report.ok
    assert report.mismatches == ((3, 1, 9),)


def test_verify_terms_mismatch_cap():
    cache = TermCache(make_spec(Family.U, 2))
    entries = parse_bfile("\n".join("%d 99" % i for i in range(1, 30)))
    report = verify_terms(entries, cache, offset=-1, max_mismatches=4)
    assert len(report.mismatches) == 4


# ---------------------------------------------------------------------------
# seq, table, term


def test_seq_tsv(capsys):
    code, out, _ = run_cli(capsys, "seq", "--n", "2", "--from", "0",
                           "--to", "5")
    assert code == 0
    assert out.splitlines() == ["0\t0", "1\t1", "2\t1", "3\t2", "4\t3", "5\t5"]


def test_seq_negative_start(capsys):
    code, out, _ = run_cli(capsys, "seq", "--family", "V", "--n", "3",
                           "--from", "-4", "--to", "10")
    assert code == 0
    values = [int(line.split("\t")[1]) for line in out.splitlines()]
    assert values == [-5, 5, -1, -1, 3, 1, 3, 7, 11, 21, 39, 71, 131, 241, 443]


def test_seq_json(capsys):
    code, out, _ = run_cli(capsys, "seq", "--family", "W", "--n", "3",
                           "--seeds", "-1,0,2", "--from", "0", "--to", "9",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "seq"
    assert payload["params"]["sequence"] == "W(n=3; -1,0,2)"
    assert len(payload["rows"]) == 10
    assert payload["rows"][0] == ["0", "-1"]
    assert payload["rows"][5] == ["5", "6"]
    assert payload["rows"][9] == ["9", "64"]


def test_table_is_byte_stable(capsys):
    code, first, _ = run_cli(capsys, "table")
    assert code == 0
    lines = first.splitlines()
    assert len(lines) == 8
    assert lines[0] == ("2\tFibonacci\t-3\t2\t-1\t1\t0\t1\t1\t2\t3\t5\t8"
                        "\t13\t21\t34\t55")
    assert lines[7].startswith("5\tPentanacci-Lucas\t")
    code, second, _ = run_cli(capsys, "table", "--n", "2,3,4,5")
    assert code == 0 and second == first


def test_table_json_matches_tsv_values(capsys):
    code, tsv, _ = run_cli(capsys, "table", "--n", "2")
    code2, raw, _ = run_cli(capsys, "table", "--n", "2", "--format", "json")
    assert code == 0 and code2 == 0
    payload = json.loads(raw)
    assert [ "\t".join(row) for row in payload["rows"] ] == tsv.splitlines()


def test_table_past_named_orders(capsys):
    code, out, _ = run_cli(capsys, "table", "--n", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("6\tU(n=6)\t")
    # special values 2^(n-2), 2^(n-1), 2^n - 1 land at r = n, n+1, n+2
    assert lines[0].split("\t")[2 + 4 + 6:2 + 4 + 9] == ["16", "32", "63"]


def test_table_rejects_bad_order():
    with pytest.raises(SystemExit) as excinfo:
        main(["table", "--n", "1"])
    assert excinfo.value.code == 2


def test_term_exact_and_modular(capsys):
    code, out, _ = run_cli(capsys, "term", "--n", "2", "--r", "10")
    assert code == 0 and out.strip() == "10\t55"
    code, out, _ = run_cli(capsys, "term", "--family", "U", "--n", "3",
                           "--r", "-18")
    assert code == 0 and out.strip() == "-18\t-103"
    code, out, _ = run_cli(capsys, "term", "--n", "4", "--r", "100000",
                           "--mod", "99991", "--oracle")
    assert code == 0


def test_term_exact_limit():
    with pytest.raises(SystemExit) as excinfo:
        main(["term", "--n", "3", "--r", "2000000"])
    assert excinfo.value.code == 2


# ---------------------------------------------------------------------------
# check


def test_check_single_pass_and_fail(capsys):
    code, out, _ = run_cli(capsys, "check", "--id", "HISERT",
                           "--n", "2", "--k", "2")
    assert code == 0
    assert "-3 = -3" in out
    assert out.strip().endswith("PASS")

    code, out, _ = run_cli(capsys, "check", "--id", "KT-5POW-PRINTED",
                           "--n", "3", "--r", "5", "--k", "1")
    assert code == 1
    assert "!=" in out and out.strip().endswith("FAIL")


def test_check_single_over_ranges(capsys):
    code, out, _ = run_cli(capsys, "check", "--id", "ADD-W", "--family", "V",
                           "--n", "3", "--r", "4..6", "--s", "-2,4")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert all(line.endswith("\tPASS") for line in lines)
    assert "\tV(n=3)\t" in lines[0]


@pytest.mark.parametrize("argv", [
    ["check", "--id", "HISERT", "--n", "2"],
    ["check", "--id", "HISERT", "--n", "2", "--k", "2", "--s", "1"],
    ["check", "--id", "HISERT", "--k", "2"],
    ["check", "--id", "NO-SUCH-ID", "--n", "2", "--k", "2"],
    ["check", "--id", "ADD-N4-GEN", "--n", "3", "--r", "1", "--s", "1"],
    ["check"],
])
def test_check_usage_errors(argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 2


def test_check_list(capsys):
    code, out, _ = run_cli(capsys, "check", "--list")
    assert code == 0
    assert "ADD-W" in out and "[adjudication]" in out


def test_check_all_small_grid(capsys):
    code, out, _ = run_cli(capsys, "check", "--all", "--n", "2,3,4",
                           "--r", "-3..3", "--s", "-2..2",
                           "--k", "0..2", "--seed-sets", "1")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == len(all_ids())
    assert all(line.endswith("\tok") for line in lines)


def test_check_adjudicate(capsys):
    code, out, _ = run_cli(capsys, "check", "--adjudicate", "--n", "3,5")
    assert code == 0
    printed = [l for l in out.splitlines() if "\tas printed\t" in l]
    amended = [l for l in out.splitlines() if "\tamended\t" in l]
    assert printed and amended
    # every amended reading is clean on this grid
    assert all(line.split("\t")[5] == "0" for line in amended)
    # the disputed U reading fails somewhere at n=3
    bad = [l for l in printed if l.split("\t")[1] == "ALTSUM-U-PRINTED"]
    assert bad and all(int(line.split("\t")[5]) > 0 for line in bad)


# ---------------------------------------------------------------------------
# gf, sum, bench


def test_gf_reduced_text(capsys):
    code, out, _ = run_cli(capsys, "gf", "--n", "2", "--reduce",
                           "--terms", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "function\t(x) / (1 - x - x^2)"
    assert lines[1] == "num\t0 1"
    assert lines[2] == "den\t1 -1 -1"
    assert lines[3:] == ["coeff\t0\t0", "coeff\t1\t1", "coeff\t2\t1",
                         "coeff\t3\t2", "coeff\t4\t3"]


def test_gf_three_step_denominator(capsys):
    code, out, _ = run_cli(capsys, "gf", "--family", "U", "--n", "3",
                           "--terms", "11")
    assert code == 0
    lines = out.splitlines()
    assert "den\t1 -2 0 0 1" in lines
    assert lines[-1] == "coeff\t10\t149"


def test_sum_matches_direct(capsys):
    cache = TermCache(make_spec(Family.V, 3))
    expect = weighted_partial_sum(cache, Fraction(7, 3), 12)
    code, out, _ = run_cli(capsys, "sum", "--family", "V", "--n", "3",
                           "--x", "7/3", "--k", "12")
    assert code == 0
    cells = out.strip().split("\t")
    assert cells[2] == cells[3] == "%d/%d" % (expect.numerator,
                                              expect.denominator)


def test_sum_unit_weight_columns(capsys):
    code, out, _ = run_cli(capsys, "sum", "--family", "U", "--n", "3",
                           "--x", "1", "--k", "10")
    assert code == 0 and out.strip() == "1\t10\t326\t326"
    code, out, _ = run_cli(capsys, "sum", "--family", "V", "--n", "2",
                           "--x", "1/2", "--k", "0")
    assert code == 0 and out.strip() == "1/2\t0\t2\t2"


def test_sum_negative_weight_after_flag(capsys):
    code, out, _ = run_cli(capsys, "sum", "--n", "2", "--x", "-3/5",
                           "--k", "4")
    assert code == 0
    assert out.strip().split("\t")[0] == "-3/5"


@pytest.mark.parametrize("argv", [
    ["sum", "--n", "2", "--x", "woof", "--k", "3"],
    ["sum", "--n", "2", "--x", "2", "--k", "-1"],
])
def test_sum_usage_errors(argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 2


def test_bench_all_algos(capsys):
    code, out, _ = run_cli(capsys, "bench", "--n", "4", "--r", "3000",
                           "--mod", "99991", "--repeat", "1")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    names = [row[0] for row in rows]
    assert names == ["doubling", "matrix", "naive", "bound", "within_bound",
                     "values_agree"]
    by_name = {row[0]: row for row in rows}
    assert by_name["within_bound"][2] == "yes"
    assert by_name["values_agree"][2] == "yes"
    assert int(by_name["doubling"][2]) <= int(by_name["bound"][2])
    assert by_name["naive"][2] == "-"


def test_bench_skips_naive_on_huge_index(capsys):
    code, out, err = run_cli(capsys, "bench", "--n", "3",
                             "--r", "20000001", "--mod", "97",
                             "--repeat", "1")
    assert code == 0
    assert "skipping naive" in err
    assert not any(line.startswith("naive\t") for line in out.splitlines())


def test_bench_refuses_explicit_naive_walk():
    with pytest.raises(SystemExit) as excinfo:
        main(["bench", "--n", "3", "--r", "20000001", "--mod", "97",
              "--algo", "naive"])
    assert excinfo.value.code == 2


# ---------------------------------------------------------------------------
# verify-bfile


def test_verify_bfile_fixtures(capsys):
    code, out, _ = run_cli(capsys, "verify-bfile", "--n", "3",
                           "--file", str(FIXTURES / "tribonacci.txt"),
                           "--offset", "-1")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 120
    assert all(line.endswith("\tok") for line in lines)

    code, out, err = run_cli(capsys, "verify-bfile", "--n", "3",
                             "--file", str(FIXTURES / "tribonacci_corrupt.txt"),
                             "--offset", "-1")
    assert code == 1
    bad = [line for line in out.splitlines() if line.endswith("\tFAIL")]
    assert len(bad) == 1 and bad[0].startswith("60\t")
    assert "1 of 120" in err

    code, out, _ = run_cli(capsys, "verify-bfile", "--n", "4",
                           "--file", str(FIXTURES / "tetranacci.txt"),
                           "--offset", "-2")
    assert code == 0


def test_verify_bfile_parse_error_exits_2(tmp_path, capsys):
    path = tmp_path / "broken.txt"
    path.write_text("1 0\n2 one\n")
    code, _, err = run_cli(capsys, "verify-bfile", "--n", "3",
                           "--file", str(path), "--offset", "-1")
    assert code == 2 and "line 2" in err


def test_verify_bfile_empty_file(tmp_path, capsys):
    path = tmp_path / "empty.txt"
    path.write_text("")
    code, out, _ = run_cli(capsys, "verify-bfile", "--n", "3",
                           "--file", str(path))
    assert code == 0 and out == ""


def test_verify_bfile_missing_file(capsys):
    code, _, err = run_cli(capsys, "verify-bfile", "--n", "3",
                           "--file", "/nonexistent/nope.txt")
    assert code == 2 and "cannot read" in err


# ---------------------------------------------------------------------------
# shared usage errors


@pytest.mark.parametrize("argv", [
    [],
    ["seq", "--n", "2", "--from", "1"],
    ["seq", "--from", "1", "--to", "3"],
    ["seq", "--n", "1", "--from", "1", "--to", "3"],
    ["seq", "--n", "2", "--from", "9", "--to", "1"],
    ["seq", "--family", "W", "--n", "3", "--from", "1", "--to", "3"],
    ["seq", "--family", "W", "--n", "3", "--seeds", "1,2",
     "--from", "0", "--to", "3"],
    ["seq", "--family", "U", "--n", "2", "--seeds", "1,2",
     "--from", "0", "--to", "3"],
])
def test_usage_exit_codes(argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 2
