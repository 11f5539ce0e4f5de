import csv
import io
import json
import subprocess
import sys

import pytest

from natint.cli import eval_expression, main
from natint import Flavor, Mod, ParseError, Q, interval, parse_domain


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---- table


def test_table_csv_header_row_and_column(capsys):
    code, out, _ = run(capsys, "table", "N(Zn:2)", "add", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["add", "0", "[0,1]", "[1,0]", "1"]
    assert [r[0] for r in rows[1:]] == ["0", "[0,1]", "[1,0]", "1"]
    # identity row: 0 + x = x
    assert rows[1][1:] == rows[0][1:]


def test_table_punctured_carrier_is_the_klein_table(capsys):
    code, out, _ = run(capsys, "table", "N(Zn:3)\\0", "mul",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 4
    assert set(payload["labels"]) == {"1", "2", "[1,2]", "[2,1]"}
    assert payload["closed"]
    # x * x = 1 on the diagonal
    for i, row in enumerate(payload["table"]):
        assert row[i] == "1"


def test_table_marks_non_closure(capsys):
    code, out, _ = run(capsys, "table", "N(Zn:6)\\0", "mul",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert not payload["closed"]
    assert any("?" in row for row in payload["table"])


def test_table_missing_op_is_an_input_error(capsys):
    code, _, err = run(capsys, "table", "N(Zn:3)\\0", "add")
    assert code == 2
    assert "error:" in err


# ---- analyze / quotient / ideal


def test_analyze_json_shape(capsys):
    code, out, _ = run(capsys, "analyze", "N(Zn:4)")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == "natint/1"
    assert rep["order"] == 16
    assert rep["substructures"]["s_semigroup"]


def test_quotient_rees_class_count(capsys):
    code, out, _ = run(capsys, "quotient", "N(Zn:5,o)", "col-zero",
                       "--kind", "rees")
    assert code == 0
    assert json.loads(out)["classes"] == 21


def test_quotient_standard_kind(capsys):
    code, out, _ = run(capsys, "quotient", "N(Zn:3,o)", "col-zero",
                       "--kind", "standard")
    assert code == 0
    assert json.loads(out)["classes"] == 3


def test_empty_generator_list_is_a_parse_error(capsys):
    code, _, err = run(capsys, "quotient", "N(Zn:4)", "gen{}")
    assert code == 2


def test_quotient_by_non_ideal_exits_4(capsys):
    # matrices with a zero first column absorb products on the left only
    code, _, err = run(capsys, "quotient", "Mat(2,2,N(Zn:2))", "col-zero")
    assert code == 4
    assert "absorbing" in err


def test_ideal_verdict_false_exits_4(capsys):
    code, out, _ = run(capsys, "ideal", "Mat(2,2,N(Zn:2))", "col-zero")
    assert code == 4
    rep = json.loads(out)
    assert rep["is_ideal"] is False
    assert "right" in rep["reason"]


def test_ideal_enumeration(capsys):
    code, out, _ = run(capsys, "ideal", "N(Zn:5)")
    assert code == 0
    rep = json.loads(out)
    assert rep["proper_nonzero"] == 2
    assert len(rep["minimal"]) == 2


def test_ideal_verdict_true(capsys):
    code, out, _ = run(capsys, "ideal", "N(Zn:5)", "col-zero")
    assert code == 0
    rep = json.loads(out)
    assert rep["is_ideal"] is True
    assert rep["subset"]["order"] == 5


# ---- span


def test_span_dimension_two(capsys):
    code, out, _ = run(capsys, "span", "Zn:7", "[1,0]", "[0,1]")
    assert code == 0
    rep = json.loads(out)
    assert rep["dimension"] == 2 and rep["spans"]


def test_span_non_field_rejected(capsys):
    code, _, err = run(capsys, "span", "Zn:6", "[1,0]")
    assert code == 2
    assert "field" in err


# ---- eval


def test_eval_expression_api():
    x = eval_expression("[3,4]*[4,3]", Mod(12))
    assert x == interval(Mod(12), 0, 0)
    y = eval_expression("([1,2]+[3,4])^2", Q)
    assert y == interval(Q, 16, 36)
    z = eval_expression("recip([2,4])", Q)
    assert str(z) == "[1/2,1/4]"
    w = eval_expression("min(max([1,5],[2,3]),[9,4])", Q)
    assert str(w) == "[2,4]"


def test_eval_open_literals_and_scalars():
    v = eval_expression("(2,0)*(0,2)", Mod(4))
    assert str(v) == "0"
    v = eval_expression("3*(1,2)", Mod(5), Flavor.OPEN)
    assert str(v) == "(3,1)"


def test_eval_scalar_division_equals_fraction():
    assert str(eval_expression("1/2 + [1,1]", Q)) == "3/2"


def test_eval_neutrosophic():
    d = parse_domain("Q+I")
    v = eval_expression("[5+2I,-7+5I] * [-3+8I,-I]", d)
    assert str(v) == "[-15+50I,2I]"


def test_eval_cli_payload(capsys):
    code, out, _ = run(capsys, "eval", "Zn:12", "[1,11]^2")
    assert code == 0
    rep = json.loads(out)
    assert rep["result"] == "1"
    assert rep["degenerate"] is True
    assert rep["trend"] == "unordered"


def test_eval_parse_error_reports_position(capsys):
    code, _, err = run(capsys, "eval", "Q", "[1,2] + + [3,4]")
    assert code == 2
    assert "position" in err


def test_eval_rejects_mixed_flavors(capsys):
    code, _, err = run(capsys, "eval", "Q", "[1,2] + (1,2)")
    assert code == 2


def test_eval_division_by_non_unit(capsys):
    code, _, err = run(capsys, "eval", "Zn:6", "[1,1]/[2,2]")
    assert code == 2


# ---- verify-book


def test_verify_book_only_filter(capsys):
    code, out, _ = run(capsys, "verify-book", "--only", "ex-3.4,thm-2.7")
    assert code == 0
    rep = json.loads(out)
    assert [c["claim_id"] for c in rep["claims"]] == ["thm-2.7", "ex-3.4"]
    assert rep["ok"]


def test_verify_book_unknown_claim(capsys):
    code, _, err = run(capsys, "verify-book", "--only", "thm-0.0")
    assert code == 2
    assert "unknown claim" in err


def test_verify_book_text_format(capsys):
    code, out, _ = run(capsys, "verify-book", "--only", "ex-3.4",
                       "--format", "text")
    assert code == 0
    assert out.startswith("pass")
    assert "counts:" in out


# ---- plumbing: determinism, config files, --out


def test_json_output_is_byte_identical(capsys):
    _, a, _ = run(capsys, "analyze", "N(Zn:6)", "--seed", "0")
    _, b, _ = run(capsys, "analyze", "N(Zn:6)", "--seed", "0")
    assert a == b


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "analyze", "N(Zn:2)", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["order"] == 4


def test_config_file_sets_defaults(tmp_path, capsys):
    cfg = tmp_path / "natint.cfg"
    cfg.write_text("output_format = text\nsize_bound = 50  # tight\n")
    code, out, _ = run(capsys, "analyze", "N(Zn:2)", "--config", str(cfg))
    assert code == 0
    assert out.startswith("schema:")  # text, not json
    code, _, err = run(capsys, "analyze", "N(Zn:12)", "--config", str(cfg))
    assert code == 3  # 144 elements > configured bound


def test_cli_flag_overrides_config(tmp_path, capsys):
    cfg = tmp_path / "natint.cfg"
    cfg.write_text("size_bound = 50\n")
    code, _, _ = run(capsys, "analyze", "N(Zn:12)", "--config", str(cfg),
                     "--size-bound", "1000")
    assert code == 0


def test_bad_config_key_rejected(tmp_path, capsys):
    cfg = tmp_path / "natint.cfg"
    cfg.write_text("colour = green\n")
    code, _, err = run(capsys, "analyze", "N(Zn:2)", "--config", str(cfg))
    assert code == 2
    assert "unknown config key" in err


def test_spec_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "analyze", "N(Zn:x)")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "natint", "eval", "Q", "[1,2]*[3,4]"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"] == "[3,8]"
