import json
import subprocess
import sys

import pytest

from quadcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out) if out else None, err


def test_analyze_standard_deck(capsys):
    code, env, _ = run_json(capsys, "analyze", "--deck", "6", "--cards", "0,21,42,63")
    assert code == 0
    assert env["command"][:2] == ["quadcodes", "analyze"]
    assert env["deck"] == 6 and env["budget"] == "exact"
    res = env["result"]
    assert res["dimension"] == 1 and res["quads"] == 1
    assert res["quad_list"] == [[0, 1, 2, 3]]
    assert res["min_realizing_dimension"] == 2


def test_analyze_quaternary(capsys):
    code, env, _ = run_json(capsys, "analyze", "--deck", "4", "--cards", "q:00,q:01,q:02,q:10,q:13,q:03")
    assert code == 0 and env["result"]["quads"] == 3


def test_analyze_single_card_text(capsys):
    code, out, _ = run(capsys, "analyze", "--deck", "4", "--cards", "0")
    assert code == 0
    assert "k=0" in out and "quads=0" in out


@pytest.mark.parametrize("cards", ["0,0", "16", "a,b", "q:4"])
def test_analyze_parse_errors(capsys, cards):
    code, out, err = run(capsys, "analyze", "--deck", "4", "--cards", cards)
    assert code == 1 and out == "" and err


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 1
    assert run(capsys, "analyze", "--deck", "4")[0] == 1
    assert run(capsys, "noquads", "--deck", "4", "--max", "--size", "3")[0] == 1


def test_realize_exit_codes(capsys, tmp_path):
    good = tmp_path / "h8.txt"
    good.write_text("# extended Hamming\n11110000\n00111100\n00001111\n10101010\n")
    code, env, _ = run_json(capsys, "realize", str(good), "--deck", "3")
    assert code == 0
    assert sorted(env["result"]["cards"]) == list(range(8)) and env["result"]["verified"]
    code, _, err = run(capsys, "realize", str(good), "--deck", "2")
    assert code == 2 and "n >= 3" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("1100\n0110\n")
    assert run(capsys, "realize", str(bad), "--deck", "3")[0] == 3
    odd = tmp_path / "odd.txt"
    odd.write_text("1110\n")
    assert run(capsys, "realize", str(odd), "--deck", "3")[0] == 3
    assert run(capsys, "realize", str(tmp_path / "missing"), "--deck", "3")[0] == 1
    garbage = tmp_path / "garbage.txt"
    garbage.write_text("10x1\n")
    assert run(capsys, "realize", str(garbage), "--deck", "3")[0] == 1


def test_tables_d_check(capsys):
    code, out, _ = run(capsys, "tables", "d", "--max-cards", "7", "--check")
    assert code == 0
    assert "check against Table 1: OK" in out
    code, env, _ = run_json(capsys, "tables", "d", "--max-cards", "7")
    assert env["result"]["rows"]["7"] == [32, 32, 16, 16, None, None, None, 8]
    first_text_row = out.splitlines()[1].split()
    assert first_text_row == ["1", "1"] + ["-"] * 7


def test_tables_d_budget(capsys):
    assert run(capsys, "tables", "d", "--max-cards", "9")[0] == 4


def test_tables_bounds(capsys):
    code, env, _ = run_json(capsys, "tables", "bounds", "--cards", "15", "--check")
    assert code == 0
    lower = env["result"]["lower"]
    assert [lower[str(l)] for l in range(12, 16)] == [7, 7, 7, 7]
    assert env["result"]["check"]["ok"]


def test_tables_b_check_reports_mismatch(capsys):
    code, env, _ = run_json(capsys, "tables", "b", "--check")
    check = env["result"]["check"]
    assert code == 5 and not check["ok"]
    assert {m["key"] for m in check["mismatches"]} == {"B(11)", "B(12)"}
    code, _, _ = run_json(capsys, "tables", "b", "--max-length", "10", "--check")
    assert code == 0


def test_tables_f(capsys):
    code, env, _ = run_json(capsys, "tables", "f", "--max-dim", "6", "--check")
    assert code == 0
    assert [env["result"]["F"][str(n)] for n in range(1, 7)] == [2, 3, 4, 6, 7, 9]
    assert run(capsys, "tables", "f", "--max-dim", "9")[0] == 4


def test_noquads(capsys):
    code, env, _ = run_json(capsys, "noquads", "--deck", "6", "--max")
    assert code == 0
    res = env["result"]
    assert res["max"] == 9 and len(res["cards"]) == 9 and res["verified_quad_free"]
    code, out, _ = run(capsys, "noquads", "--deck", "6", "--max")
    assert ", ".join(map(str, res["cards"])) in out
    code, env, _ = run_json(capsys, "noquads", "--deck", "4", "--size", "7")
    assert code == 0 and env["result"]["exists"] is False and env["result"]["cards"] is None
    code, out, _ = run(capsys, "noquads", "--deck", "3", "--size", "4")
    assert code == 0 and "verified quad-free" in out


def test_squares_predict_and_count(capsys):
    code, env, _ = run_json(capsys, "squares", "--kind", "magic", "--predict", "--deck", "5")
    assert code == 0 and env["result"]["predicted"] == 19998720 * 1370
    code, env, _ = run_json(capsys, "squares", "--kind", "strongly-magic", "--count", "--deck", "4", "--method", "orbit")
    assert code == 0 and env["result"]["count"] == 322560 and env["result"]["matches_prediction"]


def test_squares_semimagic_gate(capsys):
    code, _, err = run(capsys, "squares", "--kind", "semimagic", "--count", "--deck", "4", "--method", "full")
    assert code == 4 and "--slow" in err
    code, env, _ = run_json(capsys, "squares", "--kind", "semimagic", "--count", "--deck", "4", "--method", "orbit")
    assert code == 0 and env["result"]["count"] == 36126720


def test_squares_perfect(capsys):
    code, out, _ = run(capsys, "squares", "--perfect")
    assert code == 0 and out.strip() == "Hamming(15,11): OK"


def test_squares_verify(capsys, tmp_path):
    code, env, _ = run_json(capsys, "squares", "--kind", "magic", "--verify", "--seed", "3")
    assert code == 0 and env["seed"] == 3 and env["result"]["ok"]
    sq = tmp_path / "sq.txt"
    sq.write_text("0 1 2 3\n4 5 6 7\n8 9 10 11\n12 13 14 15\n")
    code, env, _ = run_json(capsys, "squares", "--kind", "strongly-magic", "--verify", "--square", str(sq), "--deck", "4")
    assert code == 0 and env["result"]["is_kind"]
    sq.write_text("0 1 2 3\n4 5 6 7\n8 9 10 11\n12 13 15 14\n")
    assert run(capsys, "squares", "--kind", "semimagic", "--verify", "--square", str(sq), "--deck", "4")[0] == 3


def test_squares_usage(capsys):
    assert run(capsys, "squares", "--count", "--deck", "4")[0] == 1
    assert run(capsys, "squares", "--kind", "cubic", "--count", "--deck", "4")[0] == 1
    assert run(capsys, "squares", "--kind", "magic", "--count")[0] == 1


def test_squares_dimensions(capsys):
    code, env, _ = run_json(capsys, "squares", "--dimensions")
    assert code == 0
    assert env["result"]["deck_size"] == {"7": 256, "8": 128, "9": 64, "10": 32, "11": 16}


def test_json_flag_before_command(capsys):
    code, out, _ = run(capsys, "--json", "noquads", "--deck", "3", "--size", "2")
    assert code == 0 and json.loads(out)["result"]["cards"] == [0, 1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quadcodes", "squares", "--perfect"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and "OK" in proc.stdout
