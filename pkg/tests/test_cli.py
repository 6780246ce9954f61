import csv
import io
import json

from edcert.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json", "--no-timing")
    return code, json.loads(out)


def test_certify_exit_codes(capsys):
    code, _, _ = run(capsys, "certify", "--group", "A:7", "--n", "6")
    assert code == 0
    code, _, _ = run(capsys, "certify", "--group", "A:5", "--n", "2")
    assert code == 1
    code, _, err = run(capsys, "certify", "--group", "PSL2:6", "--n", "2")
    assert code == 2
    assert "prime" in err


def test_certify_json_schema(capsys):
    code, envelope = run_json(capsys, "certify", "--group", "A:7", "--n", "6")
    assert code == 0
    payload = envelope["payload"]
    assert set(payload) == {"group", "n", "mode", "conditions", "overall", "constants", "notes"}
    assert payload["group"] == "A:7"
    assert payload["overall"] == "certified"
    assert [c["condition"] for c in payload["conditions"]] == [
        "no_small_index",
        "mobius_subgroup",
        "no_small_genus_action",
    ]
    assert envelope["version"]
    assert "timing_ms" not in envelope


def test_certify_n_below_two_is_usage_error(capsys):
    code, _, err = run(capsys, "certify", "--group", "A:7", "--n", "1")
    assert code == 2


def test_maxn_values(capsys):
    code, envelope = run_json(capsys, "maxn", "--group", "PSL2:13", "--mode", "paper-formula")
    assert code == 0 and envelope["payload"]["maxn"] == 4
    code, envelope = run_json(capsys, "maxn", "--group", "PSL2:17", "--mode", "paper-formula")
    assert code == 0 and envelope["payload"]["maxn"] == 6
    code, envelope = run_json(capsys, "maxn", "--group", "A:7")
    assert code == 0 and envelope["payload"]["maxn"] == 6
    assert envelope["payload"]["binding"]


def test_maxn_non_simple_is_input_error(capsys):
    code, _, err = run(capsys, "maxn", "--group", "S:4")
    assert code == 2


def test_table_csv_contract(capsys):
    code, out, _ = run(capsys, "table", "--family", "PSL2", "--pmin", "7", "--pmax", "13",
                       "--mode", "paper-formula", "--csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["p", "order", "cond1_max", "cond2_max", "cond3_max", "maxn", "binding"]
    table = {int(r[0]): r for r in rows[1:]}
    assert [int(table[p][5]) for p in (7, 11, 13)] == [2, 3, 4]
    assert int(table[7][1]) == 168


def test_table_rejects_small_pmin(capsys):
    code, _, err = run(capsys, "table", "--family", "PSL2", "--pmin", "5", "--pmax", "7")
    assert code == 2


def test_table_workers_match_sequential(capsys):
    _, solo, _ = run(capsys, "table", "--family", "PSL2", "--pmin", "7", "--pmax", "19",
                     "--mode", "paper-formula", "--csv")
    _, pooled, _ = run(capsys, "table", "--family", "PSL2", "--pmin", "7", "--pmax", "19",
                       "--mode", "paper-formula", "--csv", "--workers", "3")
    assert solo == pooled


def test_compare_json(capsys):
    code, envelope = run_json(capsys, "compare", "--group", "A:7", "--n", "6")
    assert code == 0
    payload = envelope["payload"]
    assert payload["rhs_upper_bound"] == 1
    assert payload["strict"] is True
    assert {e["prime"] for e in payload["entries"]} == {2, 3, 5, 7}


def test_rh_signature_table(capsys):
    code, envelope = run_json(capsys, "rh", "--group", "PSL2:7", "--genus-max", "3")
    assert code == 0
    labels = {entry["label"]: entry for entry in envelope["payload"]}
    assert "(0; 2,3,7)" in labels
    assert labels["(0; 2,3,7)"]["vector"] is not None
    assert labels["(0; 2,3,7)"]["genus"] == 3


def test_oracle_min_index(capsys):
    code, envelope = run_json(capsys, "oracle", "min-index", "--group", "A:5")
    assert code == 0 and envelope["payload"]["min_index"] == 5
    code, _, _ = run(capsys, "oracle", "min-index", "--group", "A:7")
    assert code == 1  # over the subgroup-search cap


def test_oracle_rh(capsys):
    code, envelope = run_json(capsys, "oracle", "rh", "--group", "PSL2:7", "--genus-max", "3")
    assert code == 0
    assert envelope["payload"]["genus"] == 3
    assert envelope["payload"]["signature"] == {"orbit_genus": 0, "periods": [2, 3, 7]}
    code, envelope = run_json(capsys, "oracle", "rh", "--group", "PSL2:7", "--genus-max", "2")
    assert code == 1
    assert envelope["payload"]["verdict"] == "no"


def test_oracle_bounds_h_n(capsys):
    code, envelope = run_json(capsys, "oracle", "bounds", "h_n", "--n", "6")
    assert code == 0
    payload = envelope["payload"]
    assert payload["max"] == 25
    assert payload["argmax"] == [1, 6]


def test_bounds_commands(capsys):
    code, envelope = run_json(capsys, "bounds", "castelnuovo", "--n1", "2", "--g1", "0", "--n2", "3", "--g2", "1")
    assert code == 0 and envelope["payload"]["bound"] == 5
    code, envelope = run_json(capsys, "bounds", "genus-cap", "--n", "6")
    assert envelope["payload"]["genus_cap"] == 25
    code, envelope = run_json(capsys, "bounds", "hurwitz", "--order", "2520")
    assert envelope["payload"]["hurwitz_min_genus"] == 31
    code, envelope = run_json(capsys, "bounds", "h_n", "--n", "6")
    assert envelope["payload"]["max"] == 25


def test_bounds_gonality(capsys):
    code, envelope = run_json(capsys, "bounds", "gonality", "--order", "2520", "--n", "6",
                              "--action-verdict", "no")
    assert code == 0 and envelope["payload"]["verdict"] == "obstructed"
    code, envelope = run_json(capsys, "bounds", "gonality", "--order", "60", "--n", "60",
                              "--action-verdict", "unknown")
    assert code == 1 and envelope["payload"]["verdict"] == "not_obstructed"


def test_cap_flag_degrades_certify(capsys):
    code, envelope = run_json(capsys, "certify", "--group", "PSL2:19", "--n", "2", "--cap", "100")
    assert code == 1
    assert envelope["payload"]["overall"] == "unknown"


def test_environment_cap(capsys, monkeypatch):
    monkeypatch.setenv("EDCERT_CAP", "100")
    code, envelope = run_json(capsys, "certify", "--group", "PSL2:19", "--n", "2")
    assert code == 1 and envelope["payload"]["overall"] == "unknown"
    # the per-command flag wins over the environment
    code, envelope = run_json(capsys, "certify", "--group", "PSL2:19", "--n", "2", "--cap", "100000")
    assert code == 0 and envelope["payload"]["overall"] == "certified"
    monkeypatch.setenv("EDCERT_CAP", "not-a-number")
    code, _, err = run(capsys, "certify", "--group", "PSL2:19", "--n", "2")
    assert code == 2


def test_malformed_flags_exit_2(capsys):
    assert main(["certify", "--group"]) == 2
    assert main(["certify"]) == 2
    assert main(["unknown-command"]) == 2
    assert main(["certify", "--group", "A:7", "--n", "not-a-number"]) == 2


def test_out_writes_file(capsys, tmp_path):
    target = tmp_path / "cert.json"
    code, _, _ = run(capsys, "certify", "--group", "A:7", "--n", "6", "--json", "--no-timing",
                     "--out", str(target))
    assert code == 0
    on_disk = json.loads(target.read_text())
    assert on_disk["payload"]["overall"] == "certified"


def test_json_outputs_are_byte_identical(capsys):
    first = run(capsys, "certify", "--group", "A:7", "--n", "6", "--json", "--no-timing")
    second = run(capsys, "certify", "--group", "A:7", "--n", "6", "--json", "--no-timing")
    assert first == second


def test_help_exits_zero():
    assert main(["--help"]) == 0


def test_table_text_output(capsys):
    code, out, _ = run(capsys, "table", "--family", "PSL2", "--pmin", "7", "--pmax", "11",
                       "--mode", "paper-formula")
    assert code == 0
    assert "binding" in out and "168" in out


def test_rh_over_cap_exits_one(capsys):
    code, _, err = run(capsys, "rh", "--group", "PSL2:31", "--genus-max", "2")
    assert code == 1
    assert "cap" in err


def test_oracle_rh_undecided_exits_one(capsys):
    code, out, _ = run(capsys, "oracle", "rh", "--group", "C:6", "--genus-max", "1")
    assert code == 1


def test_environment_cap_must_be_positive(capsys, monkeypatch):
    monkeypatch.setenv("EDCERT_CAP", "0")
    code, _, err = run(capsys, "certify", "--group", "A:5", "--n", "2")
    assert code == 2
