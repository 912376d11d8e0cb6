import json

import pytest

from simpleslice.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_torus(capsys):
    code, out, _ = _run(capsys, "invariants", "--knot", "T(-2,5)", "--d", "3")
    rep = json.loads(out)
    assert code == 0
    assert [r["signature"] for r in rep["knot"]["levine_tristram"]] == [0, 4, 4]
    assert rep["knot"]["arf"] == 1 and rep["knot"]["h1_order"] == 1


def test_invariants_unknot(capsys):
    code, out, _ = _run(capsys, "invariants", "--knot", "unknot", "--d", "5")
    rep = json.loads(out)
    assert rep["knot"]["alexander_polynomial"] == "1"
    assert {r["signature"] for r in rep["knot"]["levine_tristram"]} == {0}
    assert rep["knot"]["h1_order"] == 1


def test_invariants_trefoil(capsys):
    code, out, _ = _run(capsys, "invariants", "--knot", "trefoil_right", "--d", "2")
    k = json.loads(out)["knot"]
    assert (k["determinant"], k["arf"], k["levine_tristram"][1]["signature"], k["h1_order"]) == (3, 1, -2, 3)


def test_invariants_singular_cell(capsys):
    code, out, _ = _run(capsys, "invariants", "--knot", "T(2,5)", "--d", "10", "--format", "table")
    assert code == 0 and "singular" in out and "infinite" in out


def test_inline_matrix(capsys):
    code, out, _ = _run(capsys, "invariants", "--knot", "[[-1,1],[0,-1]]", "--d", "2")
    assert code == 0 and json.loads(out)["query"]["knot"] == "inline"


def test_decide_exit_codes(capsys):
    code, out, _ = _run(capsys, "decide-simple", "--manifold", "CP2", "--class", "3", "--knot", "T(-2,5)")
    assert code == 0 and json.loads(out)["result"]["simple"]["answer"] == "Yes"
    code, out, _ = _run(capsys, "decide-stable", "--manifold", "CP2", "--class", "9", "--knot", "T(2,5)")
    assert code == 1 and json.loads(out)["result"]["stable"]["answer"] == "No"
    code, out, _ = _run(capsys, "decide-simple", "--manifold", "CP2", "--class", "2", "--knot", "trefoil_left")
    assert code == 2 and json.loads(out)["result"]["simple"]["answer"] == "Inconclusive"


def test_decide_stable_with_genus(capsys):
    code, out, _ = _run(capsys, "decide-stable", "--manifold", "CP2", "--class", "9", "--knot", "T(2,5)", "--genus", "1")
    assert code == 0


def test_sn(capsys):
    _, out, _ = _run(capsys, "sn", "--manifold", "CP2", "--class", "11", "--knot", "T(-2,5)")
    rep = json.loads(out)
    assert rep["result"]["sn"]["value"] == 27 and rep["max_bound"] == 55
    assert len(rep["sigma_j"]) == 11
    _, out, _ = _run(capsys, "sn", "--manifold", "CP2", "--class", "3", "--knot", "T(-2,5)")
    assert json.loads(out)["result"]["sn"]["value"] == 0
    _, out, _ = _run(capsys, "sn", "--manifold", "CP2", "--class", "7", "--knot", "T(2,5)", "--format", "table")
    assert "infinite" in out


def test_genus_bound(capsys):
    _, out, _ = _run(capsys, "genus-bound", "--manifold", '{"preset": "CP2"}', "--class", "11", "--knot", "T(-2,5)")
    assert json.loads(out)["result"]["genus_bound"] == {"scope": "AllSurfaces", "value": 27}


def test_manifold_json_sum(capsys):
    m = '{"sum": ["CP2", {"matrix": [[0,1],[1,0]], "ks": 0}]}'
    code, out, _ = _run(capsys, "decide-simple", "--manifold", m, "--class", "3,0,0", "--knot", "T(-2,5)")
    rep = json.loads(out)
    assert code == 0 and rep["manifold"] == {"b2": 3, "ks": 0, "signature": 1}


@pytest.mark.parametrize(
    "argv",
    [
        ["decide-simple", "--manifold", "CP2", "--class", "3", "--knot", "nope"],
        ["decide-simple", "--manifold", "{bad", "--class", "3", "--knot", "unknot"],
        ["decide-simple", "--manifold", "CP2", "--class", "3,1", "--knot", "unknot"],
        ["decide-simple", "--manifold", "CP2", "--class", "0", "--knot", "unknot"],
        ["decide-simple", "--manifold", "CP2", "--class", "3", "--knot", "unknot", "--d", "3"],
        ["sn", "--manifold", "CP2", "--class", "x", "--knot", "unknot"],
        ["invariants", "--knot", "[[1,1],[1,1]]"],
    ],
)
def test_errors_exit_3(capsys, argv):
    code, out, err = _run(capsys, *argv)
    assert code == 3 and out == "" and err.startswith("simpleslice: error:")


def test_usage_error_is_not_inconclusive(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["decide-simple", "--manifold", "CP2"])
    assert exc.value.code == 3


def test_max_bits_env(capsys, monkeypatch):
    monkeypatch.setenv("SLICE_ENGINE_MAX_BITS", "16")
    code, _, err = _run(capsys, "invariants", "--knot", "T(-2,5)", "--d", "3")
    assert code == 3 and "not certified" in err
    code, out, _ = _run(capsys, "invariants", "--knot", "T(-2,5)", "--d", "3", "--max-bits", "4096")
    assert code == 0 and json.loads(out)["precision_bits"] == 64


def _write_knots(tmp_path, records):
    p = tmp_path / "knots.json"
    p.write_text(json.dumps(records))
    return str(p)


def test_batch_order_and_count(capsys, tmp_path):
    f = _write_knots(tmp_path, [
        {"name": "a", "seifert_matrix": []},
        {"name": "b", "seifert_matrix": [[-1, 1], [0, -1]]},
        {"name": "c", "seifert_matrix": [[1, 0], [-1, 1]]},
    ])
    code, out, _ = _run(capsys, "batch", "--knots", f, "--manifold", "CP2",
                        "--class", "1", "--class", "2", "--class", "3", "--jobs", "3")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(lines) == 9
    assert [(r["query"]["knot"], r["query"]["class"]) for r in lines] == [
        (k, [x]) for k in "abc" for x in (1, 2, 3)
    ]
    assert set(lines[0]["result"]) == {"simple", "stable", "sn", "genus_bound"}


def test_batch_empty(capsys, tmp_path):
    f = _write_knots(tmp_path, [])
    code, out, _ = _run(capsys, "batch", "--knots", f, "--manifold", "CP2", "--class", "1")
    assert code == 0 and out == ""


def test_batch_isolates_bad_record(capsys, tmp_path):
    f = _write_knots(tmp_path, [
        {"name": "a", "seifert_matrix": []},
        {"name": "broken", "seifert_matrix": [[1, 1], [1, 1]]},
        {"name": "c", "seifert_matrix": [[1, 0], [-1, 1]]},
    ])
    code, out, _ = _run(capsys, "batch", "--knots", f, "--manifold", "CP2", "--class", "3")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(lines) == 3
    assert lines[1]["knot"] == "broken" and "error" in lines[1]
    assert lines[2]["query"]["knot"] == "c"


def test_big_integers_as_strings(capsys, tmp_path):
    f = _write_knots(tmp_path, [{"name": "s", "seifert_matrix": [["-1", "1"], ["0", "-1"]]}])
    code, out, _ = _run(capsys, "invariants", "--knots", f, "--knot", "s", "--d", "2")
    assert code == 0 and json.loads(out)["knot"]["determinant"] == 3


def test_exit_code_contract_over_corpus(capsys):
    from simpleslice.corpus import load_knot_table

    expected = {"Yes": 0, "No": 1, "Inconclusive": 2}
    for rec in load_knot_table():
        for manifold, cls in (("CP2", "1"), ("CP2", "2"), ("CP2", "3"), ("CP2bar", "2"), ("S2xS2", "2,0")):
            for cmd, key in (("decide-simple", "simple"), ("decide-stable", "stable")):
                code, out, _ = _run(capsys, cmd, "--manifold", manifold, "--class", cls, "--knot", rec.name)
                assert code == expected[json.loads(out)["result"][key]["answer"]], (rec.name, manifold, cls, cmd)
