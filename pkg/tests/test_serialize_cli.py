import json

import pytest

from kronrep.cli import main
from kronrep.linalg import ratio
from kronrep.rep import SubspaceMap, proj_p1
from kronrep.serialize import (load_rep, parse_subspace_literal, rep_from_json,
                               rep_to_json, save_rep, subspace_from_json,
                               subspace_to_json)


def test_rep_round_trip(tmp_path):
    rep = proj_p1(3)
    path = tmp_path / "p1.json"
    save_rep(path, rep)
    back = load_rep(path)
    assert back == rep


def test_rep_rejects_unknown_and_misordered_fields():
    good = rep_to_json(proj_p1(2))
    bad = dict(good)
    bad["extra"] = 1
    with pytest.raises(ValueError):
        rep_from_json(bad)
    reordered = {"dim": good["dim"], "r": good["r"], "maps": good["maps"]}
    with pytest.raises(ValueError):
        rep_from_json(reordered)
    with pytest.raises(ValueError):
        rep_from_json({"r": 2, "dim": [1, 2]})
    wrong_shape = {"r": 2, "dim": [1, 2], "maps": [[["1"]], [["0"], ["1"]]]}
    with pytest.raises(ValueError):
        rep_from_json(wrong_shape)


def test_rational_entries():
    doc = {"r": 1, "dim": [1, 1], "maps": [[["3/2"]]]}
    rep = rep_from_json(doc)
    assert rep.maps[0].data[0][0] == ratio(3, 2)
    assert rep_to_json(rep)["maps"][0][0][0] == "3/2"


def test_subspace_round_trip():
    v = SubspaceMap.from_columns(3, [[1, 0, 2], [0, 1, 1]])
    doc = subspace_to_json(v)
    back = subspace_from_json(doc)
    assert back.image_key() == v.image_key()
    with pytest.raises(ValueError):
        subspace_from_json({"cols": doc["cols"], "d": 2, "junk": 0})


def test_subspace_literal():
    v = parse_subspace_literal("1,0,0;0,1/2,1", 3)
    assert v.d == 2 and v.cols.data[1][1] == ratio(1, 2)
    with pytest.raises(ValueError):
        parse_subspace_literal("1,0;0,1", 3)


def run_cli(args):
    return main(args)


def test_cli_split_and_exit_codes(tmp_path):
    rep_path = tmp_path / "p1r3.json"
    save_rep(rep_path, proj_p1(3))
    out = tmp_path / "split.json"
    code = run_cli(["split", "--rep", str(rep_path),
                    "--line", "1,0,0;0,1,0", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["splitting"]["b"] == {"0": 1, "1": 1}
    assert doc["invocation"]["command"] == "split"


def test_cli_reports_are_reproducible(tmp_path):
    rep_path = tmp_path / "p1r3.json"
    save_rep(rep_path, proj_p1(3))
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for target in (a, b):
        assert run_cli(["decompose", "--rep", str(rep_path), "--lines", "4",
                        "--seed", "11", "--out", str(target)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_cli_construct_chen_exit_2_on_refuted(tmp_path):
    out = tmp_path / "chen.json"
    code = run_cli(["construct", "chen", "--m", "2", "--n", "3",
                    "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["dim"] == [2, 3]
    # the q=2, s=1 case carries an honestly refuted brick verdict
    out2 = tmp_path / "chen25.json"
    code = run_cli(["construct", "chen", "--m", "2", "--n", "5",
                    "--out", str(out2)])
    assert code == 2
    doc = json.loads(out2.read_text())
    assert any(v["claim"] == "brick" and v["status"] == "refuted"
               for v in doc["construction"]["verified"]["verdicts"])


def test_cli_csv_and_fig(tmp_path):
    rep_path = tmp_path / "p1r3.json"
    save_rep(rep_path, proj_p1(3))
    csv = tmp_path / "sweep.csv"
    fig = tmp_path / "sweep.png"
    out = tmp_path / "dec.json"
    assert run_cli(["decompose", "--rep", str(rep_path), "--lines", "4",
                    "--csv", str(csv), "--fig", str(fig),
                    "--out", str(out)]) == 0
    lines = csv.read_text().strip().splitlines()
    assert lines[0].startswith("line,b_0")
    assert len(lines) == 1 + 3 + 4
    assert fig.stat().st_size > 0


def test_cli_jump_and_oracle(tmp_path):
    rep_path = tmp_path / "p1r3.json"
    save_rep(rep_path, proj_p1(3))
    out = tmp_path / "jump.json"
    assert run_cli(["jump", "--rep", str(rep_path), "--line", "1,0,0;0,1,0",
                    "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["in_rank_variety"] is False
    orc = tmp_path / "orc.json"
    assert run_cli(["oracle", "--rep", str(rep_path), "--p", "2",
                    "--e", "0,1", "--out", str(orc)]) == 0
    doc = json.loads(orc.read_text())
    assert doc["exists"] is True


def test_cli_adjoint_check(tmp_path):
    out = tmp_path / "adj.json"
    assert run_cli(["adjoint-check", "--d", "2", "--r", "3", "--seed", "5",
                    "--trials", "5", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["passed"] == 5 and doc["failures"] == []


def test_cli_usage_error():
    with pytest.raises(SystemExit):
        main(["definitely-not-a-command"])


def test_cli_parse_error_is_exit_1(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"r": 2, "dim": [1, 1], "maps": "nope"}')
    assert run_cli(["inspect", "--rep", str(bad)]) == 1
