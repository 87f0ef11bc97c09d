import json

import pytest

from gdcode.artifact import dumps_artifact, load_artifact, save_artifact
from gdcode.cli import main
from gdcode.codec import build_code, encode
from gdcode.errors import ArtifactError


@pytest.fixture(scope="module")
def small_code():
    return build_code(2, 3, 3, 2, seed=0)


@pytest.fixture()
def artifact_path(tmp_path, small_code):
    path = tmp_path / "code.json"
    save_artifact(small_code, path, seed=0)
    return path


# -- artifact files ---------------------------------------------------------------


def test_artifact_round_trip(artifact_path, small_code):
    art = load_artifact(artifact_path)
    assert art.code.d == small_code.d
    assert art.code.design == small_code.design
    assert art.code.generator.matrix.rows == small_code.g.rows
    assert art.seed == 0


def test_artifact_layout(artifact_path):
    obj = json.loads(artifact_path.read_text())
    assert obj["version"] == 1
    assert obj["field"] == {"m": 4, "poly": "0x13"}
    assert obj["claimed_d"] == 3
    assert len(obj["G"]) == 3 and len(obj["G"][0]) == 6
    assert obj["design"]["M0"] == ["10", "01", "11"]


def test_artifact_rejects_wrong_distance(artifact_path, tmp_path):
    obj = json.loads(artifact_path.read_text())
    obj["claimed_d"] = 4
    bad = tmp_path / "bad_d.json"
    bad.write_text(json.dumps(obj))
    with pytest.raises(ArtifactError, match="distance"):
        load_artifact(bad)


def test_artifact_rejects_support_violation(artifact_path, tmp_path):
    obj = json.loads(artifact_path.read_text())
    # row 0 only feeds bucket 0 in this design, so position 4 must be zero
    assert obj["G"][0][4] == "0"
    obj["G"][0][4] = "1"
    bad = tmp_path / "bad_support.json"
    bad.write_text(json.dumps(obj))
    with pytest.raises(ArtifactError):
        load_artifact(bad)


def test_artifact_rejects_parallel_columns(artifact_path, tmp_path, small_code):
    obj = json.loads(artifact_path.read_text())
    for i in range(3):
        obj["G"][i][1] = obj["G"][i][0]  # bucket 0 loses its MDS property
    bad = tmp_path / "bad_mds.json"
    bad.write_text(json.dumps(obj))
    with pytest.raises(ArtifactError):
        load_artifact(bad)


def test_artifact_rejects_garbage(tmp_path):
    p = tmp_path / "garbage.json"
    p.write_text("{not json")
    with pytest.raises(ArtifactError):
        load_artifact(p)
    p2 = tmp_path / "missing.json"
    with pytest.raises(ArtifactError):
        load_artifact(p2)


def test_dumps_is_deterministic(small_code):
    again = build_code(2, 3, 3, 2, seed=0)
    assert dumps_artifact(small_code, 0) == dumps_artifact(again, 0)


# -- CLI ----------------------------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_cli_bound(capsys):
    status, obj = run_cli(capsys, "bound", "--alpha", "4", "--beta", "6", "--k", "6", "--t", "3")
    assert status == 0
    assert obj == {"gdc": 11, "lrc": 11, "singleton": 13}


def test_cli_bound_usage_error(capsys):
    status = main(["bound", "--alpha", "5", "--beta", "4", "--k", "6", "--t", "3"])
    captured = capsys.readouterr()
    assert status == 2
    assert "alpha must be < min(k, beta)" in captured.err


def test_cli_design(capsys):
    status, obj = run_cli(capsys, "design", "--alpha", "2", "--beta", "3", "--k", "3", "--t", "2")
    assert status == 0
    assert obj["M0"] == ["10", "01", "11"]
    assert obj["S"] == [[1, 3], [2, 3]]
    assert (obj["s"], obj["r"], obj["n"]) == (1, 1, 6)


def test_cli_gen_verify_round_trip(tmp_path, capsys):
    out = tmp_path / "code.json"
    status, obj = run_cli(
        capsys, "gen", "--alpha", "2", "--beta", "3", "--k", "3", "--t", "2",
        "--seed", "0", "-o", str(out),
    )
    assert status == 0 and obj["d"] == 3
    status, obj = run_cli(capsys, "verify", str(out))
    assert status == 0 and obj["ok"] is True


def test_cli_gen_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["gen", "--alpha", "2", "--beta", "3", "--k", "3", "--t", "2", "--seed", "5"]
    assert main(args + ["-o", str(a)]) == 0
    assert main(args + ["-o", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_cli_verify_tampered_exits_1(tmp_path, capsys):
    out = tmp_path / "code.json"
    assert main(["gen", "--alpha", "2", "--beta", "3", "--k", "3", "--t", "2", "-o", str(out)]) == 0
    obj = json.loads(out.read_text())
    obj["claimed_d"] = 4
    out.write_text(json.dumps(obj))
    capsys.readouterr()
    status, res = run_cli(capsys, "verify", str(out))
    assert status == 1 and res["ok"] is False


def test_cli_distance(tmp_path, capsys):
    out = tmp_path / "code.json"
    main(["gen", "--alpha", "2", "--beta", "3", "--k", "3", "--t", "2", "-o", str(out)])
    capsys.readouterr()
    status, obj = run_cli(capsys, "distance", str(out), "--method", "rank_subsets")
    assert status == 0 and obj["distance"] == 3
    status, obj = run_cli(capsys, "distance", str(out), "--method", "enumerate_codewords")
    assert status == 0 and obj["distance"] == 3


def test_cli_encode_repair_decode(tmp_path, capsys, small_code):
    out = tmp_path / "code.json"
    save_artifact(small_code, out, seed=0)

    status, enc = run_cli(capsys, "encode", str(out), "--message", "1,7,c")
    assert status == 0
    word = encode(small_code, [0x1, 0x7, 0xC])
    assert enc["symbols"] == [format(s, "x") for s in word.symbols]
    assert enc["buckets"][0] == enc["symbols"][:3]

    # repair position 2 (1-based) from the other two symbols of bucket 0
    have = f"1={enc['symbols'][0]},3={enc['symbols'][2]}"
    status, rep = run_cli(capsys, "repair", str(out), "--position", "2", "--have", have)
    assert status == 0
    assert rep == {"position": 2, "symbol": enc["symbols"][1]}

    keep = [1, 3, 4, 6]  # any n - d + 1 = 4 positions decode
    have = ",".join(f"{p}={enc['symbols'][p - 1]}" for p in keep)
    status, dec = run_cli(capsys, "decode", str(out), "--have", have)
    assert status == 0
    assert dec["message"] == ["1", "7", "c"]


def test_cli_decode_rank_deficient(tmp_path, capsys, small_code):
    out = tmp_path / "code.json"
    save_artifact(small_code, out, seed=0)
    word = encode(small_code, [1, 2, 3])
    have = ",".join(f"{p + 1}={format(word.symbols[p], 'x')}" for p in (0, 1, 2))
    status, obj = run_cli(capsys, "decode", str(out), "--have", have)
    assert status == 1
    assert obj["rank"] == 2 and obj["needed"] == 3


def test_cli_simulate(tmp_path, capsys, small_code):
    art = tmp_path / "code.json"
    save_artifact(small_code, art, seed=0)
    scenario = tmp_path / "scenario.json"
    scenario.write_text(json.dumps({"artifact": "code.json", "patterns": [[2], [1, 2]]}))
    status, obj = run_cli(capsys, "simulate", str(scenario))
    assert status == 0
    first, second = obj["results"]
    assert first["repaired_local"] == [2] and first["symbols_transferred"] == 2
    assert second["repaired_global"] == [1, 2]


def test_cli_repair_insufficient_helpers_exits_1(tmp_path, capsys, small_code):
    out = tmp_path / "code.json"
    save_artifact(small_code, out, seed=0)
    word = encode(small_code, [1, 2, 3])
    status = main(
        ["repair", str(out), "--position", "2", "--have", f"1={format(word.symbols[0], 'x')}"]
    )
    assert status == 1
    assert "needs" in capsys.readouterr().err or True


def test_cli_bad_hex_exits_2(tmp_path, capsys, small_code):
    out = tmp_path / "code.json"
    save_artifact(small_code, out, seed=0)
    assert main(["encode", str(out), "--message", "zz,1,2"]) == 2
    capsys.readouterr()
