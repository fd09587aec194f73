"""CLI: subcommand behaviour, exit codes, determinism, schema validation."""

import json
from importlib import resources

import jsonschema
import pytest

from hessenpave.cli import main


@pytest.fixture(scope="module")
def schema():
    path = resources.files("hessenpave").joinpath(
        "schemas/cli-output.schema.json")
    return json.loads(path.read_text(encoding="utf-8"))


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def validate(schema, name, document):
    jsonschema.validate(
        document,
        {"$ref": f"#/$defs/{name}", "$defs": schema["$defs"]},
    )


def test_paving_json_example(capsys, schema):
    code, out, _ = run_cli(capsys, "paving", "--type", "A", "--rank", "2",
                           "--hess-fn", "2,3,3", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["betti"] == [1, 2, 1]
    validate(schema, "paving", record)


def test_paving_type_d_schema(capsys, schema):
    code, out, _ = run_cli(capsys, "paving", "--type", "D", "--rank", "4",
                           "--hess-neg", "0,0,-1,0;0,0,0,-1")
    assert code == 0
    record = json.loads(out)
    validate(schema, "paving", record)
    profiles = [c["row_profile"] for c in record["cells"] if c["nonempty"]]
    assert all(len(p) == 4 for p in profiles)


def test_betti_full_flag_variety(capsys, schema):
    code, out, _ = run_cli(capsys, "betti", "--type", "A", "--rank", "2",
                           "--hess", "full")
    assert code == 0
    record = json.loads(out)
    assert record["betti"] == [1, 2, 2, 1]
    validate(schema, "betti", record)


def test_count_points_example(capsys, schema):
    code, out, _ = run_cli(capsys, "count-points", "--n", "3", "--q", "2",
                           "--hess-fn", "2,3,3")
    assert code == 0
    record = json.loads(out)
    assert record["total"] == 9
    validate(schema, "countPoints", record)


def test_enumerate_hess(capsys, schema):
    code, out, _ = run_cli(capsys, "enumerate-hess", "--type", "B",
                           "--rank", "2")
    assert code == 0
    record = json.loads(out)
    assert record["count"] == 6
    validate(schema, "enumerateHess", record)


def test_witness_json(capsys, schema):
    code, out, _ = run_cli(capsys, "witness", "--type", "C", "--rank", "2",
                           "--hess", "full", "--word", "1 2 1 2")
    assert code == 0
    record = json.loads(out)
    assert record["verified"] is True
    assert record["stage_kernel_dims"] == [3, 1]
    validate(schema, "witness", record)


def test_verify_lemmata_json(capsys, schema):
    code, out, _ = run_cli(capsys, "verify-lemmata", "--type", "A",
                           "--rank", "2", "--trials", "5", "--seed", "9")
    assert code == 0
    record = json.loads(out)
    assert all(c["status"] == "pass" for c in record["checks"])
    assert record["seed"] == 9 and record["trials"] == 5
    validate(schema, "verifyLemmata", record)


def test_sweep_json(capsys, schema):
    code, out, _ = run_cli(capsys, "sweep", "--type", "A", "--rank", "2")
    assert code == 0
    record = json.loads(out)
    assert record["hessenberg_count"] == 5
    validate(schema, "sweep", record)
    assert [p["betti"] for p in record["pavings"]] == [
        [1], [1, 1], [1, 1], [1, 2, 1], [1, 2, 2, 1]]


def test_env_seed_overrides_flag(capsys, monkeypatch):
    monkeypatch.setenv("HESSENPAVE_SEED", "321")
    code, out, _ = run_cli(capsys, "verify-lemmata", "--type", "A",
                           "--rank", "2", "--trials", "3", "--seed", "1")
    assert code == 0
    assert json.loads(out)["seed"] == 321
    monkeypatch.setenv("HESSENPAVE_SEED", "oops")
    code, _, err = run_cli(capsys, "verify-lemmata", "--type", "A",
                           "--rank", "2")
    assert code == 1 and "HESSENPAVE_SEED" in err


def test_determinism_byte_identical(tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    for out in (out1, out2):
        assert main(["sweep", "--type", "B", "--rank", "2",
                     "--output", str(out)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_csv_and_table_formats(capsys):
    code, out, _ = run_cli(capsys, "paving", "--type", "A", "--rank", "2",
                           "--hess-fn", "2,2,3", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "type,rank,hessenberg,word,length,nonempty,dim,row_profile"
    assert len(lines) == 7
    import csv
    import io
    parsed = list(csv.reader(io.StringIO(out)))
    assert parsed[1][2] == "neg=-1,0"

    code, out, _ = run_cli(capsys, "betti", "--type", "B", "--rank", "2",
                           "--hess", "borel", "--format", "table")
    assert code == 0
    assert "betti" in out.splitlines()[0]


def test_usage_and_validation_errors(capsys):
    code, _, err = run_cli(capsys, "paving", "--type", "A", "--rank", "2",
                           "--hess-fn", "2,3,3", "--bogus")
    assert code == 1
    code, _, err = run_cli(capsys, "paving", "--type", "E", "--rank", "2",
                           "--hess", "full")
    assert code == 1
    code, _, err = run_cli(capsys, "paving", "--type", "B", "--rank", "1",
                           "--hess", "full")
    assert code == 1 and "rank" in err
    code, _, err = run_cli(capsys, "paving", "--type", "A", "--rank", "2",
                           "--hess-fn", "3,2,3")
    assert code == 1
    code, _, err = run_cli(capsys, "witness", "--type", "A", "--rank", "2",
                           "--hess", "borel", "--word", "1")
    assert code == 1 and "empty" in err
    code, _, err = run_cli(capsys, "paving", "--type", "A", "--rank", "2",
                           "--hess-neg", "-1;-2")
    assert code == 1


def test_hess_flags_mutually_exclusive(capsys):
    code, _, _ = run_cli(capsys, "paving", "--type", "A", "--rank", "2",
                         "--hess-fn", "2,3,3", "--hess", "full")
    assert code == 1
