"""The command-line interface: subcommands, config merging, exit codes."""

import json

import pytest

from ordalab.cli import main


def run(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse errors exit this way
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_no_arguments_is_a_usage_error(capsys):
    code, _, err = run(capsys, [])
    assert code == 2
    assert "usage:" in err


def test_list_structures(capsys):
    code, out, _ = run(capsys, ["list"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 11
    names = [line.split("\t")[0] for line in lines]
    assert names == sorted(names)
    assert names[2] == "Q"
    assert "flags=" in lines[0] and "aliases=" in lines[0]


def test_unknown_structure_is_a_value_error(capsys):
    code, _, err = run(capsys, ["check", "nope"])
    assert code == 2
    assert "unknown structure 'nope'" in err
    assert "Q(i)" in err and "trop" in err  # suggests the available names


def test_check_density_passes_and_pins(capsys):
    code, out, _ = run(capsys, ["check", "Q", "--suite", "density"])
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 13
    assert all(r["status"] == "pass" for r in records)
    assert records[0]["check_id"] == "density.between"
    assert records[0]["witness_values"] == ["2/5"]
    by_id = {r["check_id"]: r for r in records}
    assert by_id["density.split[1/1024]"]["witness_values"] == ["1/2560", "1/2560"]


def test_check_output_is_byte_stable(capsys):
    code1, out1, _ = run(capsys, ["check", "Q", "--suite", "density", "--seed", "9"])
    code2, out2, _ = run(capsys, ["check", "Q", "--suite", "density", "--seed", "9"])
    assert code1 == code2 == 0
    assert out1 == out2


def test_check_text_format(capsys):
    code, out, _ = run(
        capsys, ["check", "Q", "--suite", "density", "--format", "text"]
    )
    assert code == 0
    assert out.splitlines()[-1] == "checks: 13  pass: 13  violations: 0  unverifiable: 0"


def test_unverifiable_exits_three(capsys):
    code, out, _ = run(capsys, ["check", "Z", "--suite", "density"])
    assert code == 3
    records = [json.loads(line) for line in out.splitlines()]
    assert [(r["check_id"], r["status"]) for r in records] == [
        ("density.capability", "unverifiable")
    ]


def test_grid_flag_restricts_the_grid(capsys):
    code, out, _ = run(capsys, ["check", "Q", "--suite", "density", "--grid", "1/2,1/4"])
    assert code == 0
    ids = [json.loads(line)["check_id"] for line in out.splitlines()]
    assert ids == ["density.between", "density.split[1/2]", "density.split[1/4]"]


def test_series_condensation_passes(capsys):
    code, out, _ = run(
        capsys, ["series", "1/2^n", "--structure", "Q", "--test", "condensation"]
    )
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["check_id"] for r in records] == [
        "series.condensation.backward",
        "series.condensation.forward",
    ]
    assert records[1]["witness_values"][:2] == ["N(1/2)=3", "N(1/4)=3"]
    assert records[0]["witness_values"][:2] == ["N(1/2)=7", "N(1/4)=7"]


def test_series_zero_limit_violation_exits_one(capsys):
    code, out, _ = run(capsys, ["series", "n", "--structure", "Q", "--test", "zero-limit"])
    assert code == 1
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 1
    assert records[0]["status"] == "violation"
    assert records[0]["witness_values"][:2] == ["modulus.window", "1/2"]


def test_series_parse_error_exits_two(capsys):
    code, _, err = run(
        capsys, ["series", "1/+", "--structure", "Q", "--test", "zero-limit"]
    )
    assert code == 2
    assert "expected a value, got '+' (column 3)" in err


def test_series_value_error_exits_two(capsys):
    code, _, err = run(
        capsys, ["series", "1/n", "--structure", "Z", "--test", "geometric"]
    )
    assert code == 2
    assert "no inverse" in err


def test_series_capability_error_exits_three(capsys):
    code, _, err = run(
        capsys, ["series", "1/2^n", "--structure", "trop", "--test", "geometric"]
    )
    assert code == 3
    assert "unverifiable: trop lacks: ring" in err


def test_config_file_supplies_settings(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"structure": "Z", "suite": "metric", "seed": 2}))
    code, out, _ = run(capsys, ["check", "--config", str(cfg)])
    assert code == 0
    first = json.loads(out.splitlines()[0])
    assert first["structure"] == "Z" and first["suite"] == "metric"


def test_cli_flags_override_the_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"structure": "Z", "suite": "metric", "seed": 2}))
    code, out, _ = run(
        capsys, ["check", "Q", "--config", str(cfg), "--suite", "density"]
    )
    assert code == 0
    first = json.loads(out.splitlines()[0])
    assert first["structure"] == "Q" and first["suite"] == "density"


def test_unknown_config_keys_are_rejected(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"structure": "Q", "wat": 1}))
    code, _, err = run(capsys, ["check", "--config", str(cfg)])
    assert code == 2
    assert "unknown config keys: ['wat']" in err


def test_config_grid_is_honored(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"structure": "Q", "grid": ["1/2", "1/4"]}))
    code, out, _ = run(capsys, ["check", "--config", str(cfg), "--suite", "density"])
    assert code == 0
    assert len(out.splitlines()) == 3


def test_algebra_subcommand(capsys, tmp_path):
    table = tmp_path / "alg.json"
    table.write_text(
        json.dumps({"name": "mini-i", "n": 2, "gamma": [1, 0, 0, 1, 0, 1, -1, 0]})
    )
    code, out, _ = run(capsys, ["algebra", str(table)])
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [(r["check_id"], r["status"]) for r in records] == [
        ("albert.mini-i", "pass")
    ]


def test_algebra_rejects_a_malformed_table(capsys, tmp_path):
    table = tmp_path / "alg.json"
    table.write_text(json.dumps({"name": "bad", "n": 2, "gamma": [1]}))
    code, _, err = run(capsys, ["algebra", str(table)])
    assert code == 2
    assert "gamma must hold n^3" in err
