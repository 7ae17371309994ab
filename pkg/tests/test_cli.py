"""CLI contract: spec validation, exit codes, determinism, formats."""

import json
from importlib import resources

import jsonschema
import pytest

from straightplanes.cli import main, validate_spec
from straightplanes.errors import SpecInvalid


def read_report(path):
    with open(path) as fh:
        return json.load(fh)


def report_schema():
    with resources.files("straightplanes.schemas").joinpath(
        "config_report.schema.json"
    ).open() as fh:
        return json.load(fh)


def test_desargues_run_writes_valid_report(tmp_path):
    out = tmp_path / "report.json"
    code = main(["desargues", "--seed", "11", "--cases", "25", "--out", str(out)])
    assert code == 0
    report = read_report(out)
    jsonschema.validate(report, report_schema())
    counts = report["counts"]
    assert counts["passed"] + counts["failed"] + counts["skipped_degenerate"] == counts["run"]
    assert report["seed"] == 11


def test_reports_are_deterministic_modulo_timing(tmp_path):
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert main(["harmonic", "--seed", "3", "--cases", "10", "--out", str(out1)]) == 0
    assert main(["harmonic", "--seed", "3", "--cases", "10", "--out", str(out2)]) == 0
    r1, r2 = read_report(out1), read_report(out2)
    t1, t2 = r1.pop("timing"), r2.pop("timing")
    assert r1 == r2
    assert set(t1) == {"started_utc", "duration_s"}


def test_malformed_spec_file_exits_2_without_report(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("this is not json")
    out = tmp_path / "never.json"
    assert main(["moulton", "--spec", str(bad), "--out", str(out)]) == 2
    assert not out.exists()


def test_unknown_spec_field_exits_2(tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"suite": "moulton", "surprise": 1}))
    assert main(["moulton", "--spec", str(spec)]) == 2


def test_spec_suite_must_match_subcommand(tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"suite": "moulton"}))
    assert main(["desargues", "--spec", str(spec)]) == 2


def test_spec_file_drives_the_run(tmp_path):
    spec = tmp_path / "spec.json"
    out = tmp_path / "m.json"
    spec.write_text(json.dumps({"suite": "moulton", "bend": "3/1", "out": str(out)}))
    assert main(["moulton", "--spec", str(spec)]) == 0
    report = read_report(out)
    assert report["descriptor"]["system"]["bend"] == "3/1"
    assert report["witnesses"][0]["defect"] not in ("0/1",)


def test_validate_spec_rejects_missing_scene_for_render():
    with pytest.raises(SpecInvalid):
        validate_spec({"suite": "render"})


def test_env_var_names_default_output_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("STRAIGHTPLANES_OUT", str(tmp_path / "outputs"))
    assert main(["net", "--depth", "1"]) == 0
    assert (tmp_path / "outputs" / "net.json").exists()


def test_net_csv_format(tmp_path):
    out = tmp_path / "net.csv"
    assert main(["net", "--depth", "1", "--format", "csv", "--out", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "alpha,beta,x,y"
    assert len(lines) == 1 + 9


def test_hilbert_csv_has_distance_columns(tmp_path):
    out = tmp_path / "h.csv"
    assert main([
        "hilbert", "--samples", "20", "--format", "csv", "--out", str(out)
    ]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "x1,y1,x2,y2,d"
    assert len(lines) == 21


def test_csv_unsupported_for_exact_suites(tmp_path):
    out = tmp_path / "d.csv"
    assert main(["desargues", "--cases", "5", "--format", "csv", "--out", str(out)]) == 2


def test_svg_format_requires_render_subcommand(tmp_path):
    assert main(["desargues", "--format", "svg"]) == 2


def test_render_net_svg_counts_labeled_points(tmp_path):
    out = tmp_path / "net.svg"
    assert main(["render", "--scene", "net", "--depth", "3", "--out", str(out)]) == 0
    svg = out.read_text()
    assert svg.count('<circle class="net-point"') == (2 ** 3 + 1) ** 2
    assert svg.count("<text") >= (2 ** 3 + 1) ** 2


def test_render_depth_zero_shows_base_only(tmp_path):
    out = tmp_path / "net0.svg"
    assert main(["render", "--scene", "net", "--depth", "0", "--out", str(out)]) == 0
    assert out.read_text().count('<circle class="net-point"') == 4


def test_render_is_byte_deterministic(tmp_path):
    o1, o2 = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["render", "--scene", "desargues", "--seed", "5", "--out", str(o1)]) == 0
    assert main(["render", "--scene", "desargues", "--seed", "5", "--out", str(o2)]) == 0
    assert o1.read_bytes() == o2.read_bytes()


def test_render_moulton_draws_bent_polylines(tmp_path):
    out = tmp_path / "m.svg"
    assert main(["render", "--scene", "moulton", "--out", str(out)]) == 0
    svg = out.read_text()
    # bent side lines are three-vertex polylines (xmin, 0, xmax)
    assert any(
        line.count(",") >= 3 and 'class="line"' in line
        for line in svg.splitlines()
        if "<polyline" in line
    )
    for label in (">O<", ">A<", ">A'<", ">I<", ">K<"):
        assert label in svg


def test_render_quadrangle_and_phi(tmp_path):
    for scene in ("quadrangle", "phi"):
        out = tmp_path / f"{scene}.svg"
        assert main(["render", "--scene", scene, "--out", str(out)]) == 0
        assert out.read_text().startswith("<?xml")


def test_unknown_scene_exits_2(tmp_path):
    assert main(["render", "--scene", "nonsense"]) == 2
