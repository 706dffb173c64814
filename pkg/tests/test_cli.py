"""CLI behavior: JSON reports, set files, determinism, exit codes."""

import json

import pytest

from growthlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    assert code == 0, out
    return json.loads(out)


def test_field_command(capsys):
    payload = run_json(capsys, "field", "--field", "sqrt2")
    assert payload["degree"] == 2 and payload["disc"] == 8
    assert payload["coeffs"] == [-2, 0, 1]
    lo, hi = payload["rootIntervals"][1]
    assert eval_fraction(lo) <= 1.4143 and eval_fraction(hi) >= 1.414


def eval_fraction(text):
    if "/" in str(text):
        num, den = str(text).split("/")
        return int(num) / int(den)
    return float(text)


def test_box_commands(capsys):
    payload = run_json(capsys, "box", "--field", "sqrt2", "--kind", "additive", "--radius", "2")
    assert payload["count"] == 7 and payload["lowerOk"] and payload["upperOk"]
    payload = run_json(capsys, "box", "--field", "sqrt2", "--kind", "unit", "--radius", "1",
                       "--elements")
    assert payload["count"] == 6
    assert [1, 1] in payload["elements"]
    assert payload["separation"] == {"checked": 6, "trivial": 2,
                                     "witnessed": 4, "violations": 0}


def test_field_from_json_file(capsys, tmp_path):
    spec = tmp_path / "field.json"
    spec.write_text('{"name": "sqrt5", "coeffs": [-5, 0, 1]}')
    payload = run_json(capsys, "field", "--field", str(spec))
    assert payload["degree"] == 2 and payload["disc"] == 20


def test_slab_command(capsys):
    payload = run_json(capsys, "slab", "--d", "3")
    assert payload["density0"] == "3/4" and payload["rationalPart"] == "3"
    payload = run_json(capsys, "slab", "--d", "2", "--r", "1/2")
    assert payload["rationalPart"] == "1"


def test_box_rational_radius(capsys):
    payload = run_json(capsys, "box", "--field", "sqrt2", "--kind", "additive",
                       "--radius", "1/2", "--elements")
    assert payload["count"] == 1 and payload["elements"] == [[0, 0]]


def test_construct_command(capsys):
    payload = run_json(capsys, "construct", "--field", "sqrt2",
                       "--X", "10", "--r", "3", "--Y", "1")
    assert payload["sizes"] == {"G": 6, "P": 15, "A": 90}
    assert payload["directProduct"] is True
    assert payload["envelopes"]["sumEnvelopeOk"] is True


def test_construct_mult_only(capsys):
    payload = run_json(capsys, "construct", "--field", "golden", "--Y", "1",
                       "--mult-only", "--k", "3")
    assert payload["sizes"] == {"A": 10}
    assert payload["envelopes"]["productEnvelopeOk"] is True


def test_dump_report_and_plot_data(capsys, tmp_path):
    dump = tmp_path / "a.json"
    run_json(capsys, "construct", "--field", "sqrt2", "--X", "10", "--r", "3", "--Y", "1",
             "--dump", str(dump))
    payload = run_json(capsys, "report", "--input", str(dump))
    assert payload["n"] == 90

    plot = tmp_path / "plot.csv"
    run_json(capsys, "report", "--input", str(dump), "--emit-plot-data",
             "--plot-file", str(plot))
    run_json(capsys, "report", "--input", str(dump), "--emit-plot-data",
             "--plot-file", str(plot), "--set-id", "again")
    lines = plot.read_text().strip().splitlines()
    assert lines[0] == "setId,n,sumSize,prodSize,deltaPlus,deltaTimes,solymosi"
    assert len(lines) == 3 and lines[2].startswith("again,90,")


def test_residue_command(capsys, tmp_path):
    dump = tmp_path / "units.json"
    run_json(capsys, "construct", "--field", "sqrt2", "--Y", "1", "--mult-only",
             "--dump", str(dump))
    payload = run_json(capsys, "residue", "--field", "sqrt2", "--set", str(dump),
                       "--pmin", "3")
    assert payload["p"] == 7 and payload["roots"] == [3, 4]
    assert payload["injective"] is True and payload["imageSize"] == 6
    assert payload["fpReport"]["sumSize"] == 7  # the image is all of F_7^x


def test_ff_command(capsys, tmp_path):
    payload = run_json(capsys, "ff", "--q", "2", "--dP", "2", "--dG", "1")
    assert payload["sizes"] == {"P": 1, "G": 3, "A": 3}
    assert payload["identities"]["pgIdentity"] is True
    dump = tmp_path / "a.csv"
    run_json(capsys, "ff", "--q", "2", "--dP", "2", "--dG", "1", "--dump", str(dump))
    rows = dump.read_text().strip().splitlines()
    assert len(rows) == 3


def test_bounds_commands(capsys):
    payload = run_json(capsys, "bounds", "coeffs")
    assert abs(payload["K1b"] - 50424.3) < 1.0
    payload = run_json(capsys, "bounds", "optimize")
    assert 8.3e-7 <= payload["cStar"] <= 9.1e-7
    payload = run_json(capsys, "bounds", "ff", "--q", "1024", "--alpha", "33.01",
                       "--beta", "40.53")
    assert payload["aRHS"] <= 1.908
    code, out = run_cli(capsys, "bounds", "table", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "q,alpha,beta,a,b" and len(lines) == 5


def test_linrel_command(capsys):
    payload = run_json(capsys, "linrel", "--field", "golden", "--Y", "1", "--k", "2")
    assert payload["count"] == 6 and payload["unitBoxSize"] == 10
    payload = run_json(capsys, "linrel", "--field", "golden", "--Y", "1", "--k", "2",
                       "--positive")
    assert payload["count"] == 2


def test_byte_determinism(capsys, tmp_path):
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    for out in (out1, out2):
        code, _ = run_cli(capsys, "--out", str(out), "construct", "--field", "sqrt2",
                          "--X", "10", "--r", "3", "--Y", "1")
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_module_error_exit_code(capsys):
    code, out = run_cli(capsys, "construct", "--field", "sqrt2", "--X", "3",
                        "--r", "5", "--Y", "1")
    assert code == 1
    payload = json.loads(out)
    assert payload["error"]["type"] == "RadiusTooLarge"


def test_config_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["box", "--field", "sqrt2", "--kind", "additive", "--radius", "x"])
    assert exc.value.code == 2
