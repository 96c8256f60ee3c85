import json
import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from qtrig.cli import main, parse_angle, parse_interval

ARCH = {"points": [[0.0, 0.0], [1.0, 2.0], [2.0, 2.0], [3.0, 0.0]], "weights": [1, 1, 1, 1]}


def write_polygon(tmp_path, data=ARCH, name="poly.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def read_csv(path):
    lines = path.read_text().strip().split("\n")
    header = lines[0].split(",")
    data = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]])
    return header, data


def test_parse_angle_forms():
    assert parse_angle("pi/2") == math.pi / 2
    assert parse_angle("pi") == math.pi
    assert parse_angle("3pi/4") == 3 * math.pi / 4
    assert parse_angle("-pi/8") == -math.pi / 8
    assert parse_angle("2*pi/5") == 2 * math.pi / 5
    assert parse_angle("0.75") == 0.75
    assert parse_angle("+1.5") == 1.5
    for bad in ("", "pix", "pi*2", "x"):
        with pytest.raises(ValueError):
            parse_angle(bad)


def test_parse_interval():
    iv = parse_interval("pi/8,pi/4")
    assert iv.a == math.pi / 8 and iv.b == math.pi / 4
    with pytest.raises(ValueError):
        parse_interval("0")
    with pytest.raises(ValueError):
        parse_interval("0,1,2")


def test_basis_csv_matches_frozen_value(tmp_path):
    out = tmp_path / "basis.csv"
    code = main(["basis", "--degree", "3", "--q", "2", "--interval", "0,pi/2",
                 "--out", str(out)])
    assert code == 0
    header, data = read_csv(out)
    assert header == ["x", "B0", "B1", "B2", "B3"]
    assert data.shape == (129, 5)
    # 129 uniform samples on [0, pi/2] hit pi/4 exactly at index 64
    assert data[64, 0] == math.pi / 4
    assert abs(data[64, 2] - 0.6187184335382291) <= 1e-15
    assert abs(data[64, 1] - math.sqrt(2.0) / 4) <= 1e-15


def test_basis_json_schema(capsys):
    code = main(["basis", "--degree", "2", "--q", "1.5", "--interval", "0,pi/2",
                 "--format", "json", "--samples", "5"])
    assert code == 0
    records = json.loads(capsys.readouterr().out)
    assert len(records) == 5
    assert set(records[0]) == {"x", "values"}
    assert len(records[0]["values"]) == 3
    assert records[0]["values"] == [1.0, 0.0, 0.0]


def test_basis_svg_well_formed(tmp_path):
    out = tmp_path / "fig.svg"
    code = main(["basis", "--degree", "3", "--interval", "pi/8,pi/4",
                 "--q", "1.1", "--q", "1.2", "--q", "1.3",
                 "--format", "svg", "--out", str(out)])
    assert code == 0
    root = ET.fromstring(out.read_text())
    assert root.tag.endswith("svg")
    assert "viewBox" in root.attrib
    polylines = [el for el in root if el.tag.endswith("polyline")]
    assert len(polylines) == 12  # 3 q values x 4 basis functions


def test_multiple_q_rejected_for_tabular_output(tmp_path):
    code = main(["basis", "--degree", "3", "--q", "1", "--q", "2",
                 "--interval", "0,pi/2", "--out", str(tmp_path / "x.csv")])
    assert code == 1


def test_end_basis_columns_do_not_depend_on_q(tmp_path):
    outs = []
    for q in ("1.1", "1.3"):
        out = tmp_path / f"b{q}.csv"
        assert main(["basis", "--degree", "3", "--q", q, "--interval", "0,pi/2",
                     "--out", str(out)]) == 0
        outs.append(read_csv(out)[1])
    assert np.max(np.abs(outs[0][:, 1] - outs[1][:, 1])) <= 1e-12  # B0 = cos^3
    assert np.max(np.abs(outs[0][:, 4] - outs[1][:, 4])) <= 1e-12  # B3 = sin^3
    assert np.max(np.abs(outs[0][:, 2] - outs[1][:, 2])) > 1e-3    # B1 moves


def test_output_is_deterministic(tmp_path):
    args = ["basis", "--degree", "4", "--q", "1.7", "--interval", "pi/8,pi/4"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_curve_methods_give_identical_rounded_output(tmp_path):
    poly = write_polygon(tmp_path)
    outs = []
    for method in ("direct", "alg1"):
        out = tmp_path / f"{method}.csv"
        code = main(["curve", "--polygon", poly, "--q", "2", "--interval", "0,pi/2",
                     "--method", method, "--digits", "12", "--out", str(out)])
        assert code == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_curve_json_frozen_point(tmp_path, capsys):
    poly = write_polygon(tmp_path)
    code = main(["curve", "--polygon", poly, "--q", "2", "--interval", "0,pi/2",
                 "--format", "json"])
    assert code == 0
    records = json.loads(capsys.readouterr().out)
    rec = records[64]
    assert rec["x"] == math.pi / 4
    assert abs(rec["point"][0] - 2.9168154723945085) <= 1e-14
    assert abs(rec["point"][1] - 2.4748737341529163) <= 1e-14


def test_curve_svg_overlay_with_polygon(tmp_path):
    poly = write_polygon(tmp_path)
    out = tmp_path / "curves.svg"
    code = main(["curve", "--polygon", poly, "--q", "1", "--q", "2", "--q", "3",
                 "--interval", "0,pi/2", "--format", "svg", "--out", str(out)])
    assert code == 0
    root = ET.fromstring(out.read_text())
    polylines = [el for el in root if el.tag.endswith("polyline")]
    circles = [el for el in root if el.tag.endswith("circle")]
    assert len(polylines) == 4  # 3 curves + dashed control polygon
    assert len(circles) == 4    # control point markers


def test_rational_basis_mode_rows_sum_to_one(tmp_path):
    out = tmp_path / "rat.csv"
    code = main(["rational", "--basis", "--degree", "3", "--q", "2",
                 "--interval", "0,pi/2", "--out", str(out)])
    assert code == 0
    _, data = read_csv(out)
    sums = data[:, 1:].sum(axis=1)
    assert np.max(np.abs(sums - 1.0)) <= 1e-12
    assert abs(data[64, 2] - 7.0 / 22.0) <= 1e-15


def test_rational_curve_from_file_weights(tmp_path, capsys):
    poly = write_polygon(tmp_path)
    code = main(["rational", "--polygon", poly, "--q", "3", "--interval", "0,pi/2",
                 "--format", "json", "--samples", "129"])
    assert code == 0
    rec = json.loads(capsys.readouterr().out)[64]
    assert abs(rec["point"][0] - 1.5) <= 1e-14
    assert abs(rec["point"][1] - 13.0 / 11.0) <= 1e-14


def test_exit_code_invalid_interval(tmp_path):
    code = main(["basis", "--degree", "3", "--q", "1.5", "--interval", "0,pi",
                 "--out", str(tmp_path / "x.csv")])
    assert code == 2


def test_exit_code_singular_denominator(tmp_path):
    # (cos x - sin x)^2 denominator touches zero at pi/4; the pointwise
    # guard trips on the exact sample there
    data = {"points": [[0.0, 0.0], [1.0, 1.0], [2.0, 0.0]]}
    poly = write_polygon(tmp_path, data)
    code = main(["rational", "--polygon", poly, "--weights", "1,-1,1",
                 "--q", "1", "--interval", "0,pi/2",
                 "--out", str(tmp_path / "x.csv")])
    assert code == 3


def test_exit_code_usage_errors(tmp_path, capsys):
    assert main(["curve", "--polygon", str(tmp_path / "missing.json"),
                 "--q", "1", "--interval", "0,pi/2"]) == 1
    assert main(["basis", "--degree", "3", "--q", "1",
                 "--interval", "zero,pi/2"]) == 1
    assert main(["basis", "--q", "1", "--interval", "0,pi/2"]) == 1  # no degree
    assert main(["rational", "--q", "1", "--interval", "0,pi/2"]) == 1
    capsys.readouterr()


def test_exit_code_tp_violation(capsys):
    code = main(["check", "tp", "--degree", "2", "--q", "-0.5",
                 "--interval", "0,pi/2"])
    assert code == 4
    out = capsys.readouterr().out.strip().split("\n")
    assert out[0] == "tp: FAIL"
    payload = json.loads(out[-1])
    assert payload["pass"] is False
    assert payload["worst_scaled"] < 0


def test_check_tp_passes_on_quarter_interval(capsys):
    code = main(["check", "tp", "--degree", "3", "--q", "1.5",
                 "--interval", "pi/2,pi"])
    assert code == 0
    out = capsys.readouterr().out.strip().split("\n")
    assert out[0] == "tp: PASS"
    payload = json.loads(out[-1])
    assert payload["is_tp"] is True
    assert payload["minors_checked"] == 209
    assert payload["family"] == "quantum"


def test_check_tp_rational_family(capsys):
    code = main(["check", "tp", "--degree", "3", "--q", "2", "--weights", "1,2,0.5,1",
                 "--interval", "0,pi/2"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out.strip().split("\n")[-1])
    assert payload["family"] == "rational"
    assert payload["pass"] is True


def test_check_hull_vdp_signs(tmp_path, capsys):
    poly = write_polygon(tmp_path)
    assert main(["check", "hull", "--polygon", poly, "--q", "2",
                 "--interval", "0,pi/2"]) == 0
    payload = json.loads(capsys.readouterr().out.strip().split("\n")[-1])
    assert payload["violations"] == 0

    assert main(["check", "vdp", "--polygon", poly, "--q", "2",
                 "--interval", "0,pi/2", "--samples", "513"]) == 0
    payload = json.loads(capsys.readouterr().out.strip().split("\n")[-1])
    assert payload["violations"] == 0
    assert payload["lines"] == 50

    scalar = write_polygon(tmp_path, {"points": [[0.5], [-1.0], [1.0]]}, "scalar.json")
    assert main(["check", "signs", "--polygon", scalar, "--q", "1.5",
                 "--interval", "0,pi/2"]) == 0
    payload = json.loads(capsys.readouterr().out.strip().split("\n")[-1])
    assert payload["curve_sign_changes"] <= payload["control_sign_changes"]


def test_polygon_file_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"points": [[0, 0],\n [1, ]]}')
    assert main(["curve", "--polygon", str(bad), "--q", "1",
                 "--interval", "0,pi/2"]) == 1
    assert "line" in capsys.readouterr().err

    mismatched = write_polygon(
        tmp_path, {"points": [[0, 0], [1, 1]], "weights": [1, 2, 3]}, "w.json"
    )
    assert main(["curve", "--polygon", mismatched, "--q", "1",
                 "--interval", "0,pi/2"]) == 1
    capsys.readouterr()


def test_svg_requires_planar_polygon(tmp_path, capsys):
    scalar = write_polygon(tmp_path, {"points": [[0.5], [1.0]]}, "s.json")
    assert main(["curve", "--polygon", scalar, "--q", "1", "--interval", "0,pi/2",
                 "--format", "svg"]) == 1
    capsys.readouterr()
