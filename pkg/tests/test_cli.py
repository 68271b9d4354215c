import json

import pytest

from origami_lab import cli
from origami_lab.origami import load_origami

from conftest import fixture_path


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv + ["--json"])
    assert code == 0, err
    return json.loads(out)


def test_info_text(capsys):
    code, out, err = run(capsys, ["info", fixture_path("l3")])
    assert code == 0
    assert "genus = 2" in out
    assert "stratum = H(2)" in out


def test_info_json(capsys):
    payload = run_json(capsys, ["info", fixture_path("dema")])
    assert payload["degree"] == 8
    assert payload["genus"] == 3
    assert payload["stratum"] == "H(2,2)"
    assert payload["reduced"] is True


def test_orbit(capsys):
    payload = run_json(capsys, ["orbit", fixture_path("dema")])
    assert len(payload["nodes"]) == 3


def test_veech(capsys):
    payload = run_json(capsys, ["veech", fixture_path("l3")])
    assert payload["index"] == 3
    assert payload["generators"]


def test_spin(capsys):
    payload = run_json(capsys, ["spin", fixture_path("mstar")])
    assert payload["spin_parity"] == 1


def test_spin_odd_stratum_is_domain_error(capsys):
    code, out, err = run(capsys, ["spin", fixture_path("ew")])
    assert code == 1
    assert "error:" in err


def test_component(capsys):
    payload = run_json(capsys, ["component", fixture_path("dema")])
    assert payload["stratum"] == "H(2,2)"
    assert payload["component"]


def test_kz_zero_charpoly(capsys):
    payload = run_json(capsys, ["kz", fixture_path("dema"), "T8SSTTSS", "--zero"])
    assert payload["charpoly"] == [1, -2, -30, -2, 1]
    assert payload["subspace"] == "H1_zero"


def test_kz_rejects_non_loop(capsys):
    code, out, err = run(capsys, ["kz", fixture_path("dema"), "T"])
    assert code == 1


def test_galois_sp4(capsys, tmp_path):
    f = tmp_path / "m.json"
    f.write_text(json.dumps([[0, 0, 0, -1], [1, 0, 0, 2], [0, 1, 0, 30], [0, 0, 1, 2]]))
    payload = run_json(capsys, ["galois", str(f)])
    assert payload["pinching"] is True


def test_galois_sl2(capsys, tmp_path):
    f = tmp_path / "m.json"
    f.write_text(json.dumps([[2, 1], [1, 1]]))
    payload = run_json(capsys, ["galois", str(f)])
    assert payload["pinching"] is True


def test_galois_bad_json(capsys, tmp_path):
    f = tmp_path / "m.json"
    f.write_text("{not json")
    code, out, err = run(capsys, ["galois", str(f)])
    assert code == 1


def test_simplicity_and_verify(capsys, tmp_path):
    payload = run_json(capsys, ["simplicity", fixture_path("dema"), "--depth", "8"])
    cert_file = tmp_path / "cert.json"
    cert_file.write_text(json.dumps(payload))
    code, out, err = run(capsys, ["verify", str(cert_file)])
    assert code == 0
    assert "valid = True" in out

    bad = dict(payload)
    bad["pinching_word"] = "TT"
    cert_file.write_text(json.dumps(bad))
    code, out, err = run(capsys, ["verify", str(cert_file)])
    assert code == 1


def test_ekz(capsys):
    payload = run_json(capsys, ["ekz", fixture_path("l3")])
    assert payload["total"] == {"num": 4, "den": 3}


def test_ekz_w_multiplicity(capsys):
    payload = run_json(
        capsys, ["ekz", fixture_path("ltilde"), "--w-multiplicity", "4"]
    )
    assert payload["total"] == {"num": 3, "den": 1}
    assert payload["w_exponent"] == {"num": 1, "den": 6}


def test_mc(capsys):
    payload = run_json(
        capsys,
        [
            "mc",
            fixture_path("l3"),
            "--steps",
            "200",
            "--trials",
            "2",
            "--seed",
            "7",
        ],
    )
    assert len(payload["estimates"]) == 4


def test_mc_requires_seed():
    with pytest.raises(SystemExit) as exc:
        cli.main(["mc", fixture_path("l3")])
    assert exc.value.code == 2


def test_unknown_command():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_missing_file_is_domain_error(capsys):
    code, out, err = run(capsys, ["info", "/nonexistent/origami.txt"])
    assert code == 1
    assert "error:" in err


def test_cover_stdout_and_out(capsys, tmp_path):
    code, out, err = run(capsys, ["cover", "ew"])
    assert code == 0
    assert "h =" in out and "v =" in out
    target = tmp_path / "ltilde.txt"
    code, out, err = run(capsys, ["cover", "ltilde", "--out", str(target)])
    assert code == 0
    o = load_origami(str(target))
    assert o.degree == 24


def test_cover_custom(capsys, tmp_path):
    spec = tmp_path / "cocycle.json"
    spec.write_text(json.dumps({"group": "quaternion", "wh": [2], "wv": [4]}))
    torus = tmp_path / "torus.txt"
    torus.write_text("h = (1)\nv = (1)\n")
    code, out, err = run(capsys, ["cover", "custom", "--base", str(torus), "--cocycle", str(spec)])
    assert code == 0
    assert "h =" in out


def test_cover_custom_missing_args(capsys):
    code, out, err = run(capsys, ["cover", "custom"])
    assert code == 1


def test_buser(capsys):
    payload = run_json(capsys, ["buser", "3"])
    assert payload["bound"] < payload["reference"]
    code, out, err = run(capsys, ["buser", "--trace", "34"])
    assert code == 0
    assert "length" in out


def test_buser_bad_trace(capsys):
    code, out, err = run(capsys, ["buser", "--trace", "2"])
    assert code == 1
