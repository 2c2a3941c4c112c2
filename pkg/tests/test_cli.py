import json
import subprocess
import sys

import pytest

from orthocevia.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_centers_t345(capsys):
    code, out, _ = run(capsys, "centers", "--triangle", "0,0 4,0 0,3")
    assert code == 0
    doc = json.loads(out)
    assert doc["centers"]["incenter"] == [1, 1]
    assert doc["centers"]["nagel"] == [2, 1]
    assert doc["centers"]["bevan"] == [3, 2]
    assert len(doc["centers"]) == 8
    assert doc["sides"] == {"a": 5, "b": 3, "c": 4, "s": 6}


def test_centers_equilateral(capsys):
    code, out, _ = run(capsys, "centers", "--triangle", "0,0 2,0 1,1.7320508075688772")
    c = json.loads(out)["centers"]
    for name in ("incenter", "circumcenter", "orthocenter"):
        assert c[name] == pytest.approx(c["centroid"], abs=1e-12)


def test_centers_degenerate_exit_3(capsys):
    code, _, err = run(capsys, "centers", "--triangle", "0,0 1,0 2,0")
    assert code == 3 and "area ratio" in err


@pytest.mark.parametrize("argv", [
    ["centers", "--triangle", "0,0 4,0"],
    ["centers", "--triangle", "0,0 4,x 0,3"],
    ["centers"],
    ["check", "sixpoint", "--triangle", "TACU"],
    ["check", "sixpoint", "--triangle", "TACU", "--point", "P1=nowhere"],
    ["check", "nonsense", "--triangle", "TACU"],
    ["verify", "bogus"],
    ["figure", "fig99"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_theorem7_t345_incenter(capsys):
    code, out, _ = run(capsys, "check", "theorem7", "--triangle", "T345", "--point", "P1=incenter")
    doc = json.loads(out)
    assert code == 0 and doc["holds"]
    for key in ("F1", "F2"):
        assert doc[key] == pytest.approx([8 / 11, 9 / 11], abs=1e-12)


def test_sixpoint_tacu_circumcenter(capsys):
    code, out, _ = run(capsys, "check", "sixpoint", "--triangle", "0,0 4,0 1,3", "--point", "P1=2,1")
    doc = json.loads(out)
    assert code == 0
    assert doc["center"] == pytest.approx([1.5, 1])
    assert doc["max_deviation"] <= 1e-9


def test_sixpoint_vertex_exit_4(capsys):
    code, _, err = run(capsys, "check", "sixpoint", "--triangle", "TACU", "--point", "P1=0,0")
    assert code == 4


def test_relation_false_exit_1(capsys):
    code, out, _ = run(capsys, "check", "homology", "--triangle", "T345", "--other", "5.3,1.1 7.9,4.2 4.4,6.6")
    assert code == 1 and json.loads(out)["holds"] is False


def test_relations_on_derived_triangles(capsys):
    assert run(capsys, "check", "homology", "--triangle", "T345", "--other", "extouch")[0] == 0
    assert run(capsys, "check", "orthohomological", "--triangle", "TACU", "--other", "medial")[0] == 0
    assert run(capsys, "check", "bilogical", "--triangle", "TACU", "--other", "medial")[0] == 1
    assert run(capsys, "check", "orthology", "--triangle", "TACU", "--point", "P1=1.2,0.9")[0] == 0
    assert run(capsys, "check", "terquem", "--triangle", "TACU", "--point", "P1=centroid")[0] == 0


def test_eps_env_var(capsys, monkeypatch):
    monkeypatch.setenv("ORTHOCEVIA_EPS", "1e-6")
    code, out, _ = run(capsys, "check", "homology", "--triangle", "T345", "--other", "contact")
    assert json.loads(out)["tolerance"] == 1e-6


def test_round_trip_centers_as_scene(capsys, tmp_path):
    _, out, _ = run(capsys, "centers", "--triangle", "TACU")
    scene = tmp_path / "scene.json"
    scene.write_text(out)
    direct = run(capsys, "check", "theorem7", "--triangle", "TACU", "--point", "P1=circumcenter")
    via = run(capsys, "check", "theorem7", "--scene", str(scene), "--point", "P1=circumcenter")
    assert direct == via and direct[0] == 0


def test_scene_file_points(capsys, tmp_path):
    scene = tmp_path / "s.json"
    scene.write_text(json.dumps({"triangle": [[0, 0], [4, 0], [1, 3]], "points": {"P1": [2, 1]},
                                 "options": {"eps": 1e-8}}))
    code, out, _ = run(capsys, "check", "sixpoint", "--scene", str(scene))
    doc = json.loads(out)
    assert code == 0 and doc["P2"] == pytest.approx([1, 1]) and doc["tolerance"] == 1e-8
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "centers", "--scene", str(bad))[0] == 2


def test_verify_writes_report(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "counterexample", "--trials", "50", "--json", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["suite"] == "counterexample" and doc["trials"] == 50 and doc["failures"] == []


def test_verify_failure_exit_1(capsys):
    assert run(capsys, "verify", "steiner", "--trials", "20", "--eps", "1e-30")[0] == 1


def test_figure_to_file(capsys, tmp_path):
    out = tmp_path / "f.svg"
    assert run(capsys, "figure", "fig3_contact", "--out", str(out))[0] == 0
    assert out.read_text().startswith("<?xml")
    assert run(capsys, "figure", "fig3_contact", "--triangle", "0,0 1,0 2,0")[0] == 3


def test_console_script_module_entry():
    proc = subprocess.run([sys.executable, "-m", "orthocevia", "centers", "--triangle", "T345"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["centers"]["incenter"] == [1, 1]
