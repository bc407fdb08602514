import json
from pathlib import Path

import jsonschema
import pytest

from sgcrit import cli, sgio
from sgcrit.constructions import gallery

SCHEMAS = Path(cli.__file__).parent / "schemas"


def run(capsys, *argv):
    code = cli.main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def schema(name):
    return json.loads((SCHEMAS / f"{name}.json").read_text())


def test_critical_w_hat(capsys):
    code, out, _ = run(capsys, "critical", "gallery:what")
    assert code == 0 and out.startswith("critical")


def test_hom_gamma_exhaustive(capsys):
    code, out, _ = run(capsys, "--json", "hom", "gallery:gamma")
    assert code == 1
    assert json.loads(out) == {"verdict": "nohom", "reason": "exhausted"}


def test_girth_c4(capsys):
    code, out, _ = run(capsys, "girth", "gallery:cminus:4")
    assert code == 0 and out.strip() == "g00=2 g01=inf g10=4 g11=inf"


def test_file_input_and_stdin(capsys, tmp_path, monkeypatch):
    path = tmp_path / "w.sg"
    sgio.dump(gallery("what"), path)
    assert run(capsys, "mad", str(path))[1].strip() == "mad=18/7"
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(sgio.dumps(gallery("gamma"))))
    assert run(capsys, "critical", "-")[0] == 0


@pytest.mark.parametrize("argv,name,code", [
    (["hom", "gallery:what"], "hom", 1),
    (["hom", "gallery:cplus:4"], "hom", 0),
    (["hom", "gallery:cminus:6", "--target", "c-6"], "hom", 0),
    (["hom", "gallery:theta1"], "hom", 0),
    (["sp-hom", "gallery:dualpath"], "hom", 1),
    (["hom", "gallery:cplus:3"], "hom", 1),
    (["critical", "gallery:what"], "critical", 0),
    (["critical", "gallery:dualpath"], "critical", 1),
    (["critical", "gallery:cminus:3"], "critical", 1),
    (["critical", "gallery:omega2"], "critical", 1),
    (["girth", "gallery:gamma"], "girth", 0),
    (["color4", "gallery:theta2"], "coloring", 0),
    (["x2k", "--k", "1", "gallery:cplus:4"], "coloring", 0),
    (["x2k", "--k", "1", "gallery:cminus:4"], "coloring", 1),
    (["mad", "gallery:omega1"], "mad", 0),
    (["switch-iso", "gallery:what", "gallery:what"], "switch_iso", 0),
    (["switch-iso", "gallery:what", "gallery:gamma"], "switch_iso", 1),
    (["construct", "build:14"], "construct", 0),
    (["census", "--n", "7"], "census", 0),
])
def test_json_outputs_validate(capsys, argv, name, code):
    got, out, _ = run(capsys, *argv, "--json")
    assert got == code
    jsonschema.validate(json.loads(out), schema(name))


def test_critical_with_noncritical_edge_validates(capsys, tmp_path):
    G = gallery("what").add_vertex([(0, 1)]).add_vertex([(7, 1), (4, 1)])
    path = tmp_path / "g.sg"
    sgio.dump(G, path)
    code, out, _ = run(capsys, "--json", "critical", str(path))
    data = json.loads(out)
    assert code == 1 and data["verdict"] == "noncritical_edge"
    jsonschema.validate(data, schema("critical"))


def test_construct_variants(capsys, tmp_path):
    w = tmp_path / "w.sg"
    g = tmp_path / "g.sg"
    sgio.dump(gallery("what"), w)
    sgio.dump(gallery("gamma"), g)
    code, out, _ = run(capsys, "construct", "splice", str(w), "1", str(w), "1")
    assert code == 0 and sgio.loads(out).m == 16
    code, out, _ = run(capsys, "construct", "hajos", str(g), "0", "2", str(g), "1", "4")
    assert code == 0 and sgio.loads(out).n == 10
    code, out, _ = run(capsys, "construct", "tilde", "gallery:cplus:3")
    assert out.startswith("sgm 1")
    code, out, _ = run(capsys, "construct", "tl:2", "gallery:cplus:3")
    assert sgio.loads(out).n == 6
    dest = tmp_path / "out.sg"
    assert run(capsys, "construct", "what", "-o", str(dest))[0] == 0
    assert dest.read_text() == sgio.dumps(gallery("what"))


def test_census_report_file(capsys, tmp_path):
    dest = tmp_path / "r.json"
    assert run(capsys, "census", "--n", "6", "--jobs", "2", "--out", str(dest))[0] == 0
    jsonschema.validate(json.loads(dest.read_text()), schema("census"))


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["hom"], ["hom", "/no/such/file"], ["hom", "gallery:nope"],
    ["hom", "gallery:what", "--target", "c-5"], ["x2k", "--k", "0", "gallery:what"],
    ["census", "--n", "9"], ["construct", "splice", "gallery:what"], ["sp-hom", "gallery:cplus:3"],
    ["construct", "build:x"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_budget_exhaustion_is_not_success(capsys):
    code, _, err = run(capsys, "hom", "gallery:g2k1:2", "--target", "c-6", "--budget", "1")
    assert code == 2 and "no verdict" in err


def test_no_color(capsys, monkeypatch):
    monkeypatch.setenv("NO_COLOR", "1")
    _, out, _ = run(capsys, "critical", "gallery:what")
    assert "\033[" not in out


def test_color_on_tty(monkeypatch):
    monkeypatch.delenv("NO_COLOR", raising=False)

    class Tty:
        def isatty(self):
            return True

    assert "\033[" in cli._Out(Tty(), False).verdict("ok", True)
    monkeypatch.setenv("NO_COLOR", "")
    assert cli._Out(Tty(), False).verdict("ok", True) == "ok"


def test_module_entry_point():
    import subprocess
    import sys
    r = subprocess.run([sys.executable, "-m", "sgcrit", "girth", "gallery:cminus:4"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "g10=4" in r.stdout
