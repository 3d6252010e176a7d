import json
import subprocess
import sys

import pytest

from globalk import groups as gr
from globalk.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def csv_ranks(out):
    return [int(line.split(",")[1]) for line in out.strip().splitlines()[1:]]


def test_groups_classes(capsys):
    code, out = run(capsys, "groups", "--group", "S3", "--classes")
    assert code == 0 and len(json.loads(out)["rows"]) == 4
    code, out = run(capsys, "groups", "--group", "C1")
    assert len(json.loads(out)["rows"]) == 1


def test_groups_weyl(capsys):
    code, out = run(capsys, "groups", "--group", "D4", "--weyl", "C2a")
    row = json.loads(out)["rows"][0]
    D4 = gr.by_name("D4")
    H = gr.conjugacy_classes_of_subgroups(D4).rep(gr.subgroup_class_names(D4).index("C2a"))
    assert row["weyl_order"] == len(gr.normalizer(D4, H)) // len(H)


def test_groups_from_cayley_file(tmp_path, capsys):
    f = tmp_path / "mine.txt"
    f.write_text(gr.by_name("C2xC2").to_text())
    code, out = run(capsys, "groups", "--group", str(f), "--format", "csv")
    assert code == 0 and len(out.strip().splitlines()) == 1 + 5


@pytest.mark.parametrize("argv,ranks", [
    (["--A", "C2", "--window", "e,C2"], [1, 3]),
    (["--B", "e", "--window", "e"], [1]),
    (["--B", "C2", "--window", "e,C2"], [2, 5]),
])
def test_globfun(capsys, argv, ranks):
    code, out = run(capsys, "globfun", *argv, "--format", "csv")
    assert code == 0 and csv_ranks(out) == ranks


def test_globfun_json_has_schema_and_verification(capsys):
    code, out = run(capsys, "globfun", "--A", "C2", "--window", "e,C2")
    d = json.loads(out)
    assert d["schema"] == 1 and d["verification"]["passed"]


def test_swan_examples(capsys):
    code, out = run(capsys, "swan", "--cat", "finsets", "--window", "e,C2", "--bound", "3", "--format", "csv")
    assert csv_ranks(out) == [1, 2]
    code, out = run(capsys, "swan", "--cat", "monoid:N", "--window", "e,C2")
    d = json.loads(out)
    assert [v["rank"] for v in d["values"].values()] == [1, 1]
    assert d["transfers"]["e<C2"] == [[2]] and d["restrictions"]["C2>e"] == [[1]]
    code, out = run(capsys, "swan", "--cat", "projmod:F2", "--group-window", "e,C2", "--dim", "4", "--format", "csv")
    assert csv_ranks(out) == [1, 2]


def test_swan_output_is_byte_identical(capsys):
    a = run(capsys, "swan", "--cat", "gfinsets:C2", "--window", "e,C2")[1]
    b = run(capsys, "swan", "--cat", "gfinsets:C2", "--window", "e,C2")[1]
    assert a == b


def test_verify_suites(capsys):
    assert run(capsys, "verify", "--suite", "doublecoset", "--groups", "S3,D4")[0] == 0
    code, out = run(capsys, "verify", "--suite", "saturation", "--cat", "bc2", "--group", "C2")
    d = json.loads(out)
    assert code == 0 and not d["report"]["saturated"] and d["report"]["missing"]
    assert run(capsys, "verify", "--suite", "splitting", "--gamma", "C2", "--window", "e")[0] == 0


def test_bad_selector_exit_code(capsys):
    assert main(["groups", "--group", "nonsense"]) == 2


def test_non_free_monoid_reported(capsys):
    assert main(["swan", "--cat", "monoid:Z3", "--window", "e"]) == 2
    assert "not free" in capsys.readouterr().err


def test_out_file(tmp_path, capsys):
    f = tmp_path / "o.json"
    run(capsys, "globfun", "--A", "C2", "--window", "e,C2", "--out", str(f))
    assert json.loads(f.read_text())["schema"] == 1


def test_entry_point_subprocess():
    r = subprocess.run([sys.executable, "-m", "globalk.cli", "globfun", "--B", "e", "--window", "e", "--format", "csv"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip().splitlines()[1] == "C1,1"


def test_caps_env(monkeypatch, capsys):
    monkeypatch.setenv("GLOBALK_CAPS", "order=4")
    assert main(["groups", "--group", "C5xC5"]) == 2


def test_module_iso_suite(tmp_path, capsys):
    from globalk.instances import MatrixModule
    C2 = gr.by_name("C2")
    files = {}
    for name, M in [("reg", MatrixModule.regular(C2, 3)),
                    ("ts", MatrixModule.trivial(C2, 3).direct_sum(MatrixModule.sign(C2, 3, [C2.identity]))),
                    ("tt", MatrixModule.trivial(C2, 3, 2))]:
        files[name] = tmp_path / f"{name}.json"
        files[name].write_text(json.dumps(M.to_json()))
    assert run(capsys, "verify", "--suite", "moduleiso", "--modules", f"{files['reg']},{files['ts']}")[0] == 0
    assert run(capsys, "verify", "--suite", "moduleiso", "--modules", f"{files['reg']},{files['tt']}")[0] == 1


def test_malformed_cayley_file(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("order 2\n1 0\n0 1\n")
    assert main(["groups", "--group", str(f)]) == 2
    assert "identity" in capsys.readouterr().err
