import json


from qcat.cli import main, run


def _run(*argv):
    return run([str(a) for a in argv])


def test_classify_nerve(data_dir):
    rep = _run("classify", data_dir / "nerve_2.yaml")
    assert rep.exit_code == 0
    assert ("nerve_like", "yes") in rep.info


def test_classify_horn_fails(data_dir):
    rep = _run("classify", data_dir / "horn_2_1.yaml")
    assert rep.exit_code == 1
    assert any(not ok for _, ok, _ in rep.verdicts)


def test_parse_error_exit(data_dir):
    assert _run("classify", data_dir / "malformed.yaml").exit_code == 2


def test_budget_exit(data_dir):
    assert _run("classify", data_dir / "nerve_2.yaml", "--max-level", 2).exit_code == 3


def test_precondition_exit(data_dir):
    assert _run("ho", data_dir / "horn_2_1.yaml").exit_code == 4
    assert _run("classify", data_dir / "delta1.yaml", "--dmax", 9).exit_code == 4


def test_ho_writes_category(data_dir, tmp_path):
    out = tmp_path / "ho.yaml"
    rep = _run("ho", data_dir / "nerve_c2.yaml", "--out", out)
    assert rep.exit_code == 0
    assert "objects" in out.read_text()


def test_join_compare(data_dir):
    rep = _run("join", data_dir / "delta1.yaml", data_dir / "delta0.yaml", "--compare", data_dir / "delta2.yaml", "--dmax", 2)
    assert rep.exit_code == 0


def test_slice_and_limits(data_dir):
    assert _run("slice", data_dir / "square_poset.yaml", "--diagram", "vertex:1", "--dmax", 2).exit_code == 0
    rep = _run("limits", data_dir / "square_poset.yaml", "--diagram", "vertices:a,b", "--dmax", 2)
    assert rep.exit_code == 0
    text = rep.text()
    assert "0" in text
    assert _run("limits", data_dir / "square_poset.yaml", "--diagram", "vertex:zz").exit_code == 2


def test_monoidal_commands(data_dir):
    rep = _run("monoidal", "validate", data_dir / "pentagon_corrupted.yaml")
    assert rep.exit_code == 1
    assert "pentagon" in rep.text()
    assert _run("monoidal", "extract", "builtin:categorical-c2").exit_code == 0
    assert _run("monoidal", "build-opfib", "builtin:discrete-c2", "--nmax", 2).exit_code == 0
    assert _run("monoidal", "algebra-check", "builtin:max-poset", "--object", "1", "--mu", "id_1", "--eta", "0<1", "--nmax", 2).exit_code == 0
    assert _run("monoidal", "extract", "builtin:max-poset", "--symmetric").exit_code == 0


def test_dual_find(capsys):
    code = main(["monoidal", "dual-find", "builtin:matrix", "--object", "2", "--dmax", "2", "--json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["exit_code"] == 0
    assert sum(1 for k, _ in doc["info"] if k.startswith("witness")) == 6


def test_text_output(capsys, data_dir):
    main(["classify", str(data_dir / "nerve_1.yaml")])
    out = capsys.readouterr().out
    assert out.startswith("command: classify")
    assert out.rstrip().endswith("exit: 0")
