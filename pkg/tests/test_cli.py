import json

from catkit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_hecke_mul(capsys):
    code, report = run_cli(capsys, "hecke", "--n", "3", "--mul", "231", "312")
    assert code == 0
    assert report["result"]["product"] == "321"
    assert report["version"]


def test_hecke_ideal(capsys):
    _, report = run_cli(capsys, "hecke", "--ideal", "231")
    assert report["result"]["ideal"] == ["123", "132", "213", "231"]


def test_hecke_idempotents(capsys):
    _, report = run_cli(capsys, "hecke", "--n", "4", "--idempotents")
    assert len(report["result"]["idempotents"]) == 8


def test_hecke_fold(capsys):
    _, report = run_cli(capsys, "hecke", "--n", "4", "--fold", "1",
                        "({1,3},{2,4})")
    assert report["result"]["folded"] == "({2,3},{1,4})"


def test_dcm_psi(capsys):
    _, report = run_cli(capsys, "dcm", "psi", "231")
    assert report["result"]["matrix"] == ["111", "111", "011"]


def test_dcm_fiber(capsys):
    _, report = run_cli(capsys, "dcm", "fiber", "1111,1111,1111,1111")
    assert report["result"]["tau"] == "4231"
    assert report["result"]["maximal"] == ["4321"]
    assert report["result"]["convex"] is True
    assert report["result"]["fiber"] == ["4231", "4321"]


def test_dcm_count_and_self_dual(capsys):
    _, report = run_cli(capsys, "dcm", "--n", "5", "count")
    assert report["result"]["size"] == 103
    _, report = run_cli(capsys, "dcm", "--n", "5", "self-dual")
    assert report["result"]["self_dual"] == 21


def test_dcm_verify_presentation(capsys):
    _, report = run_cli(capsys, "dcm", "--n", "3", "verify-presentation")
    assert report["result"] == {"presented_size": 6, "matches": True,
                                "stable": True}


def test_dyck_commands(capsys):
    _, report = run_cli(capsys, "dyck", "derivative", "UUDUDD")
    assert report["result"]["derivative"] == "UUUDDD"
    _, report = run_cli(capsys, "dyck", "admissible", "UUDUDD", "UUUDDD")
    assert report["result"]["admissible"] is True
    _, report = run_cli(capsys, "dyck", "prec", "233", "333")
    assert report["result"]["leq"] is True
    _, report = run_cli(capsys, "dyck", "path", "233")
    assert report["result"]["path"] == "UUDUDD"
    _, report = run_cli(capsys, "dyck", "map", "UUDUDD")
    assert report["result"]["map"] == "233"


def test_coxeter_info(capsys):
    _, report = run_cli(capsys, "coxeter", "--type", "B3")
    assert report["result"]["order"] == 48
    assert report["result"]["vertex_count"] == 26


def test_coxeter_quotient(capsys):
    _, report = run_cli(capsys, "coxeter", "--type", "A3",
                        "--quotient", "catalan", "--J", "s1,s2")
    assert report["result"]["table"]["size"] == 14


def test_coxeter_quotient_dot(capsys):
    code = main(["coxeter", "--type", "A2", "--quotient", "double",
                 "--J", "s1", "--dot"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("digraph")


def test_repmin_report(capsys):
    _, report = run_cli(capsys, "repmin", "--type", "A3")
    res = report["result"]
    assert res["claimed"] == res["constructed_dim"] == 11
    assert res["effective"] and res["socle_verified"]
    assert set(res["socles"]) == {"s1", "s2", "s3"}


def test_repmin_dc(capsys):
    _, report = run_cli(capsys, "repmin", "--dc", "4")
    assert report["result"] == {"n": 4, "dim": 6, "effective": True}


def test_verify_all(capsys):
    code, report = run_cli(capsys, "verify-all", "--n-max", "2")
    assert code == 0
    assert report["result"]["passed"] is True


def test_export_dot(capsys):
    code = main(["export", "--what", "dc", "--n", "3", "--dot"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.count("->") == 12  # 6 nodes, 2 generators


def test_export_json(capsys):
    _, report = run_cli(capsys, "export", "--what", "hecke", "--n", "3")
    assert report["result"]["table"]["size"] == 6


def test_reports_are_byte_identical(capsys):
    main(["dcm", "--n", "4", "count"])
    first = capsys.readouterr().out
    main(["dcm", "--n", "4", "count"])
    second = capsys.readouterr().out
    assert first == second


def test_custom_coxeter_from_files(tmp_path, capsys):
    gens = tmp_path / "gens.txt"
    gens.write_text("1 0 2\n0 2 1\n")
    matrix = tmp_path / "matrix.txt"
    matrix.write_text("1 3\n3 1\n")
    _, report = run_cli(capsys, "coxeter", "--gens", str(gens),
                        "--matrix", str(matrix))
    assert report["result"]["order"] == 6


def test_verify_all_failure_reports_counterexample(capsys, monkeypatch):
    from catkit import verify

    def broken(n_max, rng):
        return verify.CheckResult("broken", False,
                                  counterexample={"n": 1})

    monkeypatch.setattr(verify, "ALL_CHECKS", [broken])
    code = main(["verify-all", "--n-max", "1"])
    captured = capsys.readouterr()
    assert code == 1
    assert json.loads(captured.err.strip()) == {
        "check": "broken", "counterexample": {"n": 1}}
