import json

import pytest

from run_gac import main


def run(capsys, *argv):
    exit_code = main(list(argv))
    captured = capsys.readouterr()
    return exit_code, captured.out, captured.err


@pytest.fixture(autouse=True)
def no_env_jobs(monkeypatch):
    monkeypatch.delenv("GAC_JOBS", raising=False)


@pytest.mark.parametrize("spec, h, gamma", [
    ("path:3", [1, 3, 1], [1, 1]),
    ("complete:3", [1, 4, 1], [1, 2]),
    ("cycle:4", [1, 9, 9, 1], [1, 6]),
    ("star:4", [1, 7, 7, 1], [1, 4]),
])
def test_vectors_of_named_graphs(capsys, spec, h, gamma):
    exit_code, out, _ = run(capsys, "vectors", "--graph", spec, "--format", "json")
    assert exit_code == 0
    payload = json.loads(out)
    assert payload["h"] == h
    assert payload["gamma"] == gamma
    assert payload["flag"] is True


def test_vectors_of_the_pentagon(capsys):
    exit_code, out, _ = run(capsys, "vectors", "--graph", "path:3", "--format", "json",
                            "--method", "facet_recursion")
    assert exit_code == 0
    payload = json.loads(out)
    assert (payload["m"], payload["n"], payload["facets"]) == (3, 2, 5)
    assert payload["f"] == [5, 5, 1]
    assert payload["g"] == [1, 2]


def test_proper_faces_and_csv(capsys):
    _, out, _ = run(capsys, "vectors", "--graph", "path:3", "--proper-faces-only",
                    "--format", "csv")
    assert out.splitlines() == ["f,5,5", "h,1,3,1", "g,1,2", "gamma,1,1"]


def test_vectors_are_deterministic(capsys):
    first = run(capsys, "vectors", "--graph", "cycle:5")
    second = run(capsys, "vectors", "--graph", "cycle:5")
    assert first == second


def test_building_set_file(capsys, tmp_path):
    simplex = tmp_path / "simplex.txt"
    simplex.write_text("ground 3\n1\n2\n3\n1,2,3\n")
    exit_code, out, _ = run(capsys, "vectors", "--building-set", str(simplex),
                            "--format", "json")
    assert exit_code == 0
    payload = json.loads(out)
    assert payload["flag"] is False
    assert payload["h"] == [1, 1, 1]


def test_family_csv(capsys):
    exit_code, out, _ = run(capsys, "family", "--name", "pe", "--max-n", "4", "--format", "csv")
    assert exit_code == 0
    assert out.splitlines() == [
        "n,v0,v1,v2,v3,v4",
        "0,1,,,,",
        "1,1,1,,,",
        "2,1,4,1,,",
        "3,1,11,11,1,",
        "4,1,26,66,26,1",
    ]


def test_family_json(capsys):
    _, out, _ = run(capsys, "family", "--name", "as", "--max-n", "3", "--vector", "gamma",
                    "--format", "json")
    assert json.loads(out) == {"family": "as", "vector": "gamma",
                               "rows": [[1], [1], [1, 1], [1, 3]]}


def test_family_pretty(capsys):
    _, out, _ = run(capsys, "family", "--name", "st", "--max-n", "3", "--format", "pretty")
    assert out.splitlines()[-1] == "h(st^3) = (1, 7, 7, 1)"


def test_verify_with_status_file(capsys, tmp_path):
    report_file = tmp_path / "reports" / "tree_m4.json"
    exit_code, out, _ = run(capsys, "verify", "--suite", "tree", "--m", "4", "--jobs", "1",
                            "--format", "json", "--output", str(report_file),
                            "--status-dir", str(tmp_path / "status"))
    assert exit_code == 0
    report = json.loads(out)
    assert report["pass"] is True
    assert report["checked"] == 16
    assert json.loads(report_file.read_text())["checked"] == 16
    status = (tmp_path / "status" / "tree_m4_status.out").read_text().splitlines()
    assert status == ["Processing suite tree m=4", f"Saved report: {report_file}",
                      "VERIFICATION COMPLETED"]


def test_verify_pretty(capsys):
    exit_code, out, _ = run(capsys, "verify", "--suite", "product", "--format", "pretty")
    assert exit_code == 0
    assert out.startswith("suite product m=4: PASS (3 checked, 0 failures)")


def test_identity(capsys):
    exit_code, out, _ = run(capsys, "identity", "--id", "cy_relation", "--format", "pretty")
    assert exit_code == 0
    assert out == "cy_relation: verified to order 12\n"


@pytest.mark.parametrize("argv, exit_code, error", [
    (["family", "--name", "xx", "--max-n", "3"], 2, "UnknownFamily"),
    (["vectors", "--graph", "path:x"], 2, "ParseError"),
    (["vectors"], 2, "UsageError"),
    ([], 2, "UsageError"),
    (["verify", "--suite", "connected"], 2, "UsageError"),
    (["verify", "--suite", "forest", "--m", "4"], 2, "UnknownSuite"),
    (["verify", "--suite", "tree", "--m", "3", "--jobs", "0"], 2, "UsageError"),
    (["identity", "--id", "nope"], 2, "UnknownIdentity"),
    (["verify", "--suite", "hamiltonian", "--m", "2"], 3, "MTooSmall"),
    (["vectors", "--graph", "path:11"], 4, "GroundTooLarge"),
    (["family", "--name", "as", "--max-n", "13"], 4, "MTooLarge"),
    (["identity", "--id", "pe_ode", "--order", "31"], 4, "OrderTooLarge"),
    (["family", "--name", "as", "--max-n", "-1"], 2, "UsageError"),
    (["identity", "--id", "pe_ode", "--order", "-2"], 2, "UsageError"),
    (["verify", "--suite", "monotonicity", "--m", "4", "--samples", "-1"], 2, "UsageError"),
    (["verify", "--suite", "monotonicity", "--m", "4", "--samples", "0"], 2, "UsageError"),
])
def test_errors_are_one_line(capsys, argv, exit_code, error):
    code, out, err = run(capsys, *argv)
    assert code == exit_code
    assert out == ""
    assert err.startswith(f"error: {error}:")
    assert err.count("\n") == 1


def test_disconnected_building_set_is_semantic(capsys, tmp_path):
    disconnected = tmp_path / "two_points.txt"
    disconnected.write_text("ground 2\n1\n2\n")
    code, _, err = run(capsys, "vectors", "--building-set", str(disconnected))
    assert code == 3
    assert err.startswith("error: NotConnected:")


def test_jobs_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("GAC_JOBS", "abc")
    code, _, err = run(capsys, "verify", "--suite", "tree", "--m", "3")
    assert code == 2
    assert "GAC_JOBS" in err
    monkeypatch.setenv("GAC_JOBS", "1")
    assert run(capsys, "verify", "--suite", "tree", "--m", "3")[0] == 0


@pytest.mark.parametrize("option", ["--graph", "--building-set"])
def test_binary_input_is_a_parse_error(capsys, tmp_path, option):
    binary = tmp_path / "binary.dat"
    binary.write_bytes(b"ground 3\n\xff\xfe\n")
    code, out, err = run(capsys, "vectors", option, str(binary))
    assert code == 2
    assert out == ""
    assert err.startswith("error: ParseError:")
    assert err.count("\n") == 1
