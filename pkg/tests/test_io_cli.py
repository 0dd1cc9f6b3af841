import json
from fractions import Fraction
from pathlib import Path

import pytest

from whitney import cli, fileio
from whitney.errors import InputError

CORPUS = Path(__file__).resolve().parents[1] / "src" / "whitney" / "corpus"


def run(argv, capsys=None):
    code = cli.main([str(a) for a in argv])
    if capsys is None:
        return code
    return code, capsys.readouterr()


def test_parse_rational():
    assert fileio.parse_rational("3/4") == Fraction(3, 4)
    assert fileio.parse_rational("-2") == Fraction(-2)
    assert fileio.parse_rational("-6/4") == Fraction(-3, 2)
    for bad in ("1/0", "1.5", "a", "1/-2", ""):
        with pytest.raises(InputError):
            fileio.parse_rational(bad)


def test_format_rational_roundtrip():
    for x in (Fraction(3, 4), Fraction(-7), Fraction(0)):
        assert fileio.parse_rational(fileio.format_rational(x)) == x


def test_complex_roundtrip(tmp_path):
    data = fileio.load_json(CORPUS / "rp2_6_embedded.json")
    k = fileio.complex_from_dict(data)
    again = fileio.complex_from_dict(fileio.complex_to_dict(k))
    assert again.simplices == k.simplices
    assert again.coordinates == k.coordinates


def test_function_file_with_terms(circle):
    data = {"ring": "Z", "terms": [{"coeff": 2, "closed_support": [["1", "2"]]}]}
    a = fileio.function_from_dict(data, circle)
    assert a(("1",)) == 2 and a(("1", "2")) == 2 and a(("3",)) == 0


def test_function_file_with_values(circle):
    data = {"ring": "Z2", "values": {"1": 1, "1,2": 1}}
    a = fileio.function_from_dict(data, circle)
    assert a(("1",)) == 1 and a(("1", "2")) == 1 and a(("2",)) == 0


def test_function_values_on_subdivision_names(subdivisions):
    # barycenter vertex ids contain commas; keys must still resolve
    kp = subdivisions["s1_3"].complex
    data = {"ring": "Z2", "values": {"b(1,2)": 1, "b(1),b(1,2)": 1}}
    a = fileio.function_from_dict(data, kp)
    assert a(("b(1,2)",)) == 1
    assert a(("b(1)", "b(1,2)")) == 1


def test_function_file_unknown_key(circle):
    with pytest.raises(InputError):
        fileio.function_from_dict({"ring": "Z", "values": {"9": 1}}, circle)


def test_chain_file_membership_check(circle):
    with pytest.raises(InputError):
        fileio.chain_from_dict({"dim": 1, "simplices": [["1", "9"]]}, circle)


def test_chi_cli(capsys):
    code, out = run(["chi", "--complex", CORPUS / "rp2_6.json"], capsys)
    assert code == 0 and out.out.strip() == "1"


def test_homology_cli_json(capsys):
    code, out = run(
        ["homology", "--complex", CORPUS / "torus_7.json", "--format", "json"], capsys
    )
    assert code == 0
    assert json.loads(out.out)["betti_mod2"] == [1, 2, 1]


def test_euler_check_cli(capsys):
    code, out = run(
        ["euler-check", "--complex", CORPUS / "bowtie.json", "--format", "json"], capsys
    )
    assert code == 0
    payload = json.loads(out.out)
    assert payload["euler"] is False
    assert ["3"] not in payload["offenders"]
    assert payload["offenders"]


def test_stiefel_bounds_pipeline(tmp_path, capsys):
    sub_path = tmp_path / "sub.json"
    chain_path = tmp_path / "s1.json"
    assert run(["subdivide", "--complex", CORPUS / "rp2_6.json", "--out", sub_path]) == 0
    assert run(
        ["stiefel", "--complex", CORPUS / "rp2_6.json", "--dim", 1, "--out", chain_path]
    ) == 0
    payload = json.loads(chain_path.read_text())
    assert payload["construction"] == "stiefel" and payload["i"] == 1
    code, out = run(
        ["bounds", "--complex", sub_path, "--chain", chain_path, "--format", "json"],
        capsys,
    )
    assert code == 0 and json.loads(out.out)["bounds"] is False


def test_stiefel_output_deterministic(tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    for p in (p1, p2):
        run(["stiefel", "--complex", CORPUS / "torus_7.json", "--dim", 1, "--out", p])
    assert p1.read_bytes() == p2.read_bytes()


def test_polar_random_plane_deterministic(tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    for p in (p1, p2):
        code = run(
            ["polar", "--complex", CORPUS / "s1_6.json", "--dim", 0,
             "--random-plane", "--seed", 42, "--out", p]
        )
        assert code == 0
    assert p1.read_bytes() == p2.read_bytes()
    assert json.loads(p1.read_text())["seed"] == 42


def test_polar_moment_with_report(tmp_path):
    out = tmp_path / "c.json"
    report = tmp_path / "hl.json"
    code = run(
        ["polar", "--complex", CORPUS / "s1_3.json", "--dim", 1, "--moment",
         "--out", out, "--report", report]
    )
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["construction"] == "moment"
    assert len(json.loads(report.read_text())["half_links"]) == 6


def test_push_pull_cli(tmp_path, capsys):
    fn = tmp_path / "fn.json"
    fn.write_text(json.dumps({"ring": "Z", "terms": [{"coeff": 1, "closed_support": [["1", "2"]]}]}))
    mp = tmp_path / "map.json"
    mp.write_text(json.dumps({"vertex_map": {"0": "1", "1": "2", "2": "3", "3": "1", "4": "2", "5": "3"}}))
    out = tmp_path / "out.json"
    code = run(
        ["pull", "--domain", CORPUS / "s1_6.json", "--codomain", CORPUS / "s1_3.json",
         "--map", mp, "--fn", fn, "--out", out]
    )
    assert code == 0
    values = json.loads(out.read_text())["values"]
    assert values["0"] == 1 and values["0,1"] == 1


def test_validate_cli(tmp_path, capsys):
    good = CORPUS / "s1_3.json"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vertices": ["a"], "maximal_simplices": [["a", "b"]]}))
    code, out = run(["validate", good], capsys)
    assert code == 0 and "ok:" in out.out
    assert run(["validate", bad]) == 1


def test_exit_codes(tmp_path, capsys):
    missing = tmp_path / "nope.json"
    assert run(["chi", "--complex", missing]) == 2
    # degenerate projection: plane chosen parallel to an edge
    basis = tmp_path / "basis.json"
    basis.write_text(json.dumps({"ambient_dim": 2, "vectors": [["1", "0"]]}))
    code = run(
        ["polar", "--complex", CORPUS / "square.json", "--dim", 0,
         "--project", basis, "--out", tmp_path / "c.json"]
    )
    assert code == 6


def test_threads_env_validation(monkeypatch, capsys):
    monkeypatch.setenv("WHITNEY_THREADS", "banana")
    assert run(["chi", "--complex", CORPUS / "s1_3.json"]) == 2
    monkeypatch.setenv("WHITNEY_THREADS", "2")
    code, out = run(["chi", "--complex", CORPUS / "s1_3.json"], capsys)
    assert code == 0


def test_verify_cli(capsys):
    code, out = run(
        ["verify", "--suite", "calculus", "--seed", 3, "--trials", 12], capsys
    )
    assert code == 0
    assert "suite calculus: ok (seed 3)" in out.out
