"""End-to-end tests for the command-line interface."""

import json

import pytest

from hyperarr import cli, format_arrangement_text, hyperpolygonal, parse_arrangement_text
from hyperarr.report import packaged_certificate


def write_family(tmp_path, n):
    path = tmp_path / f"h{n}.arr"
    path.write_text(format_arrangement_text(hyperpolygonal(n)))
    return str(path)


def test_build_round_trips(capsys):
    assert cli.main(["build", "3"]) == 0
    out = capsys.readouterr().out
    assert parse_arrangement_text(out) == hyperpolygonal(3)


def test_report_text_and_json(capsys):
    assert cli.main(["report", "2"]) == 0
    out = capsys.readouterr().out
    assert "supersolvable" in out and "regions: 8" in out
    assert cli.main(["report", "2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == "hyperarr/report-v1"
    assert data["properties"]["free"]["value"] is True
    assert data["regions"] == 8


def test_analyze_json(tmp_path, capsys):
    path = write_family(tmp_path, 4)
    assert cli.main(["analyze", path, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["label"] == path
    assert data["properties"]["inductively_free"]["value"] is True
    assert data["properties"]["inductively_factored"]["value"] is False
    assert data["exponents"] == [1, 3, 3, 5]


def test_analyze_exit_codes_ignore_property_values(tmp_path, capsys):
    path = tmp_path / "generic.arr"
    path.write_text("dim 3\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n")
    assert cli.main(["analyze", str(path)]) == 0
    out = capsys.readouterr().out
    assert "free" in out


def test_chi_output(tmp_path, capsys):
    path = write_family(tmp_path, 2)
    assert cli.main(["chi", path]) == 0
    out = capsys.readouterr().out
    assert "t^2 - 4t + 3" in out
    assert "[3, -4, 1]" in out


def test_lattice_json(tmp_path, capsys):
    path = write_family(tmp_path, 2)
    assert cli.main(["lattice", path]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == "hyperarr/lattice-v1"
    assert data["dim"] == 2
    assert len(data["flats"]) == 6


def test_regions_with_simpliciality(tmp_path, capsys):
    path = write_family(tmp_path, 2)
    assert cli.main(["regions", path, "--simplicial"]) == 0
    out = capsys.readouterr().out
    assert "regions: 8" in out
    assert "defect 0" in out


def test_regions_zeta_single_base(tmp_path, capsys):
    path = write_family(tmp_path, 2)
    assert cli.main(["regions", path, "--zeta", "--base", "0"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    data = json.loads(lines[-1])
    assert data == {"base_index": 0, "coefficients": [1, 2, 2, 2, 1]}


def test_regions_zeta_all_bases(tmp_path, capsys):
    path = write_family(tmp_path, 2)
    assert cli.main(["regions", path, "--zeta", "--all-bases"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    data = json.loads(lines[-1])
    assert data["satisfying_bases"] == list(range(8))
    assert data["product_polynomial"] == [1, 2, 2, 2, 1]
    assert data["exponents"] == [1, 3]
    assert data["region_count"] == 8


def test_regions_zeta_without_integer_roots(tmp_path, capsys):
    path = tmp_path / "generic.arr"
    path.write_text("dim 3\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n")
    assert cli.main(["regions", str(path), "--zeta", "--all-bases"]) == 0
    out = capsys.readouterr().out
    assert "no product target" in out


def test_free_inductive(tmp_path, capsys):
    path = write_family(tmp_path, 4)
    assert cli.main(["free", path, "--inductive"]) == 0
    out = capsys.readouterr().out
    assert "inductively free: True" in out
    assert "exponents: [1, 3, 3, 5]" in out


def test_free_certificate_replay(tmp_path, capsys):
    path = write_family(tmp_path, 5)
    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps(packaged_certificate()))
    assert cli.main(["free", path, "--certificate", str(cert)]) == 0
    out = capsys.readouterr().out
    assert "free: True (certificate replay" in out
    assert "exponents: [1, 5, 5, 5, 5]" in out


def test_free_rejected_certificate(tmp_path, capsys):
    path = write_family(tmp_path, 4)
    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps(packaged_certificate()))
    assert cli.main(["free", path, "--certificate", str(cert)]) == 0
    assert "certificate rejected" in capsys.readouterr().out


def test_free_undecided_exit_code(tmp_path, capsys):
    path = write_family(tmp_path, 5)
    assert cli.main(["free", path]) == 3
    out = capsys.readouterr().out
    assert "free: undecided" in out


def test_factor_nice_partition(tmp_path, capsys):
    path = write_family(tmp_path, 3)
    assert cli.main(["factor", path]) == 0
    out = capsys.readouterr().out
    assert "nice partition exists: True" in out
    assert "[[0], [1, 3, 4], [2, 5, 6]]" in out


def test_factor_inductive_undecided_exit_code(tmp_path, capsys):
    path = write_family(tmp_path, 5)
    assert cli.main(["factor", path, "--inductive"]) == 3
    assert "inductively factored: undecided" in capsys.readouterr().out


def test_formal_outputs(tmp_path, capsys):
    path = write_family(tmp_path, 2)
    assert cli.main(["formal", path]) == 0
    out = capsys.readouterr().out
    assert "relation space dimension: 2" in out
    assert "formal: True" in out


def test_formal_lc_basis(tmp_path, capsys):
    path = write_family(tmp_path, 3)
    assert cli.main(["formal", path, "--lc-basis", "0,1,3"]) == 0
    out = capsys.readouterr().out
    assert "lc-basis [0, 1, 3]: True" in out
    assert "reaches 7 of 7" in out


def test_genclose_covering_seed(tmp_path, capsys):
    path = write_family(tmp_path, 3)
    assert cli.main(["genclose", path, "--seed", "0,1,3,6"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == "hyperarr/genclose-v1"
    assert data["seed"] == [0, 1, 3, 6]
    assert data["rounds"] == [[4, 5], [2]]
    assert data["generated"] == list(range(7))
    assert data["covers"] is True and data["complete"] is True


def test_genclose_non_covering_seed(tmp_path, capsys):
    path = write_family(tmp_path, 2)
    assert cli.main(["genclose", path, "--seed", "0,2,3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["covers"] is False and data["complete"] is True
    assert data["generated"] == [0, 2, 3]


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.arr"
    bad.write_text("dim two\n1 0\n")
    assert cli.main(["analyze", str(bad)]) == 2
    assert "parse error" in capsys.readouterr().err
    assert cli.main(["chi", str(tmp_path / "missing.arr")]) == 2
    assert "parse error" in capsys.readouterr().err


def test_bad_index_list_exit_code(tmp_path, capsys):
    path = write_family(tmp_path, 3)
    assert cli.main(["genclose", path, "--seed", "0,x"]) == 2
    assert "parse error" in capsys.readouterr().err
