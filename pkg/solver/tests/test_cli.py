import json

import pytest
from cli import main
from python.common.codec import measure_to_document, spectral_to_document, write_document
from python.pipelines.forward.pipeline import export_spectral_data


def error_of(capsys) -> dict:
    return json.loads(capsys.readouterr().err.strip().splitlines()[-1])


@pytest.fixture
def measure_file(tmp_path, symmetric_star):
    fpath = tmp_path / "measure.json"
    write_document(str(fpath), measure_to_document(symmetric_star))
    return fpath


def test_forward_then_inverse_gives_back_the_document(tmp_path, measure_file):
    spectral = tmp_path / "spectral.json"
    rebuilt = tmp_path / "rebuilt.json"
    assert main(["forward", "--measure", str(measure_file), "--out", str(spectral)]) == 0
    assert main(["inverse", "--spectral", str(spectral), "--out", str(rebuilt)]) == 0
    assert rebuilt.read_bytes() == measure_file.read_bytes()


def test_forward_to_stdout(capsys, measure_file, symmetric_star):
    assert main(["forward", "--measure", str(measure_file)]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document == spectral_to_document(export_spectral_data(symmetric_star))


def test_forward_report(tmp_path, measure_file):
    report = tmp_path / "report.csv"
    argv = ["forward", "--measure", str(measure_file), "--out", str(tmp_path / "s.json"), "--report", str(report)]
    assert main(argv) == 0
    lines = report.read_text().splitlines()
    assert lines[0] == "kind,check,scope,passed,deviation"
    assert all(",True," in line for line in lines[1:])


def test_malformed_json(tmp_path, capsys):
    fpath = tmp_path / "broken.json"
    fpath.write_text("{")
    assert main(["forward", "--measure", str(fpath)]) == 1
    error = error_of(capsys)
    assert error["code"] == "schema_violation"
    assert error["path"] == "$"


def test_missing_input_file(tmp_path, capsys):
    assert main(["forward", "--measure", str(tmp_path / "missing.json")]) == 1
    assert error_of(capsys)["code"] == "file_not_found"


def test_wrong_document_kind(capsys, measure_file):
    assert main(["inverse", "--spectral", str(measure_file)]) == 1
    assert error_of(capsys)["path"] == "$"


def test_invalid_digits(capsys, measure_file):
    assert main(["forward", "--measure", str(measure_file), "--digits", "0"]) == 1
    assert error_of(capsys)["code"] == "invalid_digits"


def test_validate_measure(capsys, measure_file):
    assert main(["validate", "--measure", str(measure_file)]) == 0
    assert json.loads(capsys.readouterr().out) == {"status": "ok"}


def test_validate_rejects_spectral_data(tmp_path, capsys):
    fpath = tmp_path / "spectral.json"
    document = {
        "format": "krein-star/1",
        "graph": {"edges": [{"id": "e1", "length": "1"}, {"id": "e2", "length": "1"}]},
        "sigma": ["4"],
        "sigma_e": {"e1": ["4"]},
    }
    fpath.write_text(json.dumps(document))
    assert main(["validate", "--spectral", str(fpath)]) == 1
    assert error_of(capsys)["code"] == "invalid_spectral_data"


def test_inverse_rejects_invalid_data(tmp_path, capsys):
    fpath = tmp_path / "spectral.json"
    document = {
        "format": "krein-star/1",
        "graph": {"edges": [{"id": "e1", "length": "1"}, {"id": "e2", "length": "1"}]},
        "sigma": ["5"],
        "sigma_e": {"e1": ["4"], "e2": ["4"]},
    }
    fpath.write_text(json.dumps(document))
    assert main(["inverse", "--spectral", str(fpath)]) == 1


def test_oracle(capsys, measure_file):
    assert main(["oracle", "--measure", str(measure_file)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# tol=")
    assert "scope,index,exact,oracle" in out


def test_truncate(tmp_path, measure_file):
    out = tmp_path / "sequence.csv"
    assert main(["truncate", "--measure", str(measure_file), "--cutoffs", "1, 3, 5", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("cutoff,trace,partial_sum,central_mass")
    assert [line.split(",")[1] for line in lines[1:]] == ["0", "0.5", "1"]


def test_truncate_rejects_decreasing_cutoffs(capsys, measure_file):
    assert main(["truncate", "--measure", str(measure_file), "--cutoffs", "5,3"]) == 1
    assert error_of(capsys)["code"] == "invalid_cutoff"


def test_roundtrip_seeds(capsys):
    assert main(["roundtrip", "--seeds", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "# prng=numpy.random.PCG64 seeds=3"
    assert len(lines) == 2 + 3


def test_roundtrip_measure(tmp_path, measure_file):
    report = tmp_path / "report.csv"
    assert main(["roundtrip", "--measure", str(measure_file), "--report", str(report)]) == 0
    assert report.read_text().startswith("# measure\nseed,")


def test_no_command(capsys):
    assert main([]) == 0
    assert "Commands" in capsys.readouterr().out
