import csv

import pytest

from pyphonon import EffectiveParams, HilbertDims, SweepRanges
from pyphonon.const import CSV_HEADER
from pyphonon.dataset import (
    Dataset,
    Provenance,
    ProvenanceFile,
    Reject,
    Sample,
    read_csv,
    write_csv,
    write_rejects,
)
from pyphonon.dataset.io import fmt, provenance_path, rejects_path
from pyphonon.exceptions import DatasetException, MalformedRowException

header_line = ",".join(CSV_HEADER)
example_row = "0.01,0.2,0,0.002,0.0015,0.001515,0.001,6,10,-0.0056,1e-05,1.6e-05,-1.25"


@pytest.fixture
def provenance() -> Provenance:
    return Provenance(
        seed=7,
        n=3,
        mode="uniform",
        ranges=SweepRanges(),
        dims=HilbertDims(4, 6),
        method="direct",
        residual_tol=1e-10,
        preset="6d",
    )


def test_fmt_round_trips_float64():
    for value in (0.1, 1 / 3, -2.5e-17, 6.02214076e23):
        assert float(fmt(value)) == value


def test_read_example_row(tmp_path):
    path = tmp_path / "data.csv"
    path.write_text(f"{header_line}\n{example_row}\n")

    ds = read_csv(path)

    assert len(ds) == 1
    assert ds.provenance is None
    sample = ds[0]
    assert sample.params == EffectiveParams.at(0.01, 0.2, 0.002, 0.0015)
    assert isinstance(sample.params.J, float)
    assert sample.dims_used == HilbertDims(6, 10)
    assert sample.x == (-0.0056, 1e-05, 1.6e-05)
    assert sample.y == -1.25


def test_complex_coupling_survives(tmp_path):
    params = EffectiveParams.at(0.0, complex(0.1, -0.3), 0.002, 0.002)
    sample = Sample(params=params, x=(0.1, 0.2, 0.3), y=-0.5, dims_used=HilbertDims())
    path = tmp_path / "complex.csv"

    write_csv(Dataset(samples=[sample]), path)

    assert read_csv(path)[0].params.J == complex(0.1, -0.3)


def test_csv_round_trip_is_exact(tmp_path, make_dataset):
    ds = make_dataset(25, seed=3)
    path = tmp_path / "round.csv"

    write_csv(ds, path)
    loaded = read_csv(path)

    assert [sample.x for sample in loaded] == [sample.x for sample in ds]
    assert [sample.y for sample in loaded] == [sample.y for sample in ds]
    assert loaded.provenance_hash() == ds.provenance_hash()
    assert not provenance_path(path).exists()


def test_header_only_file_is_empty_dataset(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text(header_line + "\n")

    assert len(read_csv(path)) == 0


@pytest.mark.parametrize(
    "bad_row",
    [
        "0.01,0.2,0,0.002",
        "0.01,0.2,0,0.002,0.0015,0.001515,0.001,6,10,-0.0056,1e-05,abc,-1.25",
        "0.01,0.2,0,0.002,0.0015,0.001515,0.001,6,10,-0.0056,1e-05,-1.6e-05,-1.25",
        "0.01,0.2,0,0.002,0.0015,-1,0.001,6,10,-0.0056,1e-05,1.6e-05,-1.25",
        "0.01,0.2,0,0.002,0.0015,0.001515,0.001,1,10,-0.0056,1e-05,1.6e-05,-1.25",
    ],
)
def test_malformed_row_reports_line(tmp_path, bad_row: str):
    path = tmp_path / "bad.csv"
    path.write_text(f"{header_line}\n{example_row}\n{example_row}\n{bad_row}\n")

    with pytest.raises(MalformedRowException) as error:
        read_csv(path)

    assert error.value.line == 4
    assert "line 4" in str(error.value)


@pytest.mark.parametrize("content", ["", "delta,J,eps\n"])
def test_bad_header(tmp_path, content: str):
    path = tmp_path / "header.csv"
    path.write_text(content)

    with pytest.raises(MalformedRowException) as error:
        read_csv(path)

    assert error.value.line == 1


def test_missing_file(tmp_path):
    with pytest.raises(DatasetException):
        read_csv(tmp_path / "missing.csv")


def test_provenance_sidecar_round_trip(tmp_path, make_dataset, provenance):
    samples = make_dataset(3).samples
    ds = Dataset(samples=samples, provenance=provenance)
    path = tmp_path / "sweep.csv"

    write_csv(ds, path)
    loaded = read_csv(path)

    assert provenance_path(path) == tmp_path / "sweep.provenance.xml"
    assert loaded.provenance == provenance
    assert "dataset_hash" in provenance_path(path).read_text()
    assert ds.provenance_hash() in provenance_path(path).read_text()


def test_provenance_without_preset(tmp_path, provenance):
    path = tmp_path / "plain.provenance.xml"
    plain = Provenance(
        seed=provenance.seed,
        n=provenance.n,
        mode="grid",
        ranges=SweepRanges.from_preset("2c"),
        dims=provenance.dims,
        method="dense",
        residual_tol=provenance.residual_tol,
    )

    ProvenanceFile().write(plain, path)

    assert ProvenanceFile().read(path) == plain


@pytest.mark.parametrize(
    "content",
    [
        "<provenance",
        '<?xml version="1.0"?><provenance schema_version="1"><seed>1</seed>'
        "</provenance>",
        '<?xml version="1.0"?><provenance schema_version="9"/>',
    ],
)
def test_broken_provenance(tmp_path, content: str):
    path = tmp_path / "broken.provenance.xml"
    path.write_text(content)

    with pytest.raises(DatasetException):
        ProvenanceFile().read(path)


def test_write_rejects(tmp_path):
    params = EffectiveParams.at(0.05, complex(0.2, 0.1), 0.002, 0.0)
    path = rejects_path(tmp_path / "sweep.csv")

    write_rejects([Reject(index=4, params=params, reason="SolverException: x")], path)

    with path.open(newline="") as stream:
        rows = list(csv.reader(stream))
    assert path.name == "sweep.rejects.csv"
    assert rows[0] == ["index", "delta", "J_re", "J_im", "eps_a", "eps_b", "reason"]
    assert rows[1] == [
        "4",
        "0.050000000000000003",
        "0.20000000000000001",
        "0.10000000000000001",
        "0.002",
        "0",
        "SolverException: x",
    ]
