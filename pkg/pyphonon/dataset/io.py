"""Flat-file persistence for datasets: the sample CSV, its provenance sidecar and
the rejects log."""

import csv
import logging
from os import PathLike
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

from pyphonon.const import CSV_HEADER
from pyphonon.dataset.dataset import Dataset, Provenance, Reject, Sample
from pyphonon.dataset.sampling import COORDINATES, Interval, SweepRanges
from pyphonon.exceptions import (
    BaseException,
    DatasetException,
    MalformedRowException,
)
from pyphonon.mixins.xml import XmlMixin
from pyphonon.params import EffectiveParams, HilbertDims

logger = logging.getLogger(__name__)

REJECTS_HEADER = ("index", "delta", "J_re", "J_im", "eps_a", "eps_b", "reason")
PROVENANCE_SCHEMA_VERSION = "1"


def fmt(value: float) -> str:
    """17 significant digits, enough to round-trip any float64."""
    return format(float(value), ".17g")


def encode_row(sample: Sample) -> list[str]:
    params = sample.params
    J = complex(params.J)
    return [
        fmt(params.delta),
        fmt(J.real),
        fmt(J.imag),
        fmt(params.eps_a),
        fmt(params.eps_b),
        fmt(params.gamma),
        fmt(params.n_th),
        str(sample.dims_used.n_cav),
        str(sample.dims_used.n_mech),
        *(fmt(value) for value in sample.x),
        fmt(sample.y),
    ]


def decode_row(row: Sequence[str], line: int) -> Sample:
    if len(row) != len(CSV_HEADER):
        raise MalformedRowException(
            line, f"expected {len(CSV_HEADER)} fields, got {len(row)}"
        )
    values = dict(zip(CSV_HEADER, row))
    try:
        delta, J_re, J_im, eps_a, eps_b, gamma, n_th, p, q, n_c, y = (
            float(values[name])
            for name in CSV_HEADER
            if name not in ("n_cav", "n_mech")
        )
        J = complex(J_re, J_im) if J_im else J_re
        params = EffectiveParams.at(delta, J, eps_a, eps_b, gamma=gamma, n_th=n_th)
        dims = HilbertDims(int(values["n_cav"]), int(values["n_mech"]))
    except (ValueError, BaseException) as error:
        raise MalformedRowException(line, str(error)) from error
    if n_c < 0:
        raise MalformedRowException(line, f"n_c must be >= 0, got {n_c}")
    return Sample(params=params, x=(p, q, n_c), y=y, dims_used=dims)


def write_csv(ds: Dataset, path: str | PathLike) -> None:
    """Write ``ds`` to ``path``; a provenance sidecar is written next to it when
    ``ds`` carries one."""
    path = Path(path)
    with path.open("w", newline="") as stream:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(encode_row(sample) for sample in ds)
    if ds.provenance is not None:
        ProvenanceFile().write(
            ds.provenance, provenance_path(path), ds.provenance_hash()
        )
    logger.info("wrote %d samples to %s", len(ds), path)


def read_csv(path: str | PathLike) -> Dataset:
    """Read a dataset CSV, attaching the provenance sidecar if one exists.

    Raises:
        MalformedRowException: on a bad header or row, with its line number.
        DatasetException: if the file cannot be opened.
    """
    path = Path(path)
    try:
        stream = path.open(newline="")
    except OSError as error:
        raise DatasetException(f"{path}: {error}") from error

    with stream:
        reader = csv.reader(stream)
        header = next(reader, None)
        if header is None:
            raise MalformedRowException(1, "missing header")
        if tuple(header) != CSV_HEADER:
            raise MalformedRowException(
                1, f"header must be {','.join(CSV_HEADER)}, got {','.join(header)}"
            )
        samples = [decode_row(row, reader.line_num) for row in reader if row]

    provenance = None
    sidecar = provenance_path(path)
    if sidecar.exists():
        provenance = ProvenanceFile().read(sidecar)
    return Dataset(samples=samples, provenance=provenance)


def provenance_path(path: str | PathLike) -> Path:
    return Path(path).with_suffix(".provenance.xml")


def rejects_path(path: str | PathLike) -> Path:
    return Path(path).with_suffix(".rejects.csv")


def write_rejects(rejects: Iterable[Reject], path: str | PathLike) -> None:
    rows = []
    for reject in rejects:
        J = complex(reject.params.J)
        rows.append(
            [
                str(reject.index),
                fmt(reject.params.delta_a),
                fmt(J.real),
                fmt(J.imag),
                fmt(reject.params.eps_a),
                fmt(reject.params.eps_b),
                reject.reason,
            ]
        )
    write_table(path, REJECTS_HEADER, rows)


def write_table(
    path: str | PathLike, header: Sequence[str], rows: Iterable[Sequence[Any]]
) -> None:
    """Write plot-ready rows; floats are encoded with 17 significant digits."""
    with Path(path).open("w", newline="") as stream:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(
                fmt(value) if isinstance(value, float) else value for value in row
            )


class ProvenanceFile(XmlMixin):
    """Provenance sidecar: seed, sampling mode, ranges, dims and solver settings."""

    parse_error = DatasetException

    def write(
        self,
        provenance: Provenance,
        path: str | PathLike,
        dataset_hash: Optional[str] = None,
    ) -> None:
        ranges = provenance.ranges
        values: dict[str, Any] = {
            "@schema_version": PROVENANCE_SCHEMA_VERSION,
            "seed": provenance.seed,
            "n": provenance.n,
            "mode": provenance.mode,
            "ranges": {
                "@gamma": fmt(ranges.gamma),
                "@n_th": fmt(ranges.n_th),
                **{
                    name: {
                        "@lower": fmt(ranges.interval(name).lower),
                        "@upper": fmt(ranges.interval(name).upper),
                    }
                    for name in COORDINATES
                },
            },
            "dims": {
                "@n_cav": provenance.dims.n_cav,
                "@n_mech": provenance.dims.n_mech,
            },
            "solver": {
                "@method": provenance.method,
                "@residual_tol": fmt(provenance.residual_tol),
            },
        }
        if provenance.preset is not None:
            values["preset"] = provenance.preset
        if dataset_hash is not None:
            values["dataset_hash"] = dataset_hash
        self.write_xml(self.dict_to_etree("provenance", values), path)

    def read(self, path: str | PathLike) -> Provenance:
        parsed = self.read_xml(path)
        try:
            values = parsed["provenance"]
            if values["@schema_version"] != PROVENANCE_SCHEMA_VERSION:
                raise DatasetException(
                    f"{path}: provenance schema {values['@schema_version']} "
                    f"is not {PROVENANCE_SCHEMA_VERSION}"
                )
            ranges = values["ranges"]
            return Provenance(
                seed=int(values["seed"]),
                n=int(values["n"]),
                mode=values["mode"],
                ranges=SweepRanges(
                    gamma=float(ranges["@gamma"]),
                    n_th=float(ranges["@n_th"]),
                    **{
                        name: Interval(
                            float(ranges[name]["@lower"]), float(ranges[name]["@upper"])
                        )
                        for name in COORDINATES
                    },
                ),
                dims=HilbertDims(
                    int(values["dims"]["@n_cav"]), int(values["dims"]["@n_mech"])
                ),
                method=values["solver"]["@method"],
                residual_tol=float(values["solver"]["@residual_tol"]),
                preset=values.get("preset"),
            )
        except (KeyError, TypeError, ValueError) as error:
            raise DatasetException(
                f"{path}: incomplete provenance ({error})"
            ) from error
