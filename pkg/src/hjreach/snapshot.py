"""
Snapshot files: a short text header followed by raw float64 data.

::

    dims 3
    counts 50 50 50
    mins -64.0 -64.0 -64.0
    maxs 64.0 64.0 64.0
    time -2.5
    <prod(counts) little-endian float64 values, column-major>

Header numbers are written with ``repr`` so they round-trip exactly.
"""

from __future__ import annotations

from pathlib import Path
from typing import NamedTuple

import numpy as np

HEADER_KEYS = ("dims", "counts", "mins", "maxs", "time")


class Snapshot(NamedTuple):
    data: np.ndarray
    mins: np.ndarray
    maxs: np.ndarray
    time: float


def write_snapshot(path, data: np.ndarray, mins, maxs, time: float) -> None:
    data = np.asarray(data, dtype=np.float64)
    mins = np.atleast_1d(np.asarray(mins, dtype=np.float64))
    maxs = np.atleast_1d(np.asarray(maxs, dtype=np.float64))
    if not (mins.size == maxs.size == data.ndim):
        raise ValueError(
            f"corner sizes {mins.size}, {maxs.size} do not match a {data.ndim}-D field"
        )

    def fmt(values):
        return " ".join(repr(float(v)) for v in values)

    header = (
        f"dims {data.ndim}\n"
        f"counts {' '.join(str(n) for n in data.shape)}\n"
        f"mins {fmt(mins)}\n"
        f"maxs {fmt(maxs)}\n"
        f"time {float(time)!r}\n"
    )
    with open(path, "wb") as f:
        f.write(header.encode("ascii"))
        f.write(data.astype("<f8").tobytes(order="F"))


def read_snapshot(path) -> Snapshot:
    with open(path, "rb") as f:
        fields = {}
        for key in HEADER_KEYS:
            line = f.readline().decode("ascii").split()
            if not line or line[0] != key:
                raise ValueError(f"{Path(path)}: expected header line {key!r}, got {line}")
            fields[key] = line[1:]
        payload = f.read()

    dims = int(fields["dims"][0])
    counts = tuple(int(n) for n in fields["counts"])
    if len(counts) != dims:
        raise ValueError(f"{Path(path)}: {dims} dims but counts {counts}")
    expected = 8 * int(np.prod(counts))
    if len(payload) != expected:
        raise ValueError(f"{Path(path)}: expected {expected} payload bytes, got {len(payload)}")

    data = np.frombuffer(payload, dtype="<f8").reshape(counts, order="F")
    return Snapshot(
        data=data.astype(np.float64),
        mins=np.array([float(v) for v in fields["mins"]]),
        maxs=np.array([float(v) for v in fields["maxs"]]),
        time=float(fields["time"][0]),
    )
