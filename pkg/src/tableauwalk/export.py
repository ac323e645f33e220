"""JSON / CSV encodings shared by the CLI and the data exports."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

from .partitions import Partition
from .tableaux import OscillatingTableau
from .walk import DistributionSlice


def partition_to_json(p: Partition) -> str:
    return json.dumps(list(Partition(p)))


def partition_from_json(text: str) -> Partition:
    return Partition(json.loads(text))


def tableau_to_json(t: OscillatingTableau) -> str:
    return json.dumps(t.to_list())


def tableau_from_json(text: str) -> OscillatingTableau:
    return OscillatingTableau(json.loads(text))


def path_to_json(path: Sequence[int]) -> str:
    return json.dumps([int(h) for h in path])


def slices_to_json(slices: Iterable[DistributionSlice]) -> str:
    """``[{"X": 0, "probs": {"Y": "num/den"}}, ...]``; float probabilities as decimal strings."""
    return json.dumps([{"X": s.X, "probs": s.to_json()} for s in slices])


def slices_from_json(text: str) -> list[DistributionSlice]:
    out = []
    for item in json.loads(text):
        probs = {}
        for Y, p in item["probs"].items():
            is_float = any(ch in p for ch in ".eEn")
            probs[int(Y)] = float(p) if is_float else Fraction(p)
        out.append(DistributionSlice(int(item["X"]), probs))
    return out


def curve_csv(xs, values, header=("x", "value")) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for x, v in zip(xs, values):
        w.writerow([repr(float(x)), repr(float(v))])
    return buf.getvalue()


def kernel_csv(xs, matrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x1", "x2", "value"])
    for i, a in enumerate(xs):
        for j, b in enumerate(xs):
            w.writerow([repr(float(a)), repr(float(b)), repr(float(matrix[i][j]))])
    return buf.getvalue()
