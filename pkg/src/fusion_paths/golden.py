"""Reference data shipped with the package: k=1 transfer matrices and the W_1 monomial table."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .characters import TransferMatrix, l_matrix, r_matrix
from .laurent import LaurentPoly3

PathLike = Union[str, Path]


def _load(name: str, path: Optional[PathLike] = None) -> dict:
    if path is not None:
        return json.loads(Path(path).read_text())
    return json.loads(resources.files("fusion_paths").joinpath("data", name).read_text())


def _poly(terms: List[dict], N: Optional[int]) -> LaurentPoly3:
    acc: Dict[Tuple[int, int, int], int] = {}
    for t in terms:
        q = int(t["q"]) + int(t.get("qN", 0)) * (N or 0)
        key = (q, int(t["z1"]), int(t["z2"]))
        acc[key] = acc.get(key, 0) + int(t["c"])
    return LaurentPoly3(acc)


def golden_matrix(name: str, N: Optional[int] = None, path: Optional[PathLike] = None) -> TransferMatrix:
    """The stored k=1 matrix; R entries depend on N through the optional "qN" field."""
    data = _load({"R": "r_matrix_k1.json", "L": "l_matrix_k1.json"}[name], path)
    labels = tuple(tuple(x) for x in data["labels"])
    rows = tuple(tuple(_poly(e, N) for e in row) for row in data["rows"])
    return TransferMatrix(name, int(data["k"]), N, labels, rows)


def matrices_match_golden(Ns=range(2, 7), r_path: Optional[PathLike] = None,
                          l_path: Optional[PathLike] = None) -> bool:
    for N in Ns:
        if golden_matrix("R", N, r_path).entries != r_matrix(1, N).entries:
            return False
    return golden_matrix("L", None, l_path).entries == l_matrix(1).entries


def w1_table(path: Optional[PathLike] = None) -> dict:
    return _load("w1_monomial_table.json", path)
