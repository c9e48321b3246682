"""Exact sparse linear algebra: fraction-free row echelon forms over the integers."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

Vector = Dict[Hashable, int]


def _primitive(vec: Vector) -> Tuple[Vector, int]:
    g = 0
    for c in vec.values():
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        vec = {k: c // g for k, c in vec.items()}
    return vec, g


class Echelon:
    """Incrementally built row space with leading terms chosen by `key` (largest wins).

    Rows are primitive integer vectors with a positive leading coefficient.
    Columns that never become leading terms index a basis of the quotient.
    """

    def __init__(self, key: Callable[[Hashable], object]) -> None:
        self.key = key
        self.rows: Dict[Hashable, Vector] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> List[Hashable]:
        return sorted(self.rows, key=self.key)

    def reduce(self, vec: Mapping[Hashable, int]) -> Tuple[Vector, Fraction]:
        """Return (w, s) with w free of leading terms and vec = w / s modulo the row space."""
        cur: Vector = {c: v for c, v in vec.items() if v}
        scale = Fraction(1)
        while True:
            hits = [c for c in cur if c in self.rows]
            if not hits:
                return cur, scale
            col = max(hits, key=self.key)
            row = self.rows[col]
            a, b = row[col], cur[col]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            out = {c: ma * v for c, v in cur.items()}
            for c, v in row.items():
                nv = out.get(c, 0) - mb * v
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
            out, d = _primitive(out) if out else (out, 1)
            cur = out
            scale = scale * ma / d

    def add(self, vec: Mapping[Hashable, int]) -> bool:
        """Insert a vector; return True if it enlarged the row space."""
        red, _ = self.reduce(vec)
        if not red:
            return False
        red, _ = _primitive(red)
        lead = max(red, key=self.key)
        if red[lead] < 0:
            red = {c: -v for c, v in red.items()}
        self.rows[lead] = red
        return True

    def extend(self, vecs: Iterable[Mapping[Hashable, int]]) -> int:
        return sum(1 for v in vecs if self.add(v))

    def contains(self, vec: Mapping[Hashable, int]) -> bool:
        return not self.reduce(vec)[0]

    def coordinates(self, vec: Mapping[Hashable, int]) -> Dict[Hashable, Fraction]:
        """Coordinates of vec modulo the row space on the non-leading columns."""
        red, scale = self.reduce(vec)
        return {c: Fraction(v) / scale for c, v in red.items()}


def rank_of(vectors: Iterable[Mapping[Hashable, int]]) -> int:
    ech = Echelon(key=repr)
    return ech.extend(vectors)


def rational_rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a dense matrix over Q by Gaussian elimination."""
    rows = [[Fraction(x) for x in r] for r in matrix]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv: Optional[int] = None
        for r in range(rank, len(rows)):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / p
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank
