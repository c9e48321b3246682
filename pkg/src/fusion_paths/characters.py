"""Graded characters of Verlinde path sets and their transfer-matrix recursions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .laurent import LaurentPoly3
from .linalg import rational_rank
from .paths import VerlindePath, enumerate_vpaths, gradings, left_index, right_index
from .verlinde import is_admissible, verlinde_numbers

Label = Tuple[int, int]


def _pos(t: int) -> int:
    return t if t > 0 else 0


def path_weight(path: VerlindePath) -> LaurentPoly3:
    g = gradings(path)
    return LaurentPoly3.monomial(g.e, g.s1, g.s2)


def _sum(paths) -> LaurentPoly3:
    acc: Dict[Tuple[int, int, int], int] = {}
    for p in paths:
        g = gradings(p)
        key = (g.e, g.s1, g.s2)
        acc[key] = acc.get(key, 0) + 1
    return LaurentPoly3(acc)


@lru_cache(maxsize=None)
def char_full(k: int, l: int, N: int) -> LaurentPoly3:
    if N < 1:
        raise ValueError("characters need N >= 1")
    return _sum(enumerate_vpaths(k, l, N))


def char_right(k: int, l: int, N: int, i: int, j: int) -> LaurentPoly3:
    """chi[*; i, j]: paths ending at alpha_N = i with (alpha_N + beta_{N-1} - alpha_{N-1}) / 2 = j."""
    if N < 2:
        raise ValueError("right partial characters need N >= 2")
    _check_range(k, i, j)
    return _sum(p for p in enumerate_vpaths(k, l, N) if p.alpha[-1] == i and right_index(p) == j)


def char_left(k: int, l: int, N: int, i: int) -> LaurentPoly3:
    """chi[i; *]: paths with (alpha_1 + beta_1 - alpha_2) / 2 = i."""
    if N < 1:
        raise ValueError("left partial characters need N >= 1")
    if not 0 <= i <= k:
        raise ValueError(f"selector {i} out of range")
    return _sum(p for p in enumerate_vpaths(k, l, N) if left_index(p) == i)


def char_both(k: int, N: int, i: int, l: int, ip: int, lp: int) -> LaurentPoly3:
    """chi[i, l; i', l']: weight l, left index i, last weight l', right index i'."""
    if N < 2:
        raise ValueError("two-sided partial characters need N >= 2")
    _check_range(k, l, i)
    _check_range(k, lp, ip)
    return _sum(
        p for p in enumerate_vpaths(k, l, N) if left_index(p) == i and p.alpha[-1] == lp and right_index(p) == ip
    )


def _check_range(k: int, top: int, low: int) -> None:
    if not (0 <= top <= k and 0 <= low <= k):
        raise ValueError(f"selector {(top, low)} out of range for level {k}")


def partial_char(k: int, l: Optional[int], N: int, selector: Tuple) -> LaurentPoly3:
    """Dispatch on selector: ('right', i, j), ('left', i) or ('both', i, i', l') with weight l."""
    kind = selector[0]
    if kind == "right":
        return char_right(k, l, N, selector[1], selector[2])
    if kind == "left":
        return char_left(k, l, N, selector[1])
    if kind == "both":
        return char_both(k, N, selector[1], l, selector[2], selector[3])
    raise ValueError(f"unknown selector {selector!r}")


# --- transfer matrices ----------------------------------------------------


def labels(k: int) -> List[Label]:
    """Pairs (top, low) with 0 <= low <= top <= k, ordered lexicographically."""
    return [(t, s) for t in range(k + 1) for s in range(t + 1)]


@dataclass(frozen=True)
class TransferMatrix:
    name: str
    k: int
    N: Optional[int]
    labels: Tuple[Label, ...]
    entries: Tuple[Tuple[LaurentPoly3, ...], ...]

    def __getitem__(self, idx: Tuple[Label, Label]) -> LaurentPoly3:
        r, c = idx
        return self.entries[self.labels.index(r)][self.labels.index(c)]

    @property
    def size(self) -> int:
        return len(self.labels)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "k": self.k,
            "N": self.N,
            "labels": [list(x) for x in self.labels],
            "rows": [[e.to_json() for e in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TransferMatrix":
        return cls(
            data["name"],
            int(data["k"]),
            data.get("N"),
            tuple(tuple(x) for x in data["labels"]),
            tuple(tuple(LaurentPoly3.from_json(e) for e in row) for row in data["rows"]),
        )


def r_entry(k: int, N: int, i: int, j: int, ip: int, jp: int) -> LaurentPoly3:
    if not is_admissible(ip, 2 * j - i + ip, i, k):
        return LaurentPoly3.zero()
    t = _pos(i - j - jp)
    return LaurentPoly3.monomial(N * i - (N - 1) * t, jp - _pos(j + jp - i), i - t)


def l_entry(k: int, l: int, i: int, lp: int, ip: int) -> LaurentPoly3:
    if not is_admissible(l, 2 * i - l + lp, lp, k):
        return LaurentPoly3.zero()
    s = lp + i - l - _pos(ip + i - l)
    return LaurentPoly3.monomial(s + ip, s, s + i)


def l_entry_from_gradings(k: int, l: int, i: int, lp: int, ip: int) -> LaurentPoly3:
    """Grading increment of left concatenation: (q z1 z2)^b z2^a with (a, b) = c_C increment."""
    if not is_admissible(l, 2 * i - l + lp, lp, k):
        return LaurentPoly3.zero()
    s = lp + i - l - _pos(ip + i - l)
    return LaurentPoly3.monomial(s, s, s + i)


def r_matrix(k: int, N: int) -> TransferMatrix:
    labs = tuple(labels(k))
    rows = tuple(tuple(r_entry(k, N, i, j, ip, jp) for ip, jp in labs) for i, j in labs)
    return TransferMatrix("R", k, N, labs, rows)


def l_matrix(k: int, from_gradings: bool = False) -> TransferMatrix:
    """The left transfer matrix.

    By default the entries carry the column factor q^{i'}; with from_gradings=True
    that factor is dropped, which is what the energy of a prepended step produces.
    """
    entry = l_entry_from_gradings if from_gradings else l_entry
    labs = tuple(labels(k))
    rows = tuple(tuple(entry(k, l, i, lp, ip) for lp, ip in labs) for l, i in labs)
    return TransferMatrix("L0" if from_gradings else "L", k, None, labs, rows)


def verify_right_recursion(k: int, l: int, N: int) -> bool:
    R = r_matrix(k, N)
    for i, j in R.labels:
        rhs = LaurentPoly3.zero()
        for ip, jp in R.labels:
            entry = R[(i, j), (ip, jp)]
            if entry:
                rhs = rhs + entry * char_right(k, l, N, ip, jp)
        if char_right(k, l, N + 1, i, j) != rhs:
            return False
    return True


def verify_left_recursion(k: int, l: int, N: int, matrix: Optional[TransferMatrix] = None) -> bool:
    L = matrix if matrix is not None else l_matrix(k)
    for i in range(k + 1):
        rhs = LaurentPoly3.zero()
        if i <= l:
            for lp, ip in L.labels:
                entry = L[(l, i), (lp, ip)]
                if entry:
                    rhs = rhs + entry * char_left(k, lp, N, ip).substitute(1, 1)
        if char_left(k, l, N + 1, i) != rhs:
            return False
    return True


def verify_conjugation_identity(k: int, N: int) -> bool:
    labs = labels(k)
    for l, i in labs:
        for lp, ip in labs:
            lhs = char_both(k, N, i, l, ip, lp)
            other = char_both(k, N, ip, lp, i, l).substitute(-1, N - 1)
            pref = LaurentPoly3.monomial((N - 1) * (lp - ip), lp - ip - l + i, lp - ip - l + i)
            if lhs != pref * other:
                return False
    return True


def verify_sum_identities(k: int, N: int) -> bool:
    """Marginals of chi[i, l; i', l'] reproduce the coarser partial characters."""
    labs = labels(k)
    for l in range(k + 1):
        total = LaurentPoly3.zero()
        for i in range(l + 1):
            row = LaurentPoly3.zero()
            for lp, ip in labs:
                row = row + char_both(k, N, i, l, ip, lp)
            if row != char_left(k, l, N, i):
                return False
            total = total + row
        if total != char_full(k, l, N):
            return False
        for lp, ip in labs:
            col = LaurentPoly3.zero()
            for i in range(l + 1):
                col = col + char_both(k, N, i, l, ip, lp)
            if col != char_right(k, l, N, lp, ip):
                return False
    return True


# --- rank at specializations ---------------------------------------------


def _evaluate_matrix(m: TransferMatrix, q: Fraction, z1: Fraction, z2: Fraction) -> List[List[Fraction]]:
    return [[Fraction(e.evaluate(q, z1, z2)) for e in row] for row in m.entries]


def _random_fraction(rng: random.Random) -> Fraction:
    while True:
        f = Fraction(rng.randint(-97, 97), rng.randint(1, 97))
        if f not in (0, 1, -1):
            return f


def rank_at_specialization(m: TransferMatrix, trials: int = 3, seed: int = 0) -> Tuple[int, int]:
    """(generic rank at random rational points, rank on the locus q = z1*z2 = 1)."""
    rng = random.Random(seed)
    generic = 0
    degenerate = 0
    for _ in range(max(trials, 3)):
        q, z1, z2 = (_random_fraction(rng) for _ in range(3))
        generic = max(generic, rational_rank(_evaluate_matrix(m, q, z1, z2)))
        z = _random_fraction(rng)
        degenerate = max(degenerate, rational_rank(_evaluate_matrix(m, Fraction(1), z, 1 / z)))
    return generic, degenerate


def char_at_one(k: int, l: int, N: int) -> int:
    return int(char_full(k, l, N).evaluate(1, 1, 1))


def verlinde_specialization_holds(k: int, l: int, N: int) -> bool:
    return char_at_one(k, l, N) == verlinde_numbers(k, N)[l]
