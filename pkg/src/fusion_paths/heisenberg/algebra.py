"""Affine Heisenberg algebra: generators e_i, h_i, f_i with [e_i, f_j] = h_{i+j}, h central.

Elements of U(H) and vectors m.v of an induced module are stored as linear
combinations of PBW-ordered monomials: h-block, then e-block, then f-block.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import factorial
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

Block = Tuple[Tuple[int, int], ...]
Gen = Tuple[str, int]
Weight = Tuple[int, int, int]


def _block(counts: Dict[int, int]) -> Block:
    return tuple(sorted((i, c) for i, c in counts.items() if c))


def _bump(block: Block, idx: int, by: int = 1) -> Block:
    counts = dict(block)
    counts[idx] = counts.get(idx, 0) + by
    return _block(counts)


class NormalMonomial(tuple):
    """PBW monomial h^alpha e^beta f^gamma, stored as three (index, multiplicity) blocks."""

    __slots__ = ()

    def __new__(cls, h: Block = (), e: Block = (), f: Block = ()):
        return tuple.__new__(cls, (tuple(h), tuple(e), tuple(f)))

    @classmethod
    def from_counts(cls, h=None, e=None, f=None) -> "NormalMonomial":
        return cls(_block(dict(h or {})), _block(dict(e or {})), _block(dict(f or {})))

    @classmethod
    def from_word(cls, word: Iterable[Gen]) -> "NormalMonomial":
        """Collect a word of pairwise commuting letters (no e before f issues) into a monomial."""
        parts: Dict[str, Counter] = {"h": Counter(), "e": Counter(), "f": Counter()}
        for kind, idx in word:
            parts[kind][idx] += 1
        return cls.from_counts(parts["h"], parts["e"], parts["f"])

    @property
    def h(self) -> Block:
        return self[0]

    @property
    def e(self) -> Block:
        return self[1]

    @property
    def f(self) -> Block:
        return self[2]

    @property
    def weight(self) -> Weight:
        nh = sum(c for _, c in self[0])
        ne = sum(c for _, c in self[1])
        nf = sum(c for _, c in self[2])
        d = sum(i * c for blk in self for i, c in blk)
        return (ne + nh, nf + nh, d)

    @property
    def length(self) -> int:
        return sum(c for blk in self for _, c in blk)

    def letters(self) -> List[Gen]:
        out: List[Gen] = []
        for kind, blk in zip("hef", self):
            for i, c in blk:
                out.extend([(kind, i)] * c)
        return out

    def __str__(self) -> str:
        parts = []
        for kind, blk in zip("hef", self):
            for i, c in blk:
                parts.append(f"{kind}_{i}" + (f"^{c}" if c > 1 else ""))
        return " ".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"NormalMonomial({self})"


ONE = NormalMonomial()

Vector = Dict[NormalMonomial, int]


def weight_of_gen(gen: Gen) -> Weight:
    kind, i = gen
    return {"e": (1, 0, i), "f": (0, 1, i), "h": (1, 1, i)}[kind]


def add_into(acc: Vector, vec: Vector, scale: int = 1) -> Vector:
    for m, c in vec.items():
        v = acc.get(m, 0) + scale * c
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)
    return acc


# operator level

def left_multiply(gen: Gen, mono: NormalMonomial) -> Vector:
    """gen * mono in U(H), normal ordered."""
    kind, i = gen
    h, e, f = mono
    if kind == "h":
        return {NormalMonomial(_bump(h, i), e, f): 1}
    if kind == "e":
        return {NormalMonomial(h, _bump(e, i), f): 1}
    out: Vector = {NormalMonomial(h, e, _bump(f, i)): 1}
    for j, c in e:
        key = NormalMonomial(_bump(h, i + j), _bump(e, j, -1), f)
        out[key] = out.get(key, 0) - c
    return out


def normal_order(word: Sequence[Gen]) -> Vector:
    """PBW normal form (h, e, f blocks) of a word of generators in U(H)."""
    vec: Vector = {ONE: 1}
    for gen in reversed(word):
        nxt: Vector = {}
        for m, c in vec.items():
            add_into(nxt, left_multiply(gen, m), c)
        vec = nxt
    return vec


_RANK = {"h": 0, "e": 1, "f": 2}


def _out_of_order(a: Gen, b: Gen) -> bool:
    return (_RANK[a[0]], a[1]) > (_RANK[b[0]], b[1])


def rewrite_step(word: Tuple[Gen, ...], pos: int) -> List[Tuple[int, Tuple[Gen, ...]]]:
    """Swap letters pos, pos+1 of a word, returning the resulting terms with coefficients."""
    a, b = word[pos], word[pos + 1]
    swapped = word[:pos] + (b, a) + word[pos + 2:]
    terms = [(1, swapped)]
    if a[0] == "f" and b[0] == "e":
        terms.append((-1, word[:pos] + (("h", a[1] + b[1]),) + word[pos + 2:]))
    elif a[0] == "e" and b[0] == "f":
        terms.append((1, word[:pos] + (("h", a[1] + b[1]),) + word[pos + 2:]))
    return terms


def word_weight(word: Iterable[Gen]) -> Weight:
    m = n = d = 0
    for g in word:
        wm, wn, wd = weight_of_gen(g)
        m, n, d = m + wm, n + wn, d + wd
    return (m, n, d)


def random_rewrite(word: Sequence[Gen], rng: random.Random, check_weight: bool = True) -> Vector:
    """Normal order by swapping randomly chosen out-of-order adjacent letters.

    With check_weight every intermediate term is checked to carry the weight of the input.
    """
    target = word_weight(word)
    pending: Dict[Tuple[Gen, ...], int] = {tuple(word): 1}
    done: Vector = {}
    while pending:
        w = rng.choice(sorted(pending))
        c = pending.pop(w)
        if not c:
            continue
        spots = [p for p in range(len(w) - 1) if _out_of_order(w[p], w[p + 1])]
        if not spots:
            add_into(done, {NormalMonomial.from_word(w): c})
            continue
        for coef, nw in rewrite_step(w, rng.choice(spots)):
            if check_weight and word_weight(nw) != target:
                raise AssertionError(f"rewrite changed weight: {w} -> {nw}")
            pending[nw] = pending.get(nw, 0) + coef * c
    return done


# module level

@dataclass(frozen=True)
class Family:
    """Index thresholds: a generator of kind x and index i is a creation mode iff i >= lo[x]."""

    name: str
    lo_e: int
    lo_f: int
    lo_h: int

    def lo(self, kind: str) -> int:
        return {"e": self.lo_e, "f": self.lo_f, "h": self.lo_h}[kind]

    def creates(self, gen: Gen) -> bool:
        return gen[1] >= self.lo(gen[0])


FAMILIES = {
    "W": Family("W", 1, 1, 1),
    "V": Family("V", 1, 0, 0),
    "U": Family("U", 0, 1, 0),
}


def act(gen: Gen, mono: NormalMonomial, fam: Family) -> Vector:
    """gen . (mono v) in the induced module U(H) v, written in creation-mode monomials."""
    kind, i = gen
    h, e, f = mono
    creates = i >= fam.lo(kind)
    if kind == "h":
        return {NormalMonomial(_bump(h, i), e, f): 1} if creates else {}
    if kind == "e":
        if creates:
            return {NormalMonomial(h, _bump(e, i), f): 1}
        out: Vector = {}
        for j, c in f:
            if i + j >= fam.lo_h:
                key = NormalMonomial(_bump(h, i + j), e, _bump(f, j, -1))
                out[key] = out.get(key, 0) + c
        return out
    out = {NormalMonomial(h, e, _bump(f, i)): 1} if creates else {}
    for j, c in e:
        if i + j >= fam.lo_h:
            key = NormalMonomial(_bump(h, i + j), _bump(e, j, -1), f)
            out[key] = out.get(key, 0) - c
    return out


def act_vector(gen: Gen, vec: Vector, fam: Family) -> Vector:
    out: Vector = {}
    for m, c in vec.items():
        add_into(out, act(gen, m, fam), c)
    return out


def apply_word(word: Sequence[Gen], fam: Family, vec: Optional[Vector] = None) -> Vector:
    """word . vec (default vec = v) in the induced module, rightmost letter first."""
    cur: Vector = dict(vec) if vec is not None else {ONE: 1}
    for gen in reversed(word):
        cur = act_vector(gen, cur, fam)
    return cur


def apply_monomial(mono: NormalMonomial, fam: Family, vec: Vector) -> Vector:
    return apply_word(mono.letters(), fam, vec)


def _compositions(total: int, parts: int, lo: int) -> Iterator[Tuple[int, ...]]:
    """Non-decreasing tuples of `parts` integers >= lo summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    def rec(remaining: int, left: int, start: int) -> Iterator[Tuple[int, ...]]:
        if left == 1:
            if remaining >= start:
                yield (remaining,)
            return
        i = start
        while i * left <= remaining:
            for rest in rec(remaining - i, left - 1, i):
                yield (i,) + rest
            i += 1
    yield from rec(total, parts, lo)


def _multinomial(idx: Sequence[int]) -> int:
    out = factorial(len(idx))
    for c in Counter(idx).values():
        out //= factorial(c)
    return out


def current_power_coefficient(kind: str, power: int, h_power: int, degree: int, fam: Family) -> Vector:
    """Coefficient of degree `degree` in x(z)^power h(z)^h_power v, x = e or f.

    All modes involved commute, so only creation modes survive and every
    monomial appears with its multinomial multiplicity.
    """
    lo_x, lo_h = fam.lo(kind), fam.lo_h
    out: Vector = {}
    min_h = h_power * lo_h
    for dh in range(min_h, degree - power * lo_x + 1):
        for hs in _compositions(dh, h_power, lo_h):
            ch = _multinomial(hs)
            for xs in _compositions(degree - dh, power, lo_x):
                counts = {"h": Counter(hs), kind: Counter(xs)}
                mono = NormalMonomial.from_counts(counts.get("h"), counts.get("e"), counts.get("f"))
                out[mono] = out.get(mono, 0) + ch * _multinomial(xs)
    return out


def monomials_of_weight(weight: Weight, allowed: Dict[str, Sequence[int]]) -> List[NormalMonomial]:
    """All PBW monomials of the given weight whose letters use the allowed indices.

    `allowed[x]` is a sorted finite list of admissible indices for kind x; indices
    must be non-negative so that the degree bounds the search.
    """
    m, n, d = weight
    out: List[NormalMonomial] = []
    if m < 0 or n < 0:
        return out
    for nh in range(min(m, n) + 1):
        ne, nf = m - nh, n - nh
        if (nh and not allowed["h"]) or (ne and not allowed["e"]) or (nf and not allowed["f"]):
            continue
        mins = {x: (allowed[x][0] if allowed[x] else 0) for x in "hef"}
        for hs in _multisets(allowed["h"], nh, d - ne * mins["e"] - nf * mins["f"]):
            dh = sum(hs)
            for es in _multisets(allowed["e"], ne, d - dh - nf * mins["f"]):
                rest = d - dh - sum(es)
                for fs in _multisets(allowed["f"], nf, rest):
                    if sum(fs) == rest:
                        out.append(NormalMonomial.from_counts(Counter(hs), Counter(es), Counter(fs)))
    return out


def _multisets(idx: Sequence[int], size: int, budget: int) -> Iterator[Tuple[int, ...]]:
    """Non-decreasing tuples from idx of the given size with sum <= budget."""
    if size == 0:
        yield ()
        return
    if not idx:
        return
    def rec(start: int, left: int, budget: int) -> Iterator[Tuple[int, ...]]:
        if left == 0:
            yield ()
            return
        for p in range(start, len(idx)):
            v = idx[p]
            if v * left > budget:
                break
            for rest in rec(p, left - 1, budget - v):
                yield (v,) + rest
    yield from rec(0, size, budget)


def is_zero_vector(vec: Vector) -> bool:
    return not any(vec.values())
