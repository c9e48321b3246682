"""Level-k integrable Heisenberg modules V, U, W given by generators and relations.

A module is U(H) v modulo the submodule generated by

* the currents: coefficients of e(z)^{k+1-a} h(z)^a v and f(z)^{k+1-a} h(z)^a v, and
* boundary relations such as e_1^{l1+1} v, f_1^{l2+1} v, h_1^{l3+1} v.

Writing H = n+ (+) b with b the annihilator of v, this submodule equals
U(n+) G where G is the span of the current coefficients together with the
U(b)-closure of the boundary relations.  The current coefficients are already
b-stable because [f_i, e(z)] = -z^{-i} h(z) and [e_i, f(z)] = z^{-i} h(z).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..linalg import Echelon
from .algebra import (
    FAMILIES,
    ONE,
    Family,
    Gen,
    NormalMonomial,
    Vector,
    Weight,
    act_vector,
    add_into,
    apply_monomial,
    apply_word,
    current_power_coefficient,
    monomials_of_weight,
)

BASE_FAMILIES = ("V", "U", "W")
ALL_FAMILIES = ("V", "U", "W", "Vbar", "Ubar", "Wbar")

# boundary generator indices (e, f, h) per family
_BOUNDARY = {"V": (1, 0, 0), "U": (0, 1, 0), "W": (1, 1, 1)}


def pivot_key(mono: NormalMonomial):
    """Longer monomials become leading terms, so quotient bases favour short words."""
    return (mono.length, mono.f, mono.e, mono.h)


@dataclass(frozen=True)
class ModuleSpec:
    family: str
    k: int
    l1: int
    l2: int
    l3: Optional[int] = None
    extra: Tuple[Tuple[Gen, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.family not in ALL_FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.k < 1:
            raise ValueError("level must be positive")
        if self.family.endswith("bar"):
            object.__setattr__(self, "l3", min(self.l1, self.l2))
        elif self.l3 is None:
            raise ValueError("l3 is required for unbarred families")
        object.__setattr__(self, "extra", tuple(tuple(w) for w in self.extra))

    @classmethod
    def two_index(cls, family: str, k: int, l1: int, l2: int) -> "ModuleSpec":
        """V[l1,l2] = V[l1,l2,0], U[l1,l2] = U[l1,l2,0], W[l1,l2] = W[l1,l2,l1+l2-k]."""
        l3 = l1 + l2 - k if family == "W" else 0
        return cls(family, k, l1, l2, l3)

    @property
    def base(self) -> str:
        return self.family[0]

    @property
    def fam(self) -> Family:
        return FAMILIES[self.base]

    @property
    def is_zero(self) -> bool:
        return min(self.l1, self.l2, self.l3) < 0

    def boundary_words(self) -> List[Tuple[Gen, ...]]:
        ie, if_, ih = _BOUNDARY[self.base]
        words = [
            (("e", ie),) * (self.l1 + 1),
            (("f", if_),) * (self.l2 + 1),
            (("h", ih),) * (self.l3 + 1),
        ]
        return words + list(self.extra)

    def label(self) -> str:
        return f"{self.family}_{self.k}[{self.l1},{self.l2},{self.l3}]"


def _b_generators(vec: Vector, fam: Family, slack: Optional[int]) -> List[Gen]:
    """Annihilation modes that can act nontrivially on vec."""
    max_e = max((i for m in vec for i, _ in m.e), default=None)
    max_f = max((i for m in vec for i, _ in m.f), default=None)
    gens: List[Gen] = []
    if max_f is not None:
        gens += [("e", i) for i in range(fam.lo_h - max_f, fam.lo_e)]
    if max_e is not None:
        gens += [("f", i) for i in range(fam.lo_h - max_e, fam.lo_f)]
    if slack is not None:
        gens = [g for g in gens if g[1] >= -slack]
    return gens


class Presentation:
    """Relation generators of a module, organised by weight."""

    def __init__(self, spec: ModuleSpec, slack: Optional[int] = None) -> None:
        self.spec = spec
        self.fam = spec.fam
        self.slack = slack
        self._boundary: Dict[Weight, List[Vector]] = {}
        self._current: Dict[Weight, List[Vector]] = {}
        if not spec.is_zero:
            self._close_boundary()

    def _close_boundary(self) -> None:
        spaces: Dict[Weight, Echelon] = {}
        queue: List[Vector] = []

        def push(vec: Vector) -> None:
            if not vec:
                return
            w = next(iter(vec)).weight
            ech = spaces.setdefault(w, Echelon(pivot_key))
            if ech.add(vec):
                self._boundary.setdefault(w, []).append(vec)
                queue.append(vec)

        for word in self.spec.boundary_words():
            push(apply_word(word, self.fam))
        while queue:
            vec = queue.pop()
            for gen in _b_generators(vec, self.fam, self.slack):
                push(act_vector(gen, vec, self.fam))

    def current_generators(self, weight: Weight) -> List[Vector]:
        if weight not in self._current:
            m, n, d = weight
            k = self.spec.k
            out: List[Vector] = []
            if m == k + 1 and 0 <= n <= k + 1:
                vec = current_power_coefficient("e", k + 1 - n, n, d, self.fam)
                if vec:
                    out.append(vec)
            if n == k + 1 and 0 <= m <= k:
                vec = current_power_coefficient("f", k + 1 - m, m, d, self.fam)
                if vec:
                    out.append(vec)
            self._current[weight] = out
        return self._current[weight]

    def generators_below(self, weight: Weight, aux_cap: Optional[int] = None) -> Iterable[Tuple[Weight, Vector]]:
        """Generators g whose weight lies below `weight` (so that U(n+) g can reach it)."""
        m, n, d = weight
        top = d if aux_cap is None else min(d, aux_cap)
        for w, vecs in self._boundary.items():
            if w[0] <= m and w[1] <= n and w[2] <= top:
                for v in vecs:
                    yield w, v
        k = self.spec.k
        shapes = {(k + 1, a) for a in range(k + 2)} | {(a, k + 1) for a in range(k + 1)}
        for wm, wn in sorted(shapes):
            if wm > m or wn > n:
                continue
            for dd in range(0, top + 1):
                for v in self.current_generators((wm, wn, dd)):
                    yield (wm, wn, dd), v


@dataclass
class WeightSpace:
    weight: Weight
    columns: List[NormalMonomial]
    echelon: Echelon
    basis: List[NormalMonomial]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, vec: Vector):
        return self.echelon.coordinates(vec)

    def is_zero(self, vec: Vector) -> bool:
        return self.echelon.contains(vec)


class Quotient:
    """Weight spaces of a module, or of its (M, N) coinvariants when M, N are given.

    For coinvariants the subalgebra a = span(e_{i>=M}, f_{i>=N}, h_{i>=M+N}) is split
    as a' (+) a_b with a' = a cap n+ and a_b = a cap b.  Modulo a' M every vector is a
    combination of monomials in the finitely many creation modes outside a'.
    """

    def __init__(self, spec: ModuleSpec, M: Optional[int] = None, N: Optional[int] = None,
                 aux_cap: Optional[int] = None, slack: Optional[int] = None) -> None:
        if (M is None) != (N is None):
            raise ValueError("give both M and N or neither")
        self.spec = spec
        self.fam = spec.fam
        self.M, self.N = M, N
        self.aux_cap = aux_cap
        self.pres = Presentation(spec, slack)
        self._spaces: Dict[Weight, WeightSpace] = {}
        self._reduced: Dict[NormalMonomial, Vector] = {}

    @property
    def coinvariant(self) -> bool:
        return self.M is not None

    # coinvariant bookkeeping

    def in_a(self, kind: str, i: int) -> bool:
        if not self.coinvariant:
            return False
        bound = {"e": self.M, "f": self.N, "h": self.M + self.N}[kind]
        return i >= bound

    def allowed(self, d: int) -> Dict[str, List[int]]:
        out = {}
        for kind in "hef":
            lo = self.fam.lo(kind)
            hi = d
            if self.coinvariant:
                hi = min(hi, {"e": self.M, "f": self.N, "h": self.M + self.N}[kind] - 1)
            out[kind] = list(range(lo, hi + 1))
        return out

    def a_b_generators(self) -> List[Gen]:
        """Elements of a acting on v's annihilator side (at most e_0, f_0, h_0)."""
        gens: List[Gen] = []
        if not self.coinvariant:
            return gens
        for kind in "ef":
            for i in range(min(0, self.fam.lo(kind)), self.fam.lo(kind)):
                if self.in_a(kind, i):
                    gens.append((kind, i))
        return gens

    def reduce(self, vec: Vector) -> Vector:
        if not self.coinvariant:
            return dict(vec)
        out: Vector = {}
        for m, c in vec.items():
            add_into(out, self._reduce_mono(m), c)
        return out

    def _reduce_mono(self, mono: NormalMonomial) -> Vector:
        hit = self._reduced.get(mono)
        if hit is not None:
            return hit
        h, e, f = mono
        if any(self.in_a("h", i) for i, _ in h) or any(self.in_a("e", i) for i, _ in e):
            res: Vector = {}
        else:
            big = [i for i, _ in f if self.in_a("f", i)]
            if not big:
                res = {mono: 1}
            else:
                i = big[-1]
                # h^a e^b f^g v = f_i (h^a e^b f^{g - i}) v + sum_j b_j h_{i+j} h^a e^{b - j} f^{g - i} v
                rest = NormalMonomial(h, e, _drop(f, i))
                res = {}
                for j, c in e:
                    nm = NormalMonomial(_add(h, i + j), _drop(e, j), rest.f)
                    add_into(res, self._reduce_mono(nm), c)
        self._reduced[mono] = res
        return res

    # weight spaces

    def columns(self, weight: Weight) -> List[NormalMonomial]:
        return monomials_of_weight(weight, self.allowed(weight[2]))

    def space(self, weight: Weight) -> WeightSpace:
        hit = self._spaces.get(weight)
        if hit is not None:
            return hit
        cols = self.columns(weight) if not self.spec.is_zero else []
        ech = Echelon(pivot_key)
        if cols:
            m, n, d = weight
            for w, g in self.pres.generators_below(weight, self.aux_cap):
                rest = (m - w[0], n - w[1], d - w[2])
                for x in self.columns(rest):
                    ech.add(self.reduce(apply_monomial(x, self.fam, g)))
                    if ech.rank == len(cols):
                        break
                if ech.rank == len(cols):
                    break
            if ech.rank < len(cols):
                for gen in self.a_b_generators():
                    gm, gn, gd = {"e": (1, 0, gen[1]), "f": (0, 1, gen[1])}[gen[0]]
                    for y in self.columns((m - gm, n - gn, d - gd)):
                        ech.add(self.reduce(act_vector(gen, {y: 1}, self.fam)))
        basis = [c for c in cols if c not in ech.rows]
        ws = WeightSpace(weight, cols, ech, basis)
        self._spaces[weight] = ws
        return ws

    def dim(self, weight: Weight) -> int:
        return self.space(weight).dim

    def vector_is_zero(self, vec: Vector) -> bool:
        red = self.reduce(vec)
        red = {m: c for m, c in red.items() if c}
        if not red:
            return True
        weights = {m.weight for m in red}
        if len(weights) != 1:
            return all(self.vector_is_zero({m: c for m, c in red.items() if m.weight == w}) for w in weights)
        return self.space(weights.pop()).is_zero(red)


def _drop(block, idx: int):
    out = []
    for i, c in block:
        if i == idx:
            if c > 1:
                out.append((i, c - 1))
        else:
            out.append((i, c))
    return tuple(out)


def _add(block, idx: int):
    counts = dict(block)
    counts[idx] = counts.get(idx, 0) + 1
    return tuple(sorted(counts.items()))


def weight_space_dim(spec: ModuleSpec, m: int, n: int, d: int, aux_cap: Optional[int] = None):
    """Dimension and a monomial basis of the (m, n, d) weight space of the module."""
    ws = Quotient(spec, aux_cap=aux_cap).space((m, n, d))
    return ws.dim, ws.basis
