"""Graded dimensions and characters of coinvariants V / a^(M,N) V."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from ..laurent import LaurentPoly3
from .algebra import NormalMonomial, Weight
from .modules import ModuleSpec, Quotient

CSV_COLUMNS = ("family", "k", "l1", "l2", "l3", "M", "N", "m", "n", "d", "dim", "stabilized")


@dataclass(frozen=True)
class CoinvariantSpec:
    module: ModuleSpec
    M: int
    N: int
    d_cap: Optional[int] = None
    aux_cap: Optional[int] = None
    aux_step: int = 2
    cutoff: bool = True

    def __post_init__(self) -> None:
        if self.M < 0 or self.N < 0:
            raise ValueError("M and N must be non-negative")
        if self.aux_cap is not None and self.d_cap is not None and self.aux_cap < self.d_cap:
            raise ValueError("aux_cap must be at least d_cap")

    @property
    def cutoff_active(self) -> bool:
        return self.cutoff and self.module.base == "W" and (self.M == 0 or self.N == 0)

    def is_cut(self, m: int, n: int) -> bool:
        """Weight spaces dropped when M or N vanishes (W family only)."""
        if not self.cutoff_active:
            return False
        mod = self.module
        if self.M == 0 and n - 2 * m < mod.k - mod.l1:
            return True
        if self.N == 0 and m - 2 * n < mod.k - mod.l2:
            return True
        return False


@dataclass
class CoinvariantTable:
    spec: CoinvariantSpec
    dims: Dict[Weight, int]
    bases: Dict[Weight, List[NormalMonomial]]
    stabilized: bool
    window: Tuple[int, int]

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def monomials(self) -> List[NormalMonomial]:
        return [b for w in sorted(self.bases) for b in self.bases[w]]

    def character(self) -> LaurentPoly3:
        return LaurentPoly3({(d, m, n): c for (m, n, d), c in self.dims.items() if c})

    def rows(self) -> Iterator[dict]:
        mod = self.spec.module
        for (m, n, d), c in sorted(self.dims.items()):
            yield {"family": mod.family, "k": mod.k, "l1": mod.l1, "l2": mod.l2, "l3": mod.l3,
                   "M": self.spec.M, "N": self.spec.N, "m": m, "n": n, "d": d, "dim": c,
                   "stabilized": int(self.stabilized)}

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in self.rows():
            writer.writerow(row)
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "module": self.spec.module.label(),
            "M": self.spec.M,
            "N": self.spec.N,
            "total": self.total,
            "stabilized": self.stabilized,
            "spaces": [
                {"m": m, "n": n, "d": d, "dim": self.dims[(m, n, d)],
                 "basis": [str(b) for b in self.bases[(m, n, d)]]}
                for (m, n, d) in sorted(self.dims)
            ],
        }


def _degree_range(q: Quotient, m: int, n: int) -> range:
    allowed = q.allowed(10 ** 6)
    top = lambda kind: max(allowed[kind], default=0)
    nh_max = min(m, n)
    hi = 0
    for nh in range(nh_max + 1):
        ne, nf = m - nh, n - nh
        if (ne and not allowed["e"]) or (nf and not allowed["f"]) or (nh and not allowed["h"]):
            continue
        hi = max(hi, nh * top("h") + ne * top("e") + nf * top("f"))
    return range(0, hi + 1)


def _layer_shapes(t: int) -> Iterator[Tuple[int, int]]:
    for m in range(t + 1):
        yield m, t - m


def _collect(cspec: CoinvariantSpec, aux_cap: Optional[int], layer_cap: int):
    q = Quotient(cspec.module, cspec.M, cspec.N, aux_cap=aux_cap)
    dims: Dict[Weight, int] = {}
    bases: Dict[Weight, List[NormalMonomial]] = {}
    empty_run = 0
    t = 0
    max_d = 0
    closed = False
    while t <= layer_cap:
        layer_nonzero = False
        for m, n in _layer_shapes(t):
            for d in _degree_range(q, m, n):
                if cspec.d_cap is not None and d > cspec.d_cap:
                    break
                ws = q.space((m, n, d))
                if ws.columns:
                    max_d = max(max_d, d)
                if ws.dim and not cspec.is_cut(m, n):
                    dims[(m, n, d)] = ws.dim
                    bases[(m, n, d)] = ws.basis
                if ws.dim:
                    layer_nonzero = True
        empty_run = 0 if layer_nonzero else empty_run + 1
        if empty_run >= 2:
            closed = True
            break
        t += 1
    return dims, bases, closed, max_d, t


def default_layer_cap(cspec: CoinvariantSpec) -> int:
    k, M, N = cspec.module.k, cspec.M, cspec.N
    return 2 * k * (M + N) + 4


def coinvariant_dims(cspec: CoinvariantSpec, layer_cap: Optional[int] = None) -> CoinvariantTable:
    """Graded dimensions of the (M, N) coinvariants with a stabilisation flag.

    Weight spaces are scanned by total weight m + n until two consecutive layers
    vanish.  With an explicit aux_cap the run is repeated at aux_cap + aux_step and
    the flag records whether anything changed.
    """
    cap = default_layer_cap(cspec) if layer_cap is None else layer_cap
    dims, bases, closed, max_d, t = _collect(cspec, cspec.aux_cap, cap)
    stable = closed
    if cspec.aux_cap is not None and cspec.aux_cap < max_d:
        dims2, _, closed2, _, _ = _collect(cspec, cspec.aux_cap + cspec.aux_step, cap)
        stable = stable and closed2 and dims2 == dims
    return CoinvariantTable(cspec, dims, bases, stable, (t, max_d))


def oracle_character(cspec: CoinvariantSpec) -> Tuple[LaurentPoly3, bool]:
    table = coinvariant_dims(cspec)
    return table.character(), table.stabilized


def w_coinvariants(k: int, l1: int, l2: int, M: int, N: int, l3: Optional[int] = None, **kw) -> CoinvariantTable:
    """W_k^{(M,N)}[l1,l2,l3] with the cutoff; l3 defaults to l1 + l2 - k."""
    spec = ModuleSpec("W", k, l1, l2, l1 + l2 - k if l3 is None else l3)
    return coinvariant_dims(CoinvariantSpec(spec, M, N, **kw))
