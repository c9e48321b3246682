"""Level-k Verlinde (fusion) algebra of sl2.

The algebra has basis pi_0..pi_k and product

    pi_l * pi_l' = sum of pi_i,  i = l + l' mod 2,  |l - l'| <= i <= min(2k - l - l', l + l').

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Tuple


def xyz_decompose(alpha: int, beta: int, gamma: int, k: int) -> Optional[Tuple[int, int, int]]:
    """Return (x, y, z) with alpha = x+y, beta = y+z, gamma = x+z, or None if not admissible."""
    if min(alpha, beta, gamma) < 0 or max(alpha, beta, gamma) > k:
        return None
    if (alpha + beta + gamma) % 2:
        return None
    x = (alpha + gamma - beta) // 2
    y = (alpha + beta - gamma) // 2
    z = (beta + gamma - alpha) // 2
    if x < 0 or y < 0 or z < 0 or x + y + z > k:
        return None
    return x, y, z


def is_admissible(alpha: int, beta: int, gamma: int, k: int) -> bool:
    return xyz_decompose(alpha, beta, gamma, k) is not None


def admissible_triples(k: int) -> Iterator[Tuple[int, int, int]]:
    """All admissible triples at level k, in lexicographic order."""
    for a in range(k + 1):
        for b in range(k + 1):
            for c in range(k + 1):
                if is_admissible(a, b, c, k):
                    yield a, b, c


@dataclass(frozen=True)
class AdmissibleTriple:
    alpha: int
    beta: int
    gamma: int
    k: int

    def __post_init__(self) -> None:
        if not is_admissible(self.alpha, self.beta, self.gamma, self.k):
            raise ValueError(f"triple {(self.alpha, self.beta, self.gamma)} is not admissible at level {self.k}")

    @property
    def xyz(self) -> Tuple[int, int, int]:
        result = xyz_decompose(self.alpha, self.beta, self.gamma, self.k)
        assert result is not None
        return result


@dataclass(frozen=True)
class FusionElement:
    k: int
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("level must be positive")
        if len(self.coeffs) != self.k + 1:
            raise ValueError(f"expected {self.k + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def basis(cls, k: int, l: int) -> "FusionElement":
        if not 0 <= l <= k:
            raise ValueError(f"weight {l} out of range for level {k}")
        return cls(k, tuple(int(i == l) for i in range(k + 1)))

    @classmethod
    def one(cls, k: int) -> "FusionElement":
        return cls.basis(k, 0)

    @classmethod
    def total(cls, k: int) -> "FusionElement":
        """pi_0 + pi_1 + ... + pi_k"""
        return cls(k, (1,) * (k + 1))

    def __add__(self, other: "FusionElement") -> "FusionElement":
        _check_level(self, other)
        return FusionElement(self.k, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "FusionElement") -> "FusionElement":
        return fusion_product(self, other)


def _check_level(u: FusionElement, v: FusionElement) -> None:
    if u.k != v.k:
        raise ValueError(f"level mismatch: {u.k} != {v.k}")


def fusion_range(l: int, lp: int, k: int) -> range:
    """Weights i occurring in pi_l * pi_lp."""
    return range(abs(l - lp), min(2 * k - l - lp, l + lp) + 1, 2)


def fusion_product(u: FusionElement, v: FusionElement) -> FusionElement:
    _check_level(u, v)
    k = u.k
    out = [0] * (k + 1)
    for l, cu in enumerate(u.coeffs):
        if not cu:
            continue
        for lp, cv in enumerate(v.coeffs):
            if not cv:
                continue
            for i in fusion_range(l, lp, k):
                out[i] += cu * cv
    return FusionElement(k, tuple(out))


@dataclass(frozen=True)
class VerlindeNumberTable:
    k: int
    N: int
    values: Tuple[int, ...]

    def __getitem__(self, l: int) -> int:
        return self.values[l]

    def to_json(self) -> dict:
        return {"k": self.k, "N": self.N, "values": list(self.values)}


@lru_cache(maxsize=None)
def _verlinde_values(k: int, N: int) -> Tuple[int, ...]:
    if N == 0:
        return FusionElement.one(k).coeffs
    prev = FusionElement(k, _verlinde_values(k, N - 1))
    return (prev * FusionElement.total(k)).coeffs


def verlinde_numbers(k: int, N: int) -> VerlindeNumberTable:
    """Coefficients d^(N)_{k,l} of (pi_0 + ... + pi_k)^N."""
    if k < 1 or N < 0:
        raise ValueError("need k >= 1 and N >= 0")
    return VerlindeNumberTable(k, N, _verlinde_values(k, N))


def verlinde_recursion_check(k: int, l: int, N: int) -> bool:
    """d^(N)_l equals the sum of d^(N-1)_{l'} over admissible (l, l'', l')."""
    lhs = verlinde_numbers(k, N)[l]
    prev = verlinde_numbers(k, N - 1)
    rhs = sum(prev[lp] for lpp in range(k + 1) for lp in range(k + 1) if is_admissible(l, lpp, lp, k))
    return lhs == rhs
