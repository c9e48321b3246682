"""Sparse Laurent polynomials in q, z1, z2 with integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Exp = Tuple[int, int, int]
Number = Union[int, Fraction]

VARS = ("q", "z1", "z2")


class LaurentPoly3:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Exp, int], Iterable[Tuple[Exp, int]], None] = None) -> None:
        acc: Dict[Exp, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for exp, c in items:
            if len(exp) != 3:
                raise ValueError(f"exponent {exp} is not a triple")
            key = (int(exp[0]), int(exp[1]), int(exp[2]))
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    # constructors

    @classmethod
    def zero(cls) -> "LaurentPoly3":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly3":
        return cls({(0, 0, 0): 1})

    @classmethod
    def monomial(cls, eq: int = 0, ez1: int = 0, ez2: int = 0, c: int = 1) -> "LaurentPoly3":
        return cls({(eq, ez1, ez2): c})

    # access

    @property
    def terms(self) -> Dict[Exp, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exp, int]]:
        return iter(self._terms.items())

    def coeff(self, eq: int, ez1: int, ez2: int) -> int:
        return self._terms.get((eq, ez1, ez2), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # arithmetic

    @classmethod
    def _lift(cls, other: object) -> "LaurentPoly3":
        if isinstance(other, LaurentPoly3):
            return other
        if isinstance(other, int):
            return cls({(0, 0, 0): other})
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "LaurentPoly3":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly3(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly3":
        return LaurentPoly3({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: object) -> "LaurentPoly3":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "LaurentPoly3":
        return (-self) + other

    def __mul__(self, other: object) -> "LaurentPoly3":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        out: Dict[Exp, int] = {}
        for (a0, a1, a2), c in self._terms.items():
            for (b0, b1, b2), d in o._terms.items():
                key = (a0 + b0, a1 + b1, a2 + b2)
                out[key] = out.get(key, 0) + c * d
        return LaurentPoly3(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly3":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPoly3({(e[0] * n, e[1] * n, e[2] * n): c ** (-n)})
        out = LaurentPoly3.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # substitutions and evaluation

    def map_exponents(self, fn) -> "LaurentPoly3":
        out: Dict[Exp, int] = {}
        for e, c in self._terms.items():
            key = fn(*e)
            out[key] = out.get(key, 0) + c
        return LaurentPoly3(out)

    def substitute(self, q_sign: int = 1, z2_q_power: int = 0) -> "LaurentPoly3":
        """q -> q^q_sign, then z2 -> z2 * q^z2_q_power."""
        if q_sign not in (1, -1):
            raise ValueError("q_sign must be +1 or -1")
        return self.map_exponents(lambda a, b, c: (q_sign * a + z2_q_power * c, b, c))

    def evaluate(self, q: Number, z1: Number, z2: Number) -> Number:
        total: Number = 0
        for (a, b, c), coef in self._terms.items():
            total += coef * _power(q, a) * _power(z1, b) * _power(z2, c)
        return total

    def truncate(self, max_q: int) -> "LaurentPoly3":
        return LaurentPoly3({e: c for e, c in self._terms.items() if e[0] <= max_q})

    def min_exponents(self) -> Exp:
        if not self._terms:
            return (0, 0, 0)
        return tuple(min(e[i] for e in self._terms) for i in range(3))  # type: ignore[return-value]

    # serialization

    def to_json(self) -> list:
        return [{"q": e[0], "z1": e[1], "z2": e[2], "c": str(c)} for e, c in self._terms.items()]

    @classmethod
    def from_json(cls, data: list) -> "LaurentPoly3":
        return cls({(int(t["q"]), int(t["z1"]), int(t["z2"])): int(t["c"]) for t in data})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0])):
            factors = []
            for name, x in zip(VARS, e):
                if x == 1:
                    factors.append(name)
                elif x:
                    factors.append(f"{name}^{x}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"LaurentPoly3({self})"


def _power(x: Number, n: int) -> Number:
    if n >= 0:
        return x ** n
    return Fraction(1, 1) / Fraction(x) ** (-n)


Q = LaurentPoly3.monomial(1, 0, 0)
Z1 = LaurentPoly3.monomial(0, 1, 0)
Z2 = LaurentPoly3.monomial(0, 0, 1)
