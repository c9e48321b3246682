"""Combinatorial paths, Verlinde paths, and the maps between them.

Storage conventions: a combinatorial path keeps a_0..a_{N-1} and b_1..b_{N-1};
a Verlinde path keeps alpha_1..alpha_N and beta_1..beta_{N-1}.  Boundary
values (b_{-1} = l, b_0 = 0, b_inf = k, zeros beyond N) are never stored.
The length-0 path is the single element of weight 0 with empty sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .verlinde import is_admissible, xyz_decompose

Triple = Tuple[int, int, int]


def _pos(t: int) -> int:
    return t if t > 0 else 0


def _xyz(l: int, lpp: int, lp: int, k: int) -> Triple:
    xyz = xyz_decompose(l, lpp, lp, k)
    if xyz is None:
        raise ValueError(f"triple {(l, lpp, lp)} is not admissible at level {k}")
    return xyz


@dataclass(frozen=True, order=True)
class CombinatorialPath:
    k: int
    l: int
    N: int
    a: Tuple[int, ...]
    b: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.a) != self.N or len(self.b) != max(self.N - 1, 0):
            raise ValueError(f"bad sequence lengths {len(self.a)}, {len(self.b)} for N={self.N}")

    @property
    def a0(self) -> int:
        return self.a[0] if self.N else 0

    def a_at(self, s: int) -> int:
        return self.a[s] if 0 <= s < self.N else 0

    def b_at(self, s: int) -> int:
        if s == -1:
            return self.l
        return self.b[s - 1] if 1 <= s < self.N else 0

    def to_json(self) -> dict:
        return {"k": self.k, "l": self.l, "N": self.N, "a": list(self.a), "b": list(self.b)}

    @classmethod
    def from_json(cls, data: dict) -> "CombinatorialPath":
        return cls(int(data["k"]), int(data["l"]), int(data["N"]), tuple(data["a"]), tuple(data["b"]))


@dataclass(frozen=True, order=True)
class VerlindePath:
    k: int
    l: int
    N: int
    alpha: Tuple[int, ...]
    beta: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.N < 1 or len(self.alpha) != self.N or len(self.beta) != self.N - 1:
            raise ValueError("bad Verlinde path shape")

    def triple(self, i: int) -> Triple:
        """(alpha_i, beta_i, alpha_{i+1}) with beta_N = alpha_N and zeros past N (1-based i)."""
        al = self.alpha
        if i < self.N:
            return al[i - 1], self.beta[i - 1], al[i]
        if i == self.N:
            return al[-1], al[-1], 0
        return 0, 0, 0

    def to_json(self) -> dict:
        return {"k": self.k, "l": self.l, "N": self.N, "alpha": list(self.alpha), "beta": list(self.beta)}

    @classmethod
    def from_json(cls, data: dict) -> "VerlindePath":
        alpha = tuple(data["alpha"])
        return cls(int(data["k"]), int(data.get("l", alpha[0])), len(alpha), alpha, tuple(data["beta"]))


@dataclass(frozen=True)
class GradingTriple:
    e: int
    s1: int
    s2: int


# --- validation -----------------------------------------------------------


def validate_cpath(path: CombinatorialPath) -> Tuple[bool, List[str]]:
    """Check the a_0, triangle and trapezoid conditions; return (ok, violations)."""
    k, l, N = path.k, path.l, path.N
    bad: List[str] = []
    if N == 0:
        if l != 0:
            bad.append("length 0 requires weight 0")
        return not bad, bad
    A, B = path.a_at, path.b_at
    for s in range(N):
        if not 0 <= path.a[s] <= k:
            bad.append(f"a_{s} out of range")
    for s in range(1, N):
        if not 0 <= path.b[s - 1] <= k:
            bad.append(f"b_{s} out of range")
    if path.a[0] > l:
        bad.append("a_0 > l")
    for i in range(N):
        if A(i) + B(i + 1) + A(i + 1) > k:
            bad.append(f"triangle a_{i}+b_{i + 1}+a_{i + 1} > k")
        if B(i) + A(i) + B(i + 1) > k:
            bad.append(f"triangle b_{i}+a_{i}+b_{i + 1} > k")
    for i in range(-1, N):
        for j in range(i + 1, N + 1):
            lhs = sum(B(s) for s in range(i, j + 1))
            rhs = k + sum(A(s) for s in range(i + 1, j - 1))
            if lhs > rhs:
                bad.append(f"trapezoid ({i},{j})")
        # j = infinity, after cancelling b_inf = k
        if sum(B(s) for s in range(i, N)) > sum(A(s) for s in range(i + 1, N)):
            bad.append(f"trapezoid ({i},inf)")
    return not bad, bad


def is_valid_cpath(path: CombinatorialPath) -> bool:
    return validate_cpath(path)[0]


def is_valid_vpath(path: VerlindePath) -> bool:
    if path.alpha[0] != path.l:
        return False
    return all(is_admissible(*path.triple(i), path.k) for i in range(1, path.N + 1))


# --- enumeration ----------------------------------------------------------


def enumerate_cpaths(k: int, l: int, N: int) -> List[CombinatorialPath]:
    """All of C^(N)_{k,l}, sorted lexicographically by (a, b)."""
    return list(_cpaths(k, l, N))


@lru_cache(maxsize=None)
def _cpaths(k: int, l: int, N: int) -> Tuple[CombinatorialPath, ...]:
    if not 0 <= l <= k:
        return ()
    if N == 0:
        return (CombinatorialPath(k, 0, 0, (), ()),) if l == 0 else ()
    found: List[CombinatorialPath] = []
    a = [0] * N
    b = [0] * max(N - 1, 0)

    def A(s: int) -> int:
        return a[s] if 0 <= s < N else 0

    def B(s: int) -> int:
        if s == -1:
            return l
        return b[s - 1] if 1 <= s < N else 0

    def trapezoids_ending_at(j: int) -> bool:
        # every finite pair (i, j) whose entries are all fixed once b_j is known
        for i in range(-1, j):
            if sum(B(s) for s in range(i, j + 1)) > k + sum(A(s) for s in range(i + 1, j - 1)):
                return False
        return True

    def place_a(s: int) -> None:
        hi = l if s == 0 else k
        for v in range(hi + 1):
            a[s] = v
            if s >= 1 and A(s - 1) + B(s) + A(s) > k:
                break
            if s + 1 < N:
                place_b(s + 1)
            else:
                path = CombinatorialPath(k, l, N, tuple(a), tuple(b))
                if is_valid_cpath(path):
                    found.append(path)
        a[s] = 0

    def place_b(s: int) -> None:
        for v in range(k + 1):
            b[s - 1] = v
            if A(s - 1) + B(s) > k or B(s - 1) + A(s - 1) + B(s) > k:
                break
            if not trapezoids_ending_at(s):
                break
            place_a(s)
        b[s - 1] = 0

    place_a(0)
    found.sort(key=lambda p: (p.a, p.b))
    return tuple(found)


def enumerate_vpaths(k: int, l: int, N: int) -> List[VerlindePath]:
    return list(_vpaths(k, l, N))


@lru_cache(maxsize=None)
def _vpaths(k: int, l: int, N: int) -> Tuple[VerlindePath, ...]:
    if not 0 <= l <= k or N < 1:
        return ()
    found: List[VerlindePath] = []

    def grow(alpha: List[int], beta: List[int]) -> None:
        if len(alpha) == N:
            found.append(VerlindePath(k, l, N, tuple(alpha), tuple(beta)))
            return
        for bt in range(k + 1):
            for nxt in range(k + 1):
                if is_admissible(alpha[-1], bt, nxt, k):
                    grow(alpha + [nxt], beta + [bt])

    grow([l], [])
    return tuple(sorted(found, key=lambda p: (p.alpha, p.beta)))


def refined_cpaths(k: int, l: int, N: int, i: int) -> List[CombinatorialPath]:
    """C^(N)_{k,l}[i]: paths with a_0 = i."""
    return [p for p in enumerate_cpaths(k, l, N) if p.a0 == i]


# --- concatenation --------------------------------------------------------


def cpath_increment(l: int, lpp: int, lp: int, a0: int, k: int) -> Tuple[int, int]:
    """The entries (a, b) that c_C(l, l'', l') places in front of a path with first entry a0."""
    x, y, z = _xyz(l, lpp, lp, k)
    return y, z - _pos(a0 - x)


def cpath_concat(l: int, lpp: int, lp: int, path: CombinatorialPath) -> CombinatorialPath:
    """c_C(l, l'', l'): C^(N)_{k,l'} -> C^(N+1)_{k,l}.

    The new entries become a_0 and b_1; old entries move up one index.
    """
    if path.l != lp:
        raise ValueError(f"path weight {path.l} does not match l'={lp}")
    a, b = cpath_increment(l, lpp, lp, path.a0, path.k)
    if path.N == 0:
        if b != 0:
            raise AssertionError("length-0 concatenation produced b != 0")
        return CombinatorialPath(path.k, l, 1, (a,), ())
    return CombinatorialPath(path.k, l, path.N + 1, (a,) + path.a, (b,) + path.b)


def cpath_split(path: CombinatorialPath) -> Tuple[Triple, CombinatorialPath]:
    """Inverse of the recursion: recover (l, l'', l') and the shorter path."""
    if path.N < 1:
        raise ValueError("cannot split a length-0 path")
    k, l = path.k, path.l
    a = path.a[0]
    b = path.b[0] if path.N > 1 else 0
    rest_a0 = path.a[1] if path.N > 1 else 0
    extra = _pos(rest_a0 - (l - a))
    lp = l - a + b + extra
    lpp = a + b + extra
    if not is_admissible(l, lpp, lp, k):
        raise ValueError(f"inconsistent path {path}: recovered triple {(l, lpp, lp)} not admissible")
    rest = CombinatorialPath(k, lp, path.N - 1, path.a[1:], path.b[1:])
    return (l, lpp, lp), rest


def vpath_concat(l: int, lpp: int, lp: int, path: VerlindePath) -> VerlindePath:
    """c_P(l, l'', l'): prepend (l; l'') to a path of weight l'."""
    if path.l != lp:
        raise ValueError(f"path weight {path.l} does not match l'={lp}")
    _xyz(l, lpp, lp, path.k)
    return VerlindePath(path.k, l, path.N + 1, (l,) + path.alpha, (lpp,) + path.beta)


def recursion_partition_check(k: int, l: int, N: int) -> bool:
    """C^(N+1)_{k,l} is the disjoint union of c_C images, also refined by a_0."""
    target = enumerate_cpaths(k, l, N + 1)
    images: List[CombinatorialPath] = []
    refined: Dict[int, List[CombinatorialPath]] = {}
    for lpp in range(k + 1):
        for lp in range(k + 1):
            if not is_admissible(l, lpp, lp, k):
                continue
            i = (l + lpp - lp) // 2
            for src in enumerate_cpaths(k, lp, N):
                img = cpath_concat(l, lpp, lp, src)
                if not is_valid_cpath(img):
                    return False
                images.append(img)
                refined.setdefault(i, []).append(img)
    if len(images) != len(set(images)) or set(images) != set(target):
        return False
    for i in range(l + 1):
        if set(refined.get(i, [])) != {p for p in target if p.a0 == i}:
            return False
    return all(i <= l for i in refined)


# --- bijection and gradings -----------------------------------------------


def bijection_iota(path: VerlindePath) -> CombinatorialPath:
    k, N = path.k, path.N
    t = [path.triple(i) for i in range(1, N + 2)]
    xyz = [xyz_decompose(*tr, k) for tr in t]
    if any(v is None for v in xyz):
        raise ValueError(f"invalid Verlinde path {path}")
    a = tuple(xyz[i][1] for i in range(N))
    b = tuple(xyz[i][2] - _pos(xyz[i + 1][1] - xyz[i][0]) for i in range(N - 1))
    return CombinatorialPath(k, path.l, N, a, b)


def bijection_iota_inverse(path: CombinatorialPath) -> VerlindePath:
    """Peel off one c_C step at a time; each step is one c_P step on the other side."""
    ok, bad = validate_cpath(path)
    if not ok or path.N < 1:
        raise ValueError(f"invalid combinatorial path: {bad or 'length 0'}")
    steps: List[Triple] = []
    cur = path
    while cur.N > 1:
        triple, cur = cpath_split(cur)
        steps.append(triple)
    out = VerlindePath(path.k, cur.l, 1, (cur.l,), ())
    for l, lpp, lp in reversed(steps):
        out = vpath_concat(l, lpp, lp, out)
    return out


def cpath_gradings(path: CombinatorialPath) -> GradingTriple:
    e = sum(i * (path.a[i] + path.b[i - 1]) for i in range(1, path.N))
    s1 = sum(path.b)
    s2 = path.a0 + sum(path.a[1:]) + s1
    return GradingTriple(e, s1, s2)


def gradings(path: VerlindePath) -> GradingTriple:
    return cpath_gradings(bijection_iota(path))


def reverse_vpath(path: VerlindePath) -> VerlindePath:
    if path.N < 2:
        raise ValueError("reversal needs N >= 2")
    return VerlindePath(path.k, path.alpha[-1], path.N, path.alpha[::-1], path.beta[::-1])


def left_index(path: VerlindePath) -> int:
    """i = (alpha_1 + beta_1 - alpha_2) / 2, using the boundary conventions when N = 1."""
    a1, b1, a2 = path.triple(1)
    return (a1 + b1 - a2) // 2


def right_index(path: VerlindePath) -> int:
    """(alpha_N + beta_{N-1} - alpha_{N-1}) / 2, defined for N >= 2."""
    return (path.alpha[-1] + path.beta[-1] - path.alpha[-2]) // 2


def inversion_identities(path: VerlindePath) -> bool:
    """The three grading identities relating a path and its reversal."""
    N, l, lp = path.N, path.alpha[0], path.alpha[-1]
    i, ip = left_index(path), right_index(path)
    g, r = gradings(path), gradings(reverse_vpath(path))
    return (
        r.e + g.e == (N - 1) * (g.s2 + l - i)
        and r.s1 + lp - ip == g.s1 + l - i
        and r.s2 + lp - ip == g.s2 + l - i
    )


# --- multiplication and level-1 decomposition -----------------------------


def multiply_paths(p1, p2):
    """Componentwise sum at level k1+k2 (m_P for Verlinde paths, m_C for combinatorial ones)."""
    if p1.N != p2.N or type(p1) is not type(p2):
        raise ValueError("paths must have equal length and kind")
    if isinstance(p1, VerlindePath):
        out = VerlindePath(p1.k + p2.k, p1.l + p2.l, p1.N,
                           tuple(x + y for x, y in zip(p1.alpha, p2.alpha)),
                           tuple(x + y for x, y in zip(p1.beta, p2.beta)))
        assert is_valid_vpath(out)
        return out
    out = CombinatorialPath(p1.k + p2.k, p1.l + p2.l, p1.N,
                            tuple(x + y for x, y in zip(p1.a, p2.a)),
                            tuple(x + y for x, y in zip(p1.b, p2.b)))
    ok, bad = validate_cpath(out)
    if not ok:
        raise ValueError(f"sum of paths is not a path: {bad}")
    return out


@dataclass(frozen=True)
class Level1Decomposition:
    paths: Tuple[CombinatorialPath, ...]
    triples: Tuple[Triple, ...]

    def concatenated(self) -> Tuple[CombinatorialPath, ...]:
        return tuple(cpath_concat(*t, p) for t, p in zip(self.triples, self.paths))


def _level1_paths(N: int) -> List[CombinatorialPath]:
    return enumerate_cpaths(1, 0, N) + enumerate_cpaths(1, 1, N)


def _split_into_level1(path: CombinatorialPath) -> Optional[Tuple[CombinatorialPath, ...]]:
    """Lexicographically first multiset of k level-1 paths summing to path."""
    pool = _level1_paths(path.N)
    for combo in combinations_with_replacement(range(len(pool)), path.k):
        parts = [pool[j] for j in combo]
        if sum(p.l for p in parts) != path.l:
            continue
        if all(sum(p.a[s] for p in parts) == path.a[s] for s in range(path.N)) and all(
            sum(p.b[s] for p in parts) == path.b[s] for s in range(len(path.b))
        ):
            return tuple(parts)
    return None


def match_level1_triples(parts: Sequence[CombinatorialPath], triple: Triple, k: int) -> Tuple[Triple, ...]:
    """Assign the level-1 summands of (l, l'', l') to the summands of a path by their boundary pairs."""
    l, lpp, lp = triple
    x, y, z = _xyz(l, lpp, lp, k)
    a0 = sum(p.a0 for p in parts)
    pairs = [(p.l, p.a0) for p in parts]
    slots: Dict[Tuple[int, int], List[int]] = {}
    for j, pr in enumerate(pairs):
        slots.setdefault(pr, []).append(j)
    out: List[Optional[Triple]] = [None] * len(parts)

    def take(pr: Tuple[int, int], t: Triple, count: int) -> None:
        for _ in range(count):
            out[slots[pr].pop(0)] = t

    take((0, 0), (1, 1, 0), y)
    take((0, 0), (0, 0, 0), k - x - y - z)
    if a0 >= x:
        take((1, 1), (1, 0, 1), x)
        rest = slots.get((1, 1), []) + slots.get((1, 0), [])
        for j in rest:
            out[j] = (0, 1, 1)
    else:
        take((1, 0), (0, 1, 1), z)
        rest = slots.get((1, 1), []) + slots.get((1, 0), [])
        for j in rest:
            out[j] = (1, 0, 1)
    assert all(t is not None for t in out)
    return tuple(out)  # type: ignore[arg-type]


def level1_decompose(path: CombinatorialPath, triple: Triple) -> Level1Decomposition:
    l, lpp, lp = triple
    if path.l != lp:
        raise ValueError("path weight does not match the triple")
    _xyz(l, lpp, lp, path.k)
    if path.N == 0:
        parts = tuple(CombinatorialPath(1, 0, 0, (), ()) for _ in range(path.k))
    else:
        found = _split_into_level1(path)
        if found is None:
            raise ValueError(f"no level-1 decomposition of {path}")
        parts = found
    return Level1Decomposition(parts, match_level1_triples(parts, triple, path.k))


def sum_cpaths(paths: Iterable[CombinatorialPath]) -> CombinatorialPath:
    items = list(paths)
    out = items[0]
    for p in items[1:]:
        out = CombinatorialPath(out.k + p.k, out.l + p.l, out.N,
                                tuple(x + y for x, y in zip(out.a, p.a)),
                                tuple(x + y for x, y in zip(out.b, p.b)))
    return out


def complete_decomposition_holds(path: CombinatorialPath, triple: Triple) -> bool:
    dec = level1_decompose(path, triple)
    if sum_cpaths(dec.paths) != path:
        return False
    if sum_triples(dec.triples) != triple:
        return False
    return sum_cpaths(dec.concatenated()) == cpath_concat(*triple, path)


def sum_triples(triples: Iterable[Triple]) -> Triple:
    s = [0, 0, 0]
    for t in triples:
        for j in range(3):
            s[j] += t[j]
    return s[0], s[1], s[2]


def iter_all_triples(k: int) -> Iterator[Triple]:
    for l in range(k + 1):
        for lpp in range(k + 1):
            for lp in range(k + 1):
                if is_admissible(l, lpp, lp, k):
                    yield l, lpp, lp
