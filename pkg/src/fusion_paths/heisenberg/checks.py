"""Dimension and character identities checked against the brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..characters import char_left
from ..laurent import LaurentPoly3
from ..linalg import Echelon, rank_of
from ..paths import enumerate_cpaths, refined_cpaths
from ..verlinde import verlinde_numbers
from .algebra import FAMILIES, NormalMonomial, Vector, apply_monomial, apply_word
from .coinvariants import CoinvariantSpec, CoinvariantTable, coinvariant_dims
from .modules import ModuleSpec, Quotient


@dataclass
class CheckResult:
    ok: bool
    stabilized: bool = True
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok and self.stabilized


@lru_cache(maxsize=None)
def table(family: str, k: int, l1: int, l2: int, l3: Optional[int], M: int, N: int,
          cutoff: bool = True) -> CoinvariantTable:
    spec = ModuleSpec(family, k, l1, l2, l3)
    return coinvariant_dims(CoinvariantSpec(spec, M, N, cutoff=cutoff))


def w_table(k: int, l1: int, l2: int, M: int, N: int, l3: Optional[int] = None, cutoff: bool = True) -> CoinvariantTable:
    """W^{(M,N)}[l1,l2,l3]; the two-index form uses l3 = l1 + l2 - k."""
    return table("W", k, l1, l2, l1 + l2 - k if l3 is None else l3, M, N, cutoff)


def _mono(eq: int, ez1: int, ez2: int) -> LaurentPoly3:
    return LaurentPoly3.monomial(eq, ez1, ez2)


def aux_indices(k: int, l: int, i: int, M: int, N: int) -> Tuple[int, int]:
    """(l1, l2) of the W space whose dimension counts paths with a_0 = i.

    For N = 0 < M the roles of e and f are exchanged and so are the two indices.
    """
    if N == 0 and M > 0:
        return k - i, k - l + i
    return k - l + i, k - i


def verify_aux_dimension(k: int, l: int, i: int, M: int, N: int) -> CheckResult:
    l1, l2 = aux_indices(k, l, i, M, N)
    t = w_table(k, l1, l2, M, N)
    if M + N == 0:
        expected = int(l == 0 and i == 0)
    else:
        expected = len(refined_cpaths(k, l, M + N, i))
    return CheckResult(t.total == expected, t.stabilized, f"oracle {t.total}, paths {expected}")


def w_recursion_terms(k: int, l1: int, l2: int, l3: int) -> List[Tuple[int, int, int, int]]:
    """(a, c, l1', l2') summands of the W recursion."""
    out = []
    for a in range(l3 + 1):
        for c in range(l2 - a + 1):
            out.append((a, c, min(k - a, l1 + c - a), k - c))
    return out


def verify_w_recursion(k: int, l1: int, l2: int, l3: int, M: int, N: int, graded: bool = True) -> CheckResult:
    if N < 1:
        raise ValueError("the recursion lowers N, so N >= 1 is required")
    lhs = w_table(k, l1, l2, M, N, l3)
    stable = lhs.stabilized
    dim_sum = 0
    char_sum = LaurentPoly3.zero()
    for a, c, p1, p2 in w_recursion_terms(k, l1, l2, l3):
        t = w_table(k, p1, p2, M, N - 1)
        stable = stable and t.stabilized
        dim_sum += t.total
        char_sum = char_sum + _mono(a + c, a, a + c) * t.character().substitute(1, 1)
    ok = lhs.total == dim_sum
    if graded:
        ok = ok and lhs.character() == char_sum
    return CheckResult(ok, stable, f"lhs {lhs.total}, rhs {dim_sum}")


def verify_character_bridge(k: int, l: int, N: int) -> CheckResult:
    """z2^i chi(W^{(0,N)}[k-l+i,k-i]) equals the left partial path character."""
    ok, stable = True, True
    for i in range(l + 1):
        t = w_table(k, k - l + i, k - i, 0, N)
        stable = stable and t.stabilized
        ok = ok and _mono(0, 0, i) * t.character() == char_left(k, l, N, i)
    return CheckResult(ok, stable)


def verify_w_sum_identity(k: int, l: int, M: int, N: int) -> CheckResult:
    """sum_i z2^i chi(W^{(M,N)}[k-l+i,k-i]) = chi(V[k-l,l]^{(M,N)})."""
    v = table("V", k, k - l, l, 0, M, N)
    acc = LaurentPoly3.zero()
    stable = v.stabilized
    for i in range(l + 1):
        t = w_table(k, k - l + i, k - i, M, N)
        stable = stable and t.stabilized
        acc = acc + _mono(0, 0, i) * t.character()
    return CheckResult(acc == v.character(), stable)


def verify_verlinde_dimension(k: int, l: int, M: int, N: int) -> CheckResult:
    total = 0
    stable = True
    for i in range(l + 1):
        l1, l2 = aux_indices(k, l, i, M, N)
        t = w_table(k, l1, l2, M, N)
        total += t.total
        stable = stable and t.stabilized
    expected = verlinde_numbers(k, M + N)[l]
    return CheckResult(total == expected, stable, f"{total} vs {expected}")


# exact sequences: (middle, sub, quotient, weight shift of the sub)

def sequence_terms(kind: str, k: int, l1: int, l2: int, l3: Optional[int] = None):
    if kind == "V":
        return (("V", l1, l2, 0), ("W", l1 + l2, k - l2, l1), ("V", l1, l2 - 1, 0), (0, 0, l2))
    if kind == "U":
        return (("U", l1, l2, 0), ("W", k - l1, l1 + l2, l2), ("U", l1 - 1, l2, 0), (0, l1, 0))
    if kind == "Vbar":
        return (("Vbar", l1, l2, None), ("Vbar", l1 - 1, l2 - 1, None), ("V", l1, l2, 0), (0, 1, 1))
    if kind == "Ubar":
        return (("Ubar", l1, l2, None), ("Ubar", l1 - 1, l2 - 1, None), ("U", l1, l2, 0), (0, 1, 1))
    if kind == "Wbar":
        s = l1 + l2 - k + 1
        return (("Wbar", l1, l2, None), ("Wbar", k - l2 - 1, k - l1 - 1, None),
                ("W", l1, l2, l1 + l2 - k), (s, s, s))
    if kind == "W":
        l3 = min(l1, l2) if l3 is None else l3
        return (("W", l1, l2, l3), ("W", l1 - 1, l2 - 1, l3 - 1), ("W", l1, l2, 0), (1, 1, 1))
    raise ValueError(f"unknown sequence {kind!r}")


SEQUENCE_KINDS = ("V", "U", "Vbar", "Ubar", "Wbar", "W")


def sequence_applies(kind: str, k: int, l1: int, l2: int, M: int = 1, N: int = 1) -> bool:
    """Parameter range in which the sequence is claimed exact on (M, N) coinvariants."""
    if kind in ("V", "U", "Wbar"):
        ok = l1 + l2 >= k
    else:
        ok = l1 + l2 <= k
    if kind in ("V", "U", "Vbar"):
        ok = ok and M > 0
    if kind == "Ubar":
        ok = ok and N > 0
    return ok


def _term_table(term, k: int, M: int, N: int) -> Optional[CoinvariantTable]:
    family, a, b, c = term
    if min(a, b) < 0 or (c is not None and c < 0):
        return None
    return table(family, k, a, b, c, M, N)


def verify_exact_sequence_dims(kind: str, k: int, l1: int, l2: int, M: int, N: int) -> CheckResult:
    """Graded additivity dim(middle) = dim(sub shifted) + dim(quotient) at every weight."""
    mid, sub, quo, (sq, s1, s2) = sequence_terms(kind, k, l1, l2)
    chars = []
    stable = True
    for term in (mid, sub, quo):
        t = _term_table(term, k, M, N)
        chars.append(t.character() if t is not None else LaurentPoly3.zero())
        stable = stable and (t is None or t.stabilized)
    ok = chars[0] == _mono(sq, s1, s2) * chars[1] + chars[2]
    return CheckResult(ok, stable)


# coproduct

def _splits(mono: NormalMonomial):
    """Delta(mono) = sum over sub-multisets S of binom * (mono_S (x) mono_rest)."""
    letters = []
    for kind, blk in zip("hef", mono):
        for i, c in blk:
            letters.append((kind, i, c))
    ranges = [range(c + 1) for _, _, c in letters]
    for choice in product(*ranges):
        coef = 1
        left = {"h": {}, "e": {}, "f": {}}
        right = {"h": {}, "e": {}, "f": {}}
        for (kind, i, c), j in zip(letters, choice):
            coef *= comb(c, j)
            if j:
                left[kind][i] = j
            if c - j:
                right[kind][i] = c - j
        yield coef, NormalMonomial.from_counts(left["h"], left["e"], left["f"]), \
            NormalMonomial.from_counts(right["h"], right["e"], right["f"])


def coproduct_injectivity(k1: int, k2: int, split1: Tuple[int, int, int], split2: Tuple[int, int, int],
                          M: int, N: int, max_mn: int = 4) -> CheckResult:
    """Injectivity of W_k^{(M,N)}[l] -> W_{k1}^{(M,N)}[l'] (x) W_{k2}^{(M,N)}[l''] on small weights."""
    k = k1 + k2
    l = tuple(a + b for a, b in zip(split1, split2))
    big = table("W", k, l[0], l[1], l[2], M, N)
    t1 = table("W", k1, *split1, M, N)
    t2 = table("W", k2, *split2, M, N)
    stable = big.stabilized and t1.stabilized and t2.stabilized
    q1 = Quotient(ModuleSpec("W", k1, *split1), M, N)
    q2 = Quotient(ModuleSpec("W", k2, *split2), M, N)
    fam = FAMILIES["W"]
    for weight, basis in big.bases.items():
        if weight[0] + weight[1] > max_mn:
            continue
        images = []
        for mono in basis:
            img: Dict = {}
            for coef, x, y in _splits(mono):
                wx, wy = x.weight, y.weight
                if wx not in t1.dims or wy not in t2.dims:
                    continue
                cx = q1.space(wx).coordinates(q1.reduce(apply_monomial(x, fam, {NormalMonomial(): 1})))
                cy = q2.space(wy).coordinates(q2.reduce(apply_monomial(y, fam, {NormalMonomial(): 1})))
                for bx, vx in cx.items():
                    for by, vy in cy.items():
                        key = (bx, by)
                        img[key] = img.get(key, 0) + coef * vx * vy
            images.append(img)
        denom = 1
        for img in images:
            for v in img.values():
                denom = denom * v.denominator // _gcd(denom, v.denominator)
        ints = [{c: int(v * denom) for c, v in img.items() if v} for img in images]
        if rank_of(ints) != len(basis):
            return CheckResult(False, stable, f"kernel at weight {weight}")
    return CheckResult(True, stable)


def _gcd(a: int, b: int) -> int:
    from math import gcd
    return gcd(a, b)


# vanishing lemmas: each instance is (module, vector word) that must vanish

def _e(i): return ("e", i)
def _f(i): return ("f", i)
def _h(i): return ("h", i)


def lemma_instances(lemma: str, k: int, grid: int = 3):
    """Yield (ModuleSpec, word) pairs; the module's relations realise the hypotheses on v."""
    out = []
    r = range(grid + 1)
    if lemma == "h0-from-e1":
        for a in r:
            for c in range(a + 1):
                # e_1^{a+1} v = f_{-1} v = 0 holds in V_k[a, k, k]
                out.append((ModuleSpec("V", k, a, k, k), (_e(1),) * (a - c) + (_h(0),) * (c + 1)))
                # f_0^{a+1} v = e_0 v = 0 holds in V_k[k, a, k]
                out.append((ModuleSpec("V", k, k, a, k), (_f(0),) * (a - c) + (_h(0),) * (c + 1)))
    elif lemma == "e1-f1":
        for a in range(1, grid + 1):
            for b in r:
                out.append((ModuleSpec("V", k, a - 1, k, k), (_e(1),) * (a + b) + (_f(1),) * b))
    elif lemma == "e1-h1-f1":
        for a in range(1, grid + 1):
            for b in r:
                for c in r:
                    if a - b + c >= 0:
                        word = (_e(1),) * (a - b + c) + (_h(1),) * b + (_f(1),) * c
                        out.append((ModuleSpec("V", k, a - 1, 0, k), word))
    elif lemma == "h2-h1-f1":
        for a in range(1, grid + 1):
            for b in range(a + 1):
                for c in r:
                    extra = ((_h(1),) * b + (_f(1),) * (c + 1),)
                    spec = ModuleSpec("V", k, a - 1, 0, k, extra=extra)
                    out.append((spec, (_h(2),) * (a - b) + (_h(1),) * b + (_f(1),) * c))
    else:
        raise ValueError(f"unknown lemma {lemma!r}")
    return out


def vanishing_lemma_tests(lemma: str, ks: Iterable[int] = (1, 2, 3), grid: int = 3) -> CheckResult:
    for k in ks:
        for spec, word in lemma_instances(lemma, k, grid):
            q = Quotient(spec)
            vec = apply_word(word, spec.fam)
            if not q.vector_is_zero(vec):
                return CheckResult(False, True, f"{spec.label()} {word}")
    return CheckResult(True)


# monomial bases

def is_basis(t: CoinvariantTable, monomials: Sequence[Vector]) -> bool:
    """The given vectors are independent in the coinvariants and as many as its dimension."""
    spec = t.spec
    q = Quotient(spec.module, spec.M, spec.N)
    by_weight: Dict = {}
    for vec in monomials:
        red = q.reduce(vec)
        red = {m: c for m, c in red.items() if c}
        if not red:
            return False
        weights = {m.weight for m in red}
        if len(weights) != 1:
            return False
        w = weights.pop()
        if spec.is_cut(w[0], w[1]):
            return False
        by_weight.setdefault(w, []).append(red)
    if sum(len(v) for v in by_weight.values()) != t.total:
        return False
    for w, vecs in by_weight.items():
        space = q.space(w)
        coords = [space.coordinates(v) for v in vecs]
        denom = 1
        for cd in coords:
            for v in cd.values():
                denom = denom * v.denominator // _gcd(denom, v.denominator)
        ints = [{c: int(v * denom) for c, v in cd.items()} for cd in coords]
        if rank_of(ints) != len(vecs):
            return False
    return True


def parse_monomial(text: str) -> NormalMonomial:
    """'f_2h_1', 'h_2 f_1', '1' -> monomial."""
    import re
    if text.strip() == "1":
        return NormalMonomial()
    counts = {"h": {}, "e": {}, "f": {}}
    for kind, idx, power in re.findall(r"([hef])_(-?\d+)(?:\^(\d+))?", text):
        counts[kind][int(idx)] = counts[kind].get(int(idx), 0) + int(power or 1)
    return NormalMonomial.from_counts(counts["h"], counts["e"], counts["f"])


def fh_candidates_u(k: int, l: int, N: int) -> List[Vector]:
    """f_{N-1}^{a_{N-1}} h_{N-1}^{b_{N-1}} ... f_1^{a_1} h_1^{b_1} e_0^{l - a_0} v_U for paths (a; b)."""
    fam = FAMILIES["U"]
    out = []
    for p in enumerate_cpaths(k, l, N):
        word = []
        for j in range(N - 1, 0, -1):
            word += [_f(j)] * p.a[j] + [_h(j)] * p.b[j - 1]
        word += [_e(0)] * (l - p.a[0])
        out.append(apply_word(word, fam))
    return out


def fh_candidates_w(k: int, l: int, N: int, i: int) -> List[Vector]:
    """The same monomials with f_0^{a_0} stripped, for paths with a_0 = i, acting on v_W."""
    fam = FAMILIES["W"]
    out = []
    for p in refined_cpaths(k, l, N, i):
        word = []
        for j in range(N - 1, 0, -1):
            word += [_f(j)] * p.a[j] + [_h(j)] * p.b[j - 1]
        out.append(apply_word(word, fam))
    return out


def monomial_basis_check(k: int, l: int, N: int) -> CheckResult:
    """Path monomials form bases of U_k[l,k-l]^{(0,N)} and of each W^{(0,N)}[k-l+i,k-i]."""
    u = table("U", k, l, k - l, 0, 0, N)
    ok = is_basis(u, fh_candidates_u(k, l, N)) and u.total == verlinde_numbers(k, N)[l]
    stable = u.stabilized
    for i in range(l + 1):
        w = w_table(k, k - l + i, k - i, 0, N)
        stable = stable and w.stabilized
        ok = ok and is_basis(w, fh_candidates_w(k, l, N, i))
    return CheckResult(ok, stable)


def verify_monomial_table(data: dict) -> CheckResult:
    """Each listed monomial set is a basis of the corresponding W^{(M,N)}[l1,l2] coinvariants."""
    k = int(data["k"])
    fam = FAMILIES["W"]
    stable = True
    for row in data["rows"]:
        M, N = int(row["M"]), int(row["N"])
        for (l1, l2), words in zip(data["columns"], row["spaces"]):
            t = w_table(k, l1, l2, M, N)
            stable = stable and t.stabilized
            vecs = [apply_monomial(parse_monomial(w), fam, {NormalMonomial(): 1}) for w in words]
            if t.total != len(words) or not is_basis(t, vecs):
                return CheckResult(False, stable, f"(M,N)=({M},{N}) W[{l1},{l2}]: dim {t.total}")
    return CheckResult(True, stable)
