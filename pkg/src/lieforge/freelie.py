"""The free Lie ring on n generators over Z, in the Lyndon basis.

Basis elements of degree k are the Lyndon words of length k over the
alphabet 1..n, each standing for its standard bracketing (recursing on the
longest proper Lyndon suffix).  Brackets are normalized by expanding into
the tensor algebra and peeling the result back off the triangular Lyndon
expansion; the expansion of a standard bracketing is its own word plus
lexicographically larger terms, which makes the peeling exact and makes
non-Lie tensors detectable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .zlattice import IntLattice, IntMatrix, kernel_basis


# ---------------------------------------------------------------------------
# small number theory helpers


def divisors(k: int) -> list[int]:
    out = [d for d in range(1, k + 1) if k % d == 0]
    return out


def mobius(d: int) -> int:
    if d == 1:
        return 1
    m = d
    primes = 0
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            primes += 1
        else:
            p += 1
    if m > 1:
        primes += 1
    return -1 if primes % 2 else 1


def witt_rank(n: int, k: int) -> int:
    """Rank of the degree-k component of the free Lie ring on n generators."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    total = sum(mobius(s) * n ** (k // s) for s in divisors(k))
    assert total % k == 0
    return total // k


# ---------------------------------------------------------------------------
# Lyndon words


def is_lyndon(w: tuple[int, ...]) -> bool:
    return len(w) >= 1 and all(w < w[i:] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def lyndon_words(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All Lyndon words of length exactly k over 1..n, in lexicographic order."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    out = []
    w = [0]
    while w:
        w[-1] += 1
        if len(w) == k:
            out.append(tuple(w))
        m = len(w)
        while len(w) < k:
            w.append(w[len(w) - m])
        while w and w[-1] == n:
            w.pop()
    return tuple(out)


@dataclass(frozen=True)
class LyndonIndex:
    rank_n: int
    degree: int
    basis_words: tuple[tuple[int, ...], ...]
    position: dict = field(compare=False, repr=False, default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.basis_words)


@lru_cache(maxsize=None)
def lyndon_index(n: int, k: int) -> LyndonIndex:
    words = lyndon_words(n, k)
    idx = LyndonIndex(n, k, words)
    idx.position.update({w: p for p, w in enumerate(words)})
    return idx


@lru_cache(maxsize=None)
def standard_factorization(w: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a Lyndon word as (prefix, longest proper Lyndon suffix)."""
    if len(w) < 2:
        raise ValueError("needs length at least 2")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"{w} is not a Lyndon word")


def multidegree(word: tuple[int, ...], n: int) -> tuple[int, ...]:
    md = [0] * n
    for a in word:
        md[a - 1] += 1
    return tuple(md)


@lru_cache(maxsize=None)
def positions_by_multidegree(n: int, k: int) -> dict:
    groups: dict[tuple[int, ...], list[int]] = {}
    for p, w in enumerate(lyndon_words(n, k)):
        groups.setdefault(multidegree(w, n), []).append(p)
    return groups


# ---------------------------------------------------------------------------
# tensor expansion and triangular extraction


@lru_cache(maxsize=None)
def tensor_expand_word(w: tuple[int, ...]) -> dict:
    """Expansion of the standard bracketing of a Lyndon word in T(Z^n)."""
    if len(w) == 1:
        return {w: 1}
    u, v = standard_factorization(w)
    return _tensor_commutator(tensor_expand_word(u), tensor_expand_word(v))


def _tensor_commutator(a: dict, b: dict) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            c = ca * cb
            k1 = wa + wb
            k2 = wb + wa
            out[k1] = out.get(k1, 0) + c
            out[k2] = out.get(k2, 0) - c
    return {k: v for k, v in out.items() if v}


def tensor_to_lyndon(n: int, tensor: dict) -> dict:
    """Coordinates of a homogeneous Lie tensor in the Lyndon basis.

    Raises ValueError if the tensor is not the expansion of a Lie element.
    """
    work = {k: v for k, v in tensor.items() if v}
    if not work:
        return {}
    degrees = {len(k) for k in work}
    if len(degrees) != 1:
        raise ValueError("tensor is not homogeneous")
    k = degrees.pop()
    pos = lyndon_index(n, k).position
    out: dict[int, int] = {}
    while work:
        m = min(work)
        if m not in pos:
            raise ValueError(f"tensor is not a Lie element (stray monomial {m})")
        c = work[m]
        out[pos[m]] = out.get(pos[m], 0) + c
        for wu, cu in tensor_expand_word(m).items():
            nv = work.get(wu, 0) - c * cu
            if nv:
                work[wu] = nv
            else:
                work.pop(wu, None)
    return {p: v for p, v in out.items() if v}


# ---------------------------------------------------------------------------
# Lie elements


@dataclass
class LieElement:
    """Graded element of the free Lie ring; coeffs maps (degree, position) -> int."""

    rank_n: int
    coeffs: dict

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set[int]:
        return {k for k, _ in self.coeffs}

    def degree(self) -> int | None:
        """Degree if homogeneous (zero counts as homogeneous of any degree)."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise ValueError("element is not homogeneous")
        return ds.pop()

    def homogeneous_part(self, k: int) -> "LieElement":
        return LieElement(
            self.rank_n, {kp: c for kp, c in self.coeffs.items() if kp[0] == k}
        )

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for (k, p), c in sorted(self.coeffs.items()):
            w = lyndon_words(self.rank_n, k)[p]
            word = "".join(str(a) for a in w)
            bits.append(f"{c}*[{word}]")
        return " + ".join(bits)


def lie_zero(n: int) -> LieElement:
    return LieElement(n, {})


def lie_from_word(n: int, word: tuple[int, ...], c: int = 1) -> LieElement:
    if c == 0:
        return lie_zero(n)
    k = len(word)
    p = lyndon_index(n, k).position[word]
    return LieElement(n, {(k, p): c})


def lie_generator(n: int, i: int) -> LieElement:
    return lie_from_word(n, (i,))


def boundary_element(n: int) -> LieElement:
    """X_1 + ... + X_n."""
    return LieElement(n, {(1, i): 1 for i in range(n)})


def lie_add(a: LieElement, b: LieElement) -> LieElement:
    if a.rank_n != b.rank_n:
        raise ValueError("rank mismatch")
    out = dict(a.coeffs)
    for kp, c in b.coeffs.items():
        nv = out.get(kp, 0) + c
        if nv:
            out[kp] = nv
        else:
            out.pop(kp, None)
    return LieElement(a.rank_n, out)


def lie_scale(a: LieElement, c: int) -> LieElement:
    if c == 0:
        return lie_zero(a.rank_n)
    return LieElement(a.rank_n, {kp: c * v for kp, v in a.coeffs.items()})


def lie_neg(a: LieElement) -> LieElement:
    return lie_scale(a, -1)


def lie_sub(a: LieElement, b: LieElement) -> LieElement:
    return lie_add(a, lie_neg(b))


def lie_eq(a: LieElement, b: LieElement) -> bool:
    return a.rank_n == b.rank_n and a.coeffs == b.coeffs


@lru_cache(maxsize=None)
def _basis_bracket(n: int, wa: tuple[int, ...], wb: tuple[int, ...]):
    """Bracket of two basis bracketings, as a (position -> coeff) dict."""
    if wa == wb:
        return {}
    if wb < wa:
        return {p: -c for p, c in _basis_bracket(n, wb, wa).items()}
    t = _tensor_commutator(tensor_expand_word(wa), tensor_expand_word(wb))
    return tensor_to_lyndon(n, t)


def lie_bracket(a: LieElement, b: LieElement) -> LieElement:
    if a.rank_n != b.rank_n:
        raise ValueError("rank mismatch")
    n = a.rank_n
    words_a = lyndon_words
    out: dict[tuple[int, int], int] = {}
    for (ka, pa), ca in a.coeffs.items():
        wa = words_a(n, ka)[pa]
        for (kb, pb), cb in b.coeffs.items():
            wb = words_a(n, kb)[pb]
            c = ca * cb
            k = ka + kb
            for p, v in _basis_bracket(n, wa, wb).items():
                key = (k, p)
                nv = out.get(key, 0) + c * v
                if nv:
                    out[key] = nv
                else:
                    out.pop(key, None)
    return LieElement(n, out)


def to_tensor(a: LieElement) -> dict:
    """Expansion of a homogeneous element in the degree-k tensor component."""
    a.degree()  # raises on inhomogeneous input
    n = a.rank_n
    out: dict[tuple[int, ...], int] = {}
    for (k, p), c in a.coeffs.items():
        w = lyndon_words(n, k)[p]
        for m, v in tensor_expand_word(w).items():
            nv = out.get(m, 0) + c * v
            if nv:
                out[m] = nv
            else:
                out.pop(m, None)
    return out


def lie_coords(a: LieElement, k: int) -> list[int]:
    """Coordinate vector of the degree-k part in the Lyndon basis."""
    vec = [0] * witt_rank(a.rank_n, k)
    for (kk, p), c in a.coeffs.items():
        if kk == k:
            vec[p] = c
    return vec


def lie_from_coords(n: int, k: int, vec) -> LieElement:
    return LieElement(n, {(k, p): int(c) for p, c in enumerate(vec) if c})


def centralizer_of_linear(x: LieElement, k: int) -> IntLattice:
    """Lattice of degree-k elements commuting with a degree-1 element x."""
    if x.is_zero():
        raise ValueError("centralizer of zero is everything; refusing")
    if x.degree() != 1:
        raise ValueError("x must be homogeneous of degree 1")
    n = x.rank_n
    dim_k = witt_rank(n, k)
    dim_k1 = witt_rank(n, k + 1)
    cols = []
    for p in range(dim_k):
        b = lie_from_word(n, lyndon_words(n, k)[p])
        cols.append(lie_coords(lie_bracket(x, b), k + 1))
    rows = [[cols[c][r] for c in range(dim_k)] for r in range(dim_k1)]
    return kernel_basis(IntMatrix.from_rows(rows, dim_k))
