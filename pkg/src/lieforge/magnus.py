"""Truncated Magnus expansion of free-group words.

Generators map to 1 + X_i in the ring of noncommutative power series
truncated at a cutoff degree D; inverses map through the truncated
geometric series.  The lowest surviving degree of mu(w) - 1 detects
membership of w in the lower central series, which is what every
degree computation here rests on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .derivations import HomDerivation
from .freelie import LieElement, lie_zero, tensor_to_lyndon
from .words import EndoTable, ReducedWord, exponent_sums, word_gen, word_inverse, word_mul


@dataclass(frozen=True)
class AboveCutoff:
    """Result of a degree computation that exceeded the truncation bound."""

    is_identity: bool = False

    def __repr__(self) -> str:
        return "AboveCutoff(identity)" if self.is_identity else "AboveCutoff"


Degree = int | AboveCutoff


def same_degree(a: Degree, b: Degree) -> bool:
    """Equality of degrees, with every AboveCutoff counting as infinite."""
    if isinstance(a, AboveCutoff) or isinstance(b, AboveCutoff):
        return isinstance(a, AboveCutoff) and isinstance(b, AboveCutoff)
    return a == b


@dataclass
class TruncSeries:
    rank_n: int
    max_degree: int
    coeffs: dict  # monomial tuple over 1..n -> nonzero int

    def constant_term(self) -> int:
        return self.coeffs.get((), 0)

    def degree_slice(self, d: int) -> dict:
        return {m: c for m, c in self.coeffs.items() if len(m) == d}

    def lowest_degree(self) -> int | None:
        """Smallest d >= 1 carrying a nonzero coefficient, None if there is none."""
        best = None
        for m in self.coeffs:
            if m and (best is None or len(m) < best):
                best = len(m)
                if best == 1:
                    break
        return best


def series_one(n: int, d: int) -> TruncSeries:
    return TruncSeries(n, d, {(): 1})


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    if a.rank_n != b.rank_n or a.max_degree != b.max_degree:
        raise ValueError("series mismatch")
    d = a.max_degree
    by_deg: list[list[tuple[tuple[int, ...], int]]] = [[] for _ in range(d + 1)]
    for m, c in b.coeffs.items():
        by_deg[len(m)].append((m, c))
    out: dict[tuple[int, ...], int] = {}
    for ma, ca in a.coeffs.items():
        room = d - len(ma)
        for db in range(room + 1):
            for mb, cb in by_deg[db]:
                key = ma + mb
                nv = out.get(key, 0) + ca * cb
                if nv:
                    out[key] = nv
                else:
                    del out[key]
    return TruncSeries(a.rank_n, d, out)


def series_sub_one(a: TruncSeries) -> dict:
    return {m: c for m, c in a.coeffs.items() if m}


@lru_cache(maxsize=None)
def _letter_series_coeffs(e: int, d: int) -> tuple[int, ...]:
    # binomial coefficients C(e, t) for t = 0..d, valid for negative e too
    out = [1]
    num = 1
    den = 1
    for t in range(1, d + 1):
        num *= e - (t - 1)
        den *= t
        out.append(num // den)
    return tuple(out)


def magnus_expand(w: ReducedWord, d: int) -> TruncSeries:
    """Multiplicative expansion of w, truncated beyond total degree d."""
    if d < 1:
        raise ValueError("cutoff degree must be at least 1")
    series = series_one(w.rank_n, d)
    for g, e in w.letters:
        cs = _letter_series_coeffs(e, d)
        letter = TruncSeries(
            w.rank_n, d, {(g,) * t: cs[t] for t in range(d + 1) if cs[t]}
        )
        series = series_mul(series, letter)
    return series


def gamma_degree(w: ReducedWord, d: int) -> Degree:
    """Smallest degree <= d surviving in mu(w) - 1, else AboveCutoff."""
    if w.is_identity():
        return AboveCutoff(is_identity=True)
    low = magnus_expand(w, d).lowest_degree()
    return AboveCutoff() if low is None else low


def lie_class(w: ReducedWord, d: int) -> LieElement:
    """Leading graded class of w in the free Lie ring, in Lyndon coordinates."""
    deg = gamma_degree(w, d)
    if isinstance(deg, AboveCutoff):
        raise ValueError("word has no class below the cutoff")
    tensor = magnus_expand(w, d).degree_slice(deg)
    coords = tensor_to_lyndon(w.rank_n, tensor)
    return LieElement(w.rank_n, {(deg, p): c for p, c in coords.items()})


class NonIAError(ValueError):
    """Raised when an endomorphism does not act trivially on the abelianization."""


def _displacements(e: EndoTable) -> list[ReducedWord]:
    n = e.rank_n
    return [
        word_mul(e.images[i - 1], word_inverse(word_gen(n, i)))
        for i in range(1, n + 1)
    ]


def a_degree(e: EndoTable, d: int) -> Degree:
    """Largest j <= d-1 with all generator displacements of degree >= j+1.

    Displacement of x_i is e(x_i) x_i^-1; its lowest Magnus degree is the
    generator-level filtration criterion.  AboveCutoff means every
    displacement is trivial up to the cutoff.
    """
    if d < 2:
        raise ValueError("cutoff degree must be at least 2")
    displacements = _displacements(e)
    for i, w in enumerate(displacements, start=1):
        if any(exponent_sums(w)):
            raise NonIAError(
                f"endomorphism is not IA: image of x{i} shifts the abelianization"
            )
    lowest = None
    all_identity = True
    for w in displacements:
        dg = gamma_degree(w, d)
        if isinstance(dg, AboveCutoff):
            all_identity = all_identity and dg.is_identity
            continue
        all_identity = False
        if lowest is None or dg < lowest:
            lowest = dg
    if lowest is None:
        return AboveCutoff(is_identity=all_identity)
    return lowest - 1


def johnson_image(e: EndoTable, d: int) -> HomDerivation:
    """Degree-j derivation X_i -> class of e(x_i) x_i^-1, j = a_degree(e, d)."""
    j = a_degree(e, d)
    if isinstance(j, AboveCutoff):
        raise ValueError("automorphism has no finite degree below the cutoff")
    n = e.rank_n
    images = []
    for w in _displacements(e):
        tensor = magnus_expand(w, j + 1).degree_slice(j + 1)
        coords = tensor_to_lyndon(n, tensor)
        if coords:
            images.append(LieElement(n, {(j + 1, p): c for p, c in coords.items()}))
        else:
            images.append(lie_zero(n))
    return HomDerivation(n, j, tuple(images))


# ---------------------------------------------------------------------------
# truncated series tables of IA automorphisms
#
# Composing automorphisms of F_n on the word level blows up exponentially in
# nesting depth, but everything degree-like only depends on the images'
# expansions below the cutoff.  A SeriesEndo stores S_i = mu(phi(x_i)) and
# composes by substitution X_j -> S_j - 1, so nested commutators stay
# polynomial-sized no matter how long their reduced words would be.


@dataclass
class SeriesEndo:
    rank_n: int
    max_degree: int
    images: tuple  # TruncSeries per generator, constant term 1


def _mul_dicts(a: dict, b: dict, d: int) -> dict:
    by_deg: list[list[tuple[tuple[int, ...], int]]] = [[] for _ in range(d + 1)]
    for m, c in b.items():
        by_deg[len(m)].append((m, c))
    out: dict[tuple[int, ...], int] = {}
    for ma, ca in a.items():
        room = d - len(ma)
        for db in range(room + 1):
            for mb, cb in by_deg[db]:
                key = ma + mb
                nv = out.get(key, 0) + ca * cb
                if nv:
                    out[key] = nv
                else:
                    del out[key]
    return out


def endo_to_series(e: EndoTable, d: int) -> SeriesEndo:
    return SeriesEndo(
        e.rank_n, d, tuple(magnus_expand(w, d) for w in e.images)
    )


def series_endo_identity(n: int, d: int) -> SeriesEndo:
    return SeriesEndo(
        n, d, tuple(magnus_expand(word_gen(n, i), d) for i in range(1, n + 1))
    )


def series_endo_compose(a: SeriesEndo, b: SeriesEndo) -> SeriesEndo:
    """Series table of (a o b): substitute a's images into b's series."""
    if (a.rank_n, a.max_degree) != (b.rank_n, b.max_degree):
        raise ValueError("series endo mismatch")
    n, d = a.rank_n, a.max_degree
    shifted = [series_sub_one(s) for s in a.images]
    prefix_cache: dict[tuple[int, ...], dict] = {(): {(): 1}}

    def prefix_series(mono: tuple[int, ...]) -> dict:
        got = prefix_cache.get(mono)
        if got is None:
            base = prefix_series(mono[:-1])
            got = _mul_dicts(base, shifted[mono[-1] - 1], d)
            prefix_cache[mono] = got
        return got

    images = []
    for s in b.images:
        out: dict[tuple[int, ...], int] = {}
        for mono, c in sorted(s.coeffs.items()):
            for m2, c2 in prefix_series(mono).items():
                nv = out.get(m2, 0) + c * c2
                if nv:
                    out[m2] = nv
                else:
                    del out[m2]
        images.append(TruncSeries(n, d, out))
    return SeriesEndo(n, d, tuple(images))


def series_endo_commutator(
    a: SeriesEndo, a_inv: SeriesEndo, b: SeriesEndo, b_inv: SeriesEndo
) -> SeriesEndo:
    """Series table of the group commutator a b a^-1 b^-1."""
    out = series_endo_compose(a_inv, b_inv)
    out = series_endo_compose(b, out)
    out = series_endo_compose(a, out)
    return out


def _series_displacements(se: SeriesEndo) -> list[TruncSeries]:
    n, d = se.rank_n, se.max_degree
    out = []
    for i, s in enumerate(se.images, start=1):
        out.append(series_mul(s, magnus_expand(word_gen(n, i, -1), d)))
    return out


def series_a_degree(se: SeriesEndo) -> Degree:
    """a_degree computed from a series table; cutoff is the table's max degree."""
    lowest = None
    for i, disp in enumerate(_series_displacements(se), start=1):
        if any(len(m) == 1 for m in disp.coeffs):
            raise NonIAError(
                f"endomorphism is not IA: image of x{i} shifts the abelianization"
            )
        low = disp.lowest_degree()
        if low is not None and (lowest is None or low < lowest):
            lowest = low
    if lowest is None:
        return AboveCutoff()
    return lowest - 1


def series_inverse(s: TruncSeries) -> TruncSeries:
    """Inverse of a series with constant term 1, by the truncated Neumann sum."""
    if s.constant_term() != 1:
        raise ValueError("series must have constant term 1")
    n, d = s.rank_n, s.max_degree
    neg = TruncSeries(n, d, {m: -c for m, c in s.coeffs.items() if m})
    out = series_one(n, d)
    power = series_one(n, d)
    for _ in range(d):
        power = series_mul(power, neg)
        if not power.coeffs:
            break
        out = TruncSeries(n, d, _merge(out.coeffs, power.coeffs))
    return out


def _merge(a: dict, b: dict) -> dict:
    out = dict(a)
    for m, c in b.items():
        nv = out.get(m, 0) + c
        if nv:
            out[m] = nv
        else:
            del out[m]
    return out


def inner_series_endo(w: ReducedWord, d: int) -> SeriesEndo:
    """Series table of conjugation by w, from a single expansion of w."""
    n = w.rank_n
    mu = magnus_expand(w, d)
    mu_inv = series_inverse(mu)
    images = []
    for i in range(1, n + 1):
        s = series_mul(mu, magnus_expand(word_gen(n, i), d))
        images.append(series_mul(s, mu_inv))
    return SeriesEndo(n, d, tuple(images))


def series_johnson_image(se: SeriesEndo) -> HomDerivation:
    j = series_a_degree(se)
    if isinstance(j, AboveCutoff):
        raise ValueError("automorphism has no finite degree below the cutoff")
    n = se.rank_n
    images = []
    for disp in _series_displacements(se):
        coords = tensor_to_lyndon(n, disp.degree_slice(j + 1))
        if coords:
            images.append(LieElement(n, {(j + 1, p): c for p, c in coords.items()}))
        else:
            images.append(lie_zero(n))
    return HomDerivation(n, j, tuple(images))
