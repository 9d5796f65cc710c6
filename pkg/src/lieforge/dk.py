"""The Drinfeld-Kohno Lie ring realized inside the braid-like derivations.

The degree-one generators are the explicit derivations tau1(i, j); the
degree-k component is the lattice spanned by left-normed brackets of those
generators, computed incrementally in generator-image coordinates.  The
abstract presentation (infinitesimal braid relations) is verified against
the realization, never used as the data structure.

Also hosts the exact Bernoulli / power-sum arithmetic used by the rank
census.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .derivations import (
    HomDerivation,
    braidlike_lattice,
    braidlike_rank_formula,
    der_add,
    der_bracket,
    der_vector,
    der_zero,
    image_dim,
)
from .freelie import lie_bracket, lie_generator, lie_zero, witt_rank
from .zlattice import (
    IntLattice,
    LatticeBuilder,
    lattice_from_rows,
    lattice_member,
    relations_among,
    zero_lattice,
)


@lru_cache(maxsize=None)
def tau1(i: int, j: int, n: int) -> HomDerivation:
    """Degree-1 braid derivation: X_i -> [X_i, X_j], X_j -> [X_j, X_i], 0 else."""
    if not 1 <= i < j <= n:
        raise ValueError("need 1 <= i < j <= n")
    images = []
    for l in range(1, n + 1):
        if l == i:
            images.append(lie_bracket(lie_generator(n, i), lie_generator(n, j)))
        elif l == j:
            images.append(lie_bracket(lie_generator(n, j), lie_generator(n, i)))
        else:
            images.append(lie_zero(n))
    return HomDerivation(n, 1, tuple(images))


def tau1_sym(i: int, j: int, n: int) -> HomDerivation:
    """tau1 extended by the conventions t_ji = t_ij and t_ii = 0."""
    if i == j:
        return der_zero(n, 1)
    if i > j:
        i, j = j, i
    return tau1(i, j, n)


def dk_generator_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def der_bracket_of_generators(i: int, j: int, k: int, n: int) -> HomDerivation:
    """[tau1(t_ik), tau1(t_jk)], the degree-2 derivation of a generator triple."""
    return der_bracket(tau1_sym(i, k, n), tau1_sym(j, k, n))


def xi_derivation(n: int) -> HomDerivation:
    """Sum of all degree-1 generators; the central element of the ring."""
    out = der_zero(n, 1)
    for i, j in dk_generator_pairs(n):
        out = der_add(out, tau1(i, j, n))
    return out


@dataclass(frozen=True)
class DKComponent:
    rank_n: int
    degree: int
    lattice: IntLattice
    bracket_generators: tuple[str, ...]
    spanning: tuple[HomDerivation, ...]

    @property
    def rank(self) -> int:
        return self.lattice.rank


def dk_rank_formula(n: int, k: int) -> int:
    """Sum over l < n of the free Lie ranks d(l, k)."""
    return sum(witt_rank(l, k) for l in range(1, n))


@lru_cache(maxsize=None)
def dk_component(n: int, k: int) -> DKComponent:
    """Degree-k component, spanned by left-normed brackets of the generators.

    Only candidates that enlarge the lattice are kept in the spanning list,
    so the list stays an integral spanning set while the candidate count per
    degree remains (number of generators) x (previous spanning size).
    """
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    if k == 1:
        candidates = [
            (f"t({i},{j})", tau1(i, j, n)) for i, j in dk_generator_pairs(n)
        ]
    else:
        prev = dk_component(n, k - 1)
        candidates = []
        for (i, j) in dk_generator_pairs(n):
            g = tau1(i, j, n)
            for lbl, d in zip(prev.bracket_generators, prev.spanning):
                candidates.append((f"[t({i},{j}),{lbl}]", der_bracket(g, d)))
    builder = LatticeBuilder(image_dim(n, k))
    labels: list[str] = []
    spanning: list[HomDerivation] = []
    for lbl, d in candidates:
        if builder.add(der_vector(d)):
            labels.append(lbl)
            spanning.append(d)
    return DKComponent(n, k, builder.lattice(), tuple(labels), tuple(spanning))


def check_dk_presentation(n: int) -> dict:
    """Verify the infinitesimal braid relations on the tau1 realization."""
    if n < 3:
        raise ValueError("need n >= 3")
    violations: list[str] = []
    checked = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for k in range(1, n + 1):
                if k in (i, j):
                    continue
                lhs = der_bracket(
                    tau1_sym(i, j, n),
                    der_add(tau1_sym(i, k, n), tau1_sym(k, j, n)),
                )
                checked += 1
                if not lhs.is_zero():
                    violations.append(f"[t({i},{j}), t({i},{k}) + t({k},{j})] != 0")
    for i, j in dk_generator_pairs(n):
        for k, l in dk_generator_pairs(n):
            if {i, j} & {k, l}:
                continue
            checked += 1
            if not der_bracket(tau1(i, j, n), tau1(k, l, n)).is_zero():
                violations.append(f"[t({i},{j}), t({k},{l})] != 0")
    for i, j in dk_generator_pairs(n):
        checked += 1
        if tau1_sym(j, i, n) != tau1_sym(i, j, n):
            violations.append(f"t({j},{i}) != t({i},{j})")
    return {"n": n, "checked": checked, "violations": violations, "passed": not violations}


def _central_sublattice(n: int, k: int) -> IntLattice:
    """Elements of the degree-k component commuting with every generator."""
    comp = dk_component(n, k)
    spanning = comp.spanning
    if not spanning:
        return zero_lattice(image_dim(n, k))
    gens = [tau1(i, j, n) for i, j in dk_generator_pairs(n)]
    sparse_vectors = []
    for t, d in enumerate(spanning):
        v: dict[tuple[int, int], int] = {}
        for gi, g in enumerate(gens):
            bracket = der_bracket(d, g)
            for ci, c in enumerate(der_vector(bracket)):
                if c:
                    v[(gi, ci)] = c
        sparse_vectors.append(v)
    kernel = relations_among(sparse_vectors)
    rows = []
    for x in kernel.basis.entries:
        vec = [0] * image_dim(n, k)
        for t, c in enumerate(x):
            if c:
                dv = der_vector(spanning[t])
                for j, val in enumerate(dv):
                    if val:
                        vec[j] += c * val
        rows.append(vec)
    return lattice_from_rows(rows, image_dim(n, k))


def dk_center(n: int, max_degree: int) -> dict[int, IntLattice]:
    """Per-degree center of the ring, tested against the degree-1 generators."""
    if n < 2:
        raise ValueError("need n >= 2")
    return {k: _central_sublattice(n, k) for k in range(1, max_degree + 1)}


def dk_star_center(n: int, max_degree: int) -> dict[int, IntLattice]:
    """Per-degree center of the quotient by the span of the central element.

    A class is central in the quotient exactly when its brackets with the
    degree-1 generators vanish (the central span has no part in degree >= 2),
    so degree k >= 2 agrees with dk_center while degree 1 is reduced modulo
    the central generator.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    out: dict[int, IntLattice] = {}
    centers = dk_center(n, max_degree)
    for k, lat in centers.items():
        if k != 1:
            out[k] = lat
            continue
        xi_vec = der_vector(xi_derivation(n))
        xi_lat = lattice_from_rows([xi_vec], image_dim(n, 1))
        if all(lattice_member(row, xi_lat) for row in lat.basis.entries):
            out[k] = zero_lattice(image_dim(n, 1))
        else:
            out[k] = lat
    return out


# ---------------------------------------------------------------------------
# rank census


def dk_rank_closed_form_deg3(n: int) -> int:
    """A published closed form for the degree-3 rank; kept for comparison.

    Conflicts with the summation formula (and with the lattice computation);
    the census reports both and flags the disagreement.
    """
    return (n - 3) * (n - 2) * n * (n - 1) // 12


def cokernel_census(n: int, k: int) -> dict:
    """Exact ranks of braid-like versus braid derivations plus the gap."""
    rank_bl = braidlike_lattice(n, k).rank
    rank_dk = dk_component(n, k).rank
    report = {
        "n": n,
        "degree": k,
        "rank_braidlike": rank_bl,
        "rank_braidlike_formula": braidlike_rank_formula(n, k),
        "rank_dk": rank_dk,
        "rank_dk_by_summation": dk_rank_formula(n, k),
        "gap": rank_bl - rank_dk,
    }
    if k == 3:
        variant = dk_rank_closed_form_deg3(n)
        report["rank_dk_variant_closed_form"] = variant
        report["variant_closed_form_agrees"] = variant == dk_rank_formula(n, k)
    report["power_sum_convention"] = {
        "b1": str(bernoulli(1)),
        "alternate_display_b1": "-1/2",
        "discrepancy_recorded": True,
    }
    return report


# ---------------------------------------------------------------------------
# Bernoulli numbers and power sums


@lru_cache(maxsize=None)
def _bernoulli_upto(j: int) -> tuple[Fraction, ...]:
    # series division of z e^z by e^z - 1, both divided through by z
    num = [Fraction(1, _factorial(m)) for m in range(j + 1)]
    den = [Fraction(1, _factorial(m + 1)) for m in range(j + 1)]
    f: list[Fraction] = []
    for m in range(j + 1):
        s = num[m] - sum(f[i] * den[m - i] for i in range(m))
        f.append(s / den[0])
    return tuple(f[m] * _factorial(m) for m in range(j + 1))


def _factorial(m: int) -> int:
    out = 1
    for t in range(2, m + 1):
        out *= t
    return out


def bernoulli(j: int) -> Fraction:
    """Bernoulli number under the z e^z / (e^z - 1) convention (B_1 = +1/2)."""
    if j < 0:
        raise ValueError("index must be nonnegative")
    return _bernoulli_upto(j)[j]


@dataclass(frozen=True)
class FaulhaberPoly:
    """Closed-form polynomial for the power sum 1^a + 2^a + ... + m^a."""

    exponent: int
    coefficients: tuple  # coefficient of m^(a+1-j) at index j

    def evaluate(self, m: int) -> Fraction:
        a = self.exponent
        total = Fraction(0)
        for j, c in enumerate(self.coefficients):
            total += c * m ** (a + 1 - j)
        return total


@lru_cache(maxsize=None)
def faulhaber_poly(alpha: int) -> FaulhaberPoly:
    if alpha < 0:
        raise ValueError("exponent must be nonnegative")
    coeffs = tuple(
        Fraction(comb(alpha + 1, j)) * bernoulli(j) / (alpha + 1)
        for j in range(alpha + 1)
    )
    return FaulhaberPoly(alpha, coeffs)


def faulhaber_sum(alpha: int, m: int) -> int:
    """Exact power sum over l = 1..m through the Bernoulli closed form."""
    if m < 0:
        raise ValueError("upper limit must be nonnegative")
    val = faulhaber_poly(alpha).evaluate(m)
    if val.denominator != 1:
        raise ArithmeticError("closed form did not produce an integer")
    return int(val)


def power_sum_direct(alpha: int, m: int) -> int:
    return sum(l**alpha for l in range(1, m + 1))
