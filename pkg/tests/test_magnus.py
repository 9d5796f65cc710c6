import random

import pytest

from lieforge.freelie import (
    lie_bracket,
    lie_generator,
    lie_scale,
    lyndon_words,
    tensor_expand_word,
    to_tensor,
)
from lieforge.magnus import (
    AboveCutoff,
    NonIAError,
    a_degree,
    endo_to_series,
    gamma_degree,
    inner_series_endo,
    johnson_image,
    lie_class,
    magnus_expand,
    same_degree,
    series_a_degree,
    series_endo_commutator,
    series_endo_compose,
    series_inverse,
    series_johnson_image,
    series_mul,
    series_sub_one,
)
from lieforge.words import (
    EndoTable,
    endo_compose,
    endo_identity,
    endo_inner,
    word_commutator,
    word_from_pairs,
    word_gen,
    word_identity,
    word_inverse,
    word_mul,
)
from lieforge.zlattice import lattice_member, lattice_from_rows


def _random_word(rng, n, letters=5):
    return word_from_pairs(
        n, [(rng.randint(1, n), rng.choice([-2, -1, 1, 2])) for _ in range(letters)]
    )


def test_expand_examples():
    s = magnus_expand(word_gen(2, 1), 3)
    assert s.coeffs == {(): 1, (1,): 1}
    s = magnus_expand(word_gen(2, 1, -1), 2)
    assert s.coeffs == {(): 1, (1,): -1, (1, 1): 1}
    s = magnus_expand(word_commutator(word_gen(2, 1), word_gen(2, 2)), 2)
    assert series_sub_one(s) == {(1, 2): 1, (2, 1): -1}
    assert magnus_expand(word_identity(3), 4).coeffs == {(): 1}


def test_expand_multiplicative():
    rng = random.Random(31)
    for _ in range(500):
        a = _random_word(rng, 3, 4)
        b = _random_word(rng, 3, 4)
        lhs = magnus_expand(word_mul(a, b), 5)
        rhs = series_mul(magnus_expand(a, 5), magnus_expand(b, 5))
        assert lhs.coeffs == rhs.coeffs


def test_gamma_degree_examples():
    assert gamma_degree(word_gen(2, 1), 4) == 1
    c = word_commutator(word_gen(2, 1), word_gen(2, 2))
    assert gamma_degree(c, 4) == 2
    assert gamma_degree(word_commutator(word_gen(2, 1), c), 4) == 3
    top = gamma_degree(word_identity(2), 4)
    assert isinstance(top, AboveCutoff) and top.is_identity


def test_gamma_strong_centrality():
    rng = random.Random(37)
    for _ in range(40):
        a = _random_word(rng, 2, 3)
        b = word_commutator(_random_word(rng, 2, 2), _random_word(rng, 2, 2))
        da, db = gamma_degree(a, 6), gamma_degree(b, 6)
        dc = gamma_degree(word_commutator(a, b), 6)
        if isinstance(da, AboveCutoff) or isinstance(db, AboveCutoff):
            continue
        if isinstance(dc, AboveCutoff):
            continue
        assert dc >= da + db


def test_lie_class_examples():
    assert lie_class(word_gen(2, 1), 3) == lie_generator(2, 1)
    c = word_commutator(word_gen(2, 1), word_gen(2, 2))
    b12 = lie_bracket(lie_generator(2, 1), lie_generator(2, 2))
    assert lie_class(c, 3) == b12
    c_rev = word_commutator(word_gen(2, 2), word_gen(2, 1))
    assert lie_class(c_rev, 3) == lie_scale(b12, -1)
    with pytest.raises(ValueError):
        lie_class(word_identity(2), 3)


def test_lie_class_is_lie_element_in_expansion_lattice():
    rng = random.Random(41)
    n = 3
    for _ in range(15):
        w = word_commutator(_random_word(rng, n, 2), _random_word(rng, n, 2))
        d = gamma_degree(w, 5)
        if isinstance(d, AboveCutoff) or d > 4:
            continue
        cls = lie_class(w, 5)
        slice_ = magnus_expand(w, d).degree_slice(d)
        assert to_tensor(cls) == slice_
        # membership in the lattice spanned by expanded basis brackets
        monos = sorted({m for u in lyndon_words(n, d) for m in tensor_expand_word(u)})
        index = {m: i for i, m in enumerate(monos)}
        rows = []
        for u in lyndon_words(n, d):
            vec = [0] * len(monos)
            for m, c in tensor_expand_word(u).items():
                vec[index[m]] = c
            rows.append(vec)
        lat = lattice_from_rows(rows, len(monos))
        target = [0] * len(monos)
        for m, c in slice_.items():
            target[index[m]] = c
        assert lattice_member(target, lat)


def test_a_degree_examples():
    n = 2
    assert isinstance(a_degree(endo_identity(n), 4), AboveCutoff)
    assert a_degree(endo_inner(word_gen(n, 1)), 4) == 1
    c = word_commutator(word_gen(n, 1), word_gen(n, 2))
    assert a_degree(endo_inner(c), 5) == 2
    swap = EndoTable(n, (word_gen(n, 2), word_gen(n, 1)))
    with pytest.raises(NonIAError, match="x1"):
        a_degree(swap, 4)


def test_inner_degree_equality_sampled():
    rng = random.Random(43)
    for n in (2, 3, 4):
        for _ in range(25):
            depth = rng.randint(1, 4)
            w = _random_word(rng, n, 2)
            for _ in range(depth - 1):
                w = word_commutator(_random_word(rng, n, 1), w)
            dg = gamma_degree(w, 6)
            if w.is_identity():
                continue
            da = a_degree(endo_inner(w), 6)
            assert same_degree(dg, da), (n, w)


def test_full_filtration_sampled():
    # for phi of degree j and u of degree i, phi(u)u^-1 lands in degree >= i+j
    from lieforge.braids import chi_table, evaluate, xi_word
    from lieforge.words import endo_apply

    rng = random.Random(47)
    n = 3
    phis = [
        endo_inner(word_commutator(word_gen(n, 1), word_gen(n, 2))),
        evaluate(xi_word(n)),
        chi_table(3, 1, n),
    ]
    for phi in phis:
        j = a_degree(phi, 5)
        assert not isinstance(j, AboveCutoff)
        for _ in range(20):
            u = _random_word(rng, n, 3)
            du = gamma_degree(u, 3)
            if isinstance(du, AboveCutoff) or du > 3:
                continue
            disp = word_mul(endo_apply(phi, u), word_inverse(u))
            dd = gamma_degree(disp, 6)
            assert isinstance(dd, AboveCutoff) or dd >= du + j


def test_johnson_examples():
    from lieforge.derivations import ad_derivation

    n = 3
    jd = johnson_image(endo_inner(word_gen(n, 1)), 3)
    assert jd == ad_derivation(lie_generator(n, 1))
    with pytest.raises(ValueError):
        johnson_image(endo_identity(n), 3)


def test_series_endo_matches_table_composition():
    rng = random.Random(53)
    n = 3
    for _ in range(10):
        e1 = endo_inner(_random_word(rng, n, 2))
        e2 = endo_inner(_random_word(rng, n, 2))
        direct = endo_to_series(endo_compose(e1, e2), 4)
        composed = series_endo_compose(endo_to_series(e1, 4), endo_to_series(e2, 4))
        assert [s.coeffs for s in direct.images] == [s.coeffs for s in composed.images]


def test_series_inverse_and_inner_series():
    rng = random.Random(59)
    n = 2
    for _ in range(10):
        w = _random_word(rng, n, 3)
        mu = magnus_expand(w, 4)
        inv = series_inverse(mu)
        assert series_mul(mu, inv).coeffs == {(): 1}
        se = inner_series_endo(w, 4)
        table = endo_to_series(endo_inner(w), 4)
        assert [s.coeffs for s in se.images] == [s.coeffs for s in table.images]


def test_series_johnson_matches_word_johnson():
    n = 3
    c = word_commutator(word_gen(n, 1), word_gen(n, 2))
    se = inner_series_endo(c, 5)
    assert series_a_degree(se) == 2
    assert series_johnson_image(se) == johnson_image(endo_inner(c), 5)


def test_series_commutator_matches_group_commutator():
    n = 2
    a, b = word_gen(n, 1), word_gen(n, 2)
    sa, sb = inner_series_endo(a, 4), inner_series_endo(b, 4)
    sa_i, sb_i = inner_series_endo(word_inverse(a), 4), inner_series_endo(word_inverse(b), 4)
    comm = series_endo_commutator(sa, sa_i, sb, sb_i)
    direct = inner_series_endo(word_commutator(a, b), 4)
    assert [s.coeffs for s in comm.images] == [s.coeffs for s in direct.images]


def test_series_composition_matches_tables_for_braids():
    from lieforge.braids import c_j_table, evaluate, family_generators, xi_word

    n = 3
    tables = [evaluate(g) for g in family_generators("Pn", n)]
    tables += [c_j_table(1, n), c_j_table(2, n), evaluate(xi_word(n))]
    d = 4
    for a in tables[:4]:
        for b in tables[3:]:
            direct = endo_to_series(endo_compose(a, b), d)
            composed = series_endo_compose(endo_to_series(a, d), endo_to_series(b, d))
            assert [s.coeffs for s in direct.images] == [
                s.coeffs for s in composed.images
            ]


def test_series_commutator_matches_table_commutator_for_braids():
    from lieforge.braids import aut_commutator, aut_word, evaluate, sym_a

    n = 3
    d = 4
    w = aut_commutator(aut_word(n, sym_a(1, 3)), aut_word(n, sym_a(2, 3)))
    direct = endo_to_series(evaluate(w), d)
    a = endo_to_series(evaluate(aut_word(n, sym_a(1, 3))), d)
    ai = endo_to_series(evaluate(aut_word(n, sym_a(1, 3)).inverse()), d)
    b = endo_to_series(evaluate(aut_word(n, sym_a(2, 3))), d)
    bi = endo_to_series(evaluate(aut_word(n, sym_a(2, 3)).inverse()), d)
    comm = series_endo_commutator(a, ai, b, bi)
    assert [s.coeffs for s in direct.images] == [s.coeffs for s in comm.images]
