import random
from math import comb

import pytest

from staircase_groth import grothendieck as gr
from staircase_groth import symfunc as sf
from staircase_groth.grothendieck import (
    SignedCount,
    alpha,
    big_G,
    big_G_double,
    dual_g,
    expand_in_G,
    expand_in_g,
    expansion_to_symfunc,
    lr_coeff,
    schur,
    skew_by,
    tau,
    tau_bar,
    to_schur_expansion,
)
from staircase_groth.shapes import (
    EMPTY,
    SkewShape,
    conjugate,
    partitions_of,
    staircase,
    subpartitions,
)
from staircase_groth.symfunc import BasisExpansion, SymFunc, TruncationProfile


def straight(lam):
    return SkewShape(lam, EMPTY)


def all_partitions_up_to(n):
    for d in range(n + 1):
        yield from partitions_of(d)


def test_signed_count():
    assert SignedCount(3, 2).signed == 3
    assert SignedCount(3, 5).signed == -3
    assert SignedCount(0, 1).signed == 0


def test_schur_examples():
    p = TruncationProfile(3, 3)
    assert schur(SkewShape((2, 1, 1), (1,)), p).coeffs == \
        {(2, 1): 1, (1, 1, 1): 3}
    assert schur(SkewShape((2, 1), (2, 1)), p).coeffs == {EMPTY: 1}
    assert schur(straight((2,)), p).coeffs == {(2,): 1, (1, 1): 1}
    with pytest.raises(ValueError):
        schur(straight((4, 3)), p)
    with pytest.raises(ValueError):
        SkewShape((2,), (3,))


def test_dual_g_examples():
    p = TruncationProfile(3, 3)
    assert dual_g(SkewShape((2, 2), (1,)), p).coeffs == \
        {(2,): 1, (1, 1): 1, (2, 1): 1, (1, 1, 1): 2}
    for k in range(1, 4):
        pk = TruncationProfile.for_degree(k)
        assert dual_g(straight((k,)), pk).coeffs == \
            sf.basis_element("h", (k,), pk).coeffs
    assert dual_g(straight(EMPTY), p).coeffs == {EMPTY: 1}


def test_big_G_examples():
    assert big_G(straight((1,)), TruncationProfile(3, 3)).coeffs == \
        {(1,): 1, (1, 1): -1, (1, 1, 1): 1}
    assert big_G(straight(EMPTY), TruncationProfile(2, 2)).coeffs == {EMPTY: 1}
    assert big_G(straight((1, 1)), TruncationProfile(2, 2)).coeffs == \
        {(1, 1): 1}


def test_degree_grading():
    for lam in all_partitions_up_to(4):
        for mu in subpartitions(lam):
            shape = SkewShape(lam, mu)
            d = shape.size()
            p = TruncationProfile.for_degree(d + 2)
            s = schur(shape, p)
            assert all(sum(k) == d for k in s.coeffs)
            g = dual_g(shape, p)
            assert g.homogeneous_part(d).coeffs == s.coeffs
            assert all(sum(k) <= d for k in g.coeffs)
            G = big_G(shape, p)
            assert G.homogeneous_part(d).coeffs == s.coeffs
            assert all(sum(k) >= d for k in G.coeffs)


def test_big_G_double_examples():
    rho = staircase(3)
    p = TruncationProfile(8, 8)
    for k in (1, 2, 3):
        lhs = big_G_double(rho, (k,), p)
        rhs = big_G(SkewShape(rho, (k,)), p) - big_G(SkewShape(rho, (k - 1,)), p)
        assert lhs.coeffs == rhs.coeffs
    assert big_G_double(rho, EMPTY, p).coeffs == big_G(straight(rho), p).coeffs
    with pytest.raises(ValueError):
        big_G_double((2, 1), (2, 2), p)


def test_big_G_double_sums_to_skew():
    p = TruncationProfile(6, 6)
    for lam in ((2, 1), (2, 2), (3, 1)):
        for mu in subpartitions(lam):
            total = SymFunc.zero(p)
            for sigma in subpartitions(mu):
                total = total + big_G_double(lam, sigma, p)
            assert total.coeffs == big_G(SkewShape(lam, mu), p).coeffs


def test_lr_coeff_examples():
    assert lr_coeff((1,), (1,), (2,)).value == 1
    assert lr_coeff((1,), (1,), (2, 1)).value == 1
    assert lr_coeff((1,), (1,), (2, 1)).sign_exponent == 1
    for n in range(1, 5):
        rho = staircase(n)
        for k in range(1, n + 1):
            for nu in subpartitions(rho):
                assert lr_coeff(nu, (k,), rho).value == \
                    lr_coeff(nu, (1,) * k, rho).value


def test_alpha_examples():
    shape = SkewShape((2, 1), (1,))
    assert alpha(shape, (2,)).value == 1
    assert alpha(shape, (1, 1)).value == 1
    assert alpha(shape, (2, 1)).value == 1
    assert alpha(shape, (2, 1)).sign_exponent == 1


def test_product_of_single_boxes():
    # G_1 * G_1 = G_2 + G_11 - G_21, checked against the lattice counts
    p = TruncationProfile(4, 4)
    g1 = big_G(straight((1,)), p)
    prod = sf.multiply(g1, g1)
    total = SymFunc.zero(p)
    for lam in all_partitions_up_to(4):
        sc = lr_coeff((1,), (1,), lam)
        if sc.value:
            total = total + big_G(straight(lam), p).scale(sc.signed)
    assert prod.coeffs == total.coeffs
    assert lr_coeff((1,), (1,), (2,)).value == 1
    assert lr_coeff((1,), (1,), (1, 1)).value == 1
    assert lr_coeff((1,), (1,), (2, 1)).value == 1


def test_buch_product_identity():
    for nu in all_partitions_up_to(2):
        for mu in all_partitions_up_to(4 - sum(nu)):
            d = sum(nu) + sum(mu) + 2
            p = TruncationProfile.for_degree(d)
            prod = sf.multiply(big_G(straight(nu), p), big_G(straight(mu), p))
            total = SymFunc.zero(p)
            for lam in all_partitions_up_to(d):
                sc = lr_coeff(nu, mu, lam)
                if sc.value:
                    total = total + big_G(straight(lam), p).scale(sc.signed)
            assert prod.coeffs == total.coeffs, (nu, mu)


def test_buch_skew_expansion():
    # G(lam/mu) as a signed alpha combination of straight G's
    for lam in all_partitions_up_to(6):
        for mu in subpartitions(lam):
            shape = SkewShape(lam, mu)
            d = shape.size() + 2
            p = TruncationProfile.for_degree(d)
            lhs = big_G(shape, p)
            total = SymFunc.zero(p)
            for s in range(shape.size(), d + 1):
                for nu in partitions_of(s):
                    sc = alpha(shape, nu)
                    if sc.value:
                        total = total + big_G(straight(nu), p).scale(sc.signed)
            assert lhs.coeffs == total.coeffs, (lam, mu)


def test_expand_in_g_round_trip():
    for lam in all_partitions_up_to(5):
        p = TruncationProfile.for_degree(max(sum(lam), 1))
        exp = expand_in_g(dual_g(straight(lam), p))
        assert exp.basis == "g" and exp.coeffs == {lam: 1}


def test_expand_in_g_of_h():
    for k in range(1, 5):
        p = TruncationProfile.for_degree(k)
        exp = expand_in_g(sf.basis_element("h", (k,), p))
        assert exp.coeffs == {(k,): 1}


def test_expand_in_g_top_matches_schur_expansion():
    p = TruncationProfile(3, 3)
    exp = expand_in_g(dual_g(SkewShape((2, 2), (1,)), p))
    top = {k: v for k, v in exp.coeffs.items() if sum(k) == 3}
    s_exp = sf.m_to_schur(schur(SkewShape((2, 2), (1,)), p))
    assert top == s_exp.coeffs


def test_expand_in_G_round_trip():
    for lam in all_partitions_up_to(5):
        p = TruncationProfile.for_degree(max(sum(lam) + 2, 1))
        exp = expand_in_G(big_G(straight(lam), p))
        assert exp.basis == "G" and exp.coeffs == {lam: 1}


def test_expand_in_G_of_e():
    p = TruncationProfile(7, 7)
    for k in range(1, 5):
        exp = expand_in_G(sf.basis_element("e", (k,), p))
        assert exp.coeffs == {(1,) * n: comb(n - 1, k - 1)
                              for n in range(k, 8)}


def test_G_column_as_alternating_e_sum():
    p = TruncationProfile(7, 7)
    for k in range(1, 5):
        lhs = big_G(straight((1,) * k), p)
        rhs = SymFunc.zero(p)
        for n in range(k, 8):
            term = sf.basis_element("e", (n,), p).scale(comb(n - 1, k - 1))
            rhs = rhs + (term if (n - k) % 2 == 0 else -term)
        assert lhs.coeffs == rhs.coeffs


def test_tau_and_tau_bar():
    p = TruncationProfile(5, 5)
    cols = BasisExpansion("G", {(1, 1, 1): 1}, p)
    assert tau(cols).coeffs == {(3,): 1}
    rng = random.Random(11)
    keys = list(all_partitions_up_to(5))
    coeffs = {k: rng.randint(-3, 3) for k in rng.sample(keys, 6)}
    exp = BasisExpansion("G", coeffs, p)
    assert tau(tau(exp)).coeffs == exp.coeffs
    gexp = BasisExpansion("g", coeffs, p)
    assert tau_bar(tau_bar(gexp)).coeffs == gexp.coeffs
    assert tau_bar(BasisExpansion("g", {(2,): 1}, p)).coeffs == {(1, 1): 1}
    assert tau_bar(BasisExpansion("g", {(2, 1): 1}, p)).coeffs == {(2, 1): 1}
    with pytest.raises(ValueError):
        tau(gexp)
    with pytest.raises(ValueError):
        tau_bar(exp)


def test_tau_of_e_expansion():
    p = TruncationProfile(6, 6)
    for k in (1, 2, 3):
        exp = tau(expand_in_G(sf.basis_element("e", (k,), p)))
        assert exp.coeffs == {(n,): comb(n - 1, k - 1) for n in range(k, 7)}


def test_tau_commutes_with_truncation():
    # conjugation preserves degree, so dropping high keys before or after
    # conjugating gives the same expansion
    p6 = TruncationProfile(6, 6)
    p4 = TruncationProfile(4, 4)
    exp = expand_in_G(sf.basis_element("e", (2,), p6))
    cut_then_tau = tau(BasisExpansion("G", dict(exp.coeffs), p4))
    tau_then_cut = BasisExpansion("G", dict(tau(exp).coeffs), p4)
    assert cut_then_tau.coeffs == tau_then_cut.coeffs
    gexp = expand_in_g(dual_g(straight((3, 2)), TruncationProfile(5, 5)))
    cut = BasisExpansion("g", dict(gexp.coeffs), p4)
    assert tau_bar(cut).coeffs == \
        {k: v for k, v in tau_bar(gexp).coeffs.items() if sum(k) <= 4}


def test_skew_by_identity_element():
    p = TruncationProfile(4, 4)
    a = dual_g(straight((2, 1)), p)
    one = BasisExpansion("s", {EMPTY: 1}, p)
    assert skew_by(one, a).coeffs == a.coeffs


def test_skew_by_G_gives_skew_g():
    for lam in all_partitions_up_to(4):
        p = TruncationProfile.for_degree(max(sum(lam), 1))
        glam = dual_g(straight(lam), p)
        for mu in subpartitions(lam):
            lhs = skew_by(BasisExpansion("G", {mu: 1}, p), glam)
            rhs = dual_g(SkewShape(lam, mu), p)
            assert lhs.coeffs == rhs.coeffs, (lam, mu)


def test_skew_by_g_gives_double_skew_G():
    rho = staircase(2)
    d = sum(rho) + 2
    ext = TruncationProfile.for_degree(d + sum(rho))
    series = big_G(straight(rho), ext)
    p = TruncationProfile.for_degree(d)
    for mu in subpartitions(rho):
        skewed = skew_by(BasisExpansion("g", {mu: 1}, ext), series)
        lhs = SymFunc({k: v for k, v in skewed.coeffs.items()
                       if sum(k) <= d}, p)
        assert lhs.coeffs == big_G_double(rho, mu, p).coeffs, mu


def test_adjunction_small():
    p = TruncationProfile(5, 5)
    smalls = list(all_partitions_up_to(2))
    for lam in smalls:
        for nu in smalls:
            for mu in all_partitions_up_to(3):
                a = sf.schur_to_m(mu, p)
                lhs = sf.hall_inner(
                    BasisExpansion("s", {nu: 1}, p),
                    sf.m_to_schur(skew_by(BasisExpansion("s", {lam: 1}, p), a)))
                prod = sf.multiply(sf.schur_to_m(lam, p), sf.schur_to_m(nu, p))
                rhs = sf.m_to_schur(prod).coeffs.get(mu, 0)
                assert lhs == rhs


def test_duality_of_bases():
    p = TruncationProfile(4, 4)
    parts = list(all_partitions_up_to(4))
    for lam in parts:
        Gexp = sf.m_to_schur(big_G(straight(lam), p))
        for mu in parts:
            gexp = sf.m_to_schur(dual_g(straight(mu), p))
            assert sf.hall_inner(Gexp, gexp) == (1 if lam == mu else 0)


def test_comultiplication_of_g():
    for lam in all_partitions_up_to(4):
        p = TruncationProfile.for_degree(max(sum(lam), 1))
        nv = p.num_vars
        lhs = sf.split_alphabets(dual_g(straight(lam), p), nv, nv)
        rhs = {}
        for mu in subpartitions(lam):
            for k1, c1 in dual_g(straight(mu), p).coeffs.items():
                for k2, c2 in dual_g(SkewShape(lam, mu), p).coeffs.items():
                    rhs[(k1, k2)] = rhs.get((k1, k2), 0) + c1 * c2
        assert lhs == {k: v for k, v in rhs.items() if v}


def test_comultiplication_of_G_on_staircases():
    for n, d in ((2, 5), (3, 7)):
        rho = staircase(n)
        p = TruncationProfile.for_degree(d)
        lhs = sf.split_alphabets(big_G(straight(rho), p), d, d)
        rhs = {}
        for nu in subpartitions(rho):
            gx = big_G(straight(nu), p).coeffs
            gy = big_G_double(rho, nu, p).coeffs
            for k1, c1 in gx.items():
                for k2, c2 in gy.items():
                    if sum(k1) + sum(k2) <= d:
                        key = (k1, k2)
                        rhs[key] = rhs.get(key, 0) + c1 * c2
        rhs = {k: v for k, v in rhs.items() if v}
        assert lhs == rhs, n


def test_expansion_to_symfunc_and_back():
    p = TruncationProfile(5, 5)
    exp = BasisExpansion("g", {(2, 1): 2, (1,): -1}, p)
    f = expansion_to_symfunc(exp)
    assert expand_in_g(f).coeffs == exp.coeffs
    sexp = to_schur_expansion(BasisExpansion("h", {(2,): 1}, p))
    assert sexp.coeffs == {(2,): 1}


def test_stembridge_factorization_example():
    # rho_3 minus a full top row factors into disconnected components
    p = TruncationProfile(4, 4)
    lhs = dual_g(SkewShape((3, 2, 1), (2,)), p)
    rhs = sf.multiply(dual_g(straight((2, 1)), p), dual_g(straight((1,)), p))
    assert lhs.coeffs == rhs.coeffs
