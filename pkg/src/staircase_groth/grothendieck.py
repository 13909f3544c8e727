"""Skew Schur, dual stable Grothendieck, and stable Grothendieck polynomials.

The three constructors share one convention: a polynomial is the content
generating function of a tableau family over the shape, expressed in the
monomial basis under a truncation profile.

* ``schur``: semistandard tableaux; homogeneous of degree |shape|.
* ``dual_g``: reverse plane partitions, weighted per column; the top
  degree part equals the Schur polynomial.
* ``big_G``: set-valued tableaux with sign (-1)^(|T| - |shape|); the
  bottom degree part equals the Schur polynomial and degrees above the
  profile cap are discarded.

On top of the constructors sit the signed lattice counts expanding
products and skews in the G basis, the unitriangular expansions into the
g and G bases, the conjugation involutions on those bases, and the
skewing operator (the Hall adjoint of multiplication), computed through
the two-alphabet splitting of its argument.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import tableaux
from .shapes import (
    EMPTY,
    Partition,
    SkewShape,
    classify_strip,
    conjugate,
    contains,
    partition,
    star_join,
    subpartitions,
)
from .symfunc import (
    BasisExpansion,
    SymFunc,
    TruncationProfile,
    basis_element,
    hall_inner,
    m_to_schur,
    schur_to_m,
    split_alphabets,
)


@dataclass(frozen=True)
class SignedCount:
    """Unsigned tableau count plus the exponent of its downstream sign.

    Identities apply the sign explicitly as (-1)**sign_exponent so the
    counting stays sign-free.
    """

    value: int
    sign_exponent: int

    @property
    def signed(self) -> int:
        return self.value if self.sign_exponent % 2 == 0 else -self.value


@functools.cache
def _schur_cached(outer: Partition, inner: Partition,
                  trunc: TruncationProfile) -> SymFunc:
    shape = SkewShape(outer, inner)
    counts = tableaux.content_counts(shape, tableaux.SSYT,
                                     num_vars=trunc.num_vars)
    return SymFunc(dict(counts), trunc)


def schur(shape: SkewShape, trunc: TruncationProfile) -> SymFunc:
    """Skew Schur polynomial s_{outer/inner}."""
    if shape.size() > trunc.max_degree:
        raise ValueError(
            f"degree overflow: |{shape}| = {shape.size()} exceeds "
            f"max_degree {trunc.max_degree}")
    return _schur_cached(shape.outer, shape.inner, trunc)


@functools.cache
def _dual_g_cached(outer: Partition, inner: Partition,
                   trunc: TruncationProfile) -> SymFunc:
    shape = SkewShape(outer, inner)
    counts = tableaux.content_counts(shape, tableaux.RPP,
                                     num_vars=trunc.num_vars)
    return SymFunc(dict(counts), trunc)


def dual_g(shape: SkewShape, trunc: TruncationProfile) -> SymFunc:
    """Skew dual stable Grothendieck polynomial g_{outer/inner}."""
    if shape.size() > trunc.max_degree:
        raise ValueError(
            f"profile cannot hold the top degree: |{shape}| = {shape.size()} "
            f"exceeds max_degree {trunc.max_degree}")
    return _dual_g_cached(shape.outer, shape.inner, trunc)


@functools.cache
def _big_G_cached(outer: Partition, inner: Partition,
                  trunc: TruncationProfile) -> SymFunc:
    shape = SkewShape(outer, inner)
    counts = tableaux.signed_svt_counts(shape, num_vars=trunc.num_vars,
                                        max_total_size=trunc.max_degree)
    return SymFunc(dict(counts), trunc)


def big_G(shape: SkewShape, trunc: TruncationProfile) -> SymFunc:
    """Skew stable Grothendieck polynomial G_{outer/inner}, truncated."""
    return _big_G_cached(shape.outer, shape.inner, trunc)


def big_G_double(outer: Partition, mu: Partition,
                 trunc: TruncationProfile) -> SymFunc:
    """Alternating rook-strip sum G_{outer//mu}.

    Sums (-1)^{|mu/sigma|} G_{outer/sigma} over the sigma inside mu for
    which mu/sigma is a rook strip.
    """
    outer = partition(outer)
    mu = partition(mu)
    if not contains(outer, mu):
        raise ValueError(f"{mu} is not contained in {outer}")
    total = SymFunc.zero(trunc)
    for sigma in subpartitions(mu):
        if not classify_strip(SkewShape(mu, sigma)).rook:
            continue
        term = big_G(SkewShape(outer, sigma), trunc)
        if (sum(mu) - sum(sigma)) % 2:
            term = -term
        total = total + term
    return total


def lr_coeff(nu: Partition, mu: Partition, target: Partition) -> SignedCount:
    """Littlewood-Richardson count for the G-basis product expansion.

    Counts set-valued tableaux of the corner-joined shape nu * mu whose
    reverse reading word is a lattice word with content ``target``; the
    sign exponent is |target| - |nu| - |mu|.
    """
    nu = partition(nu)
    mu = partition(mu)
    target = partition(target)
    value = tableaux.count_lattice_fillings(star_join(nu, mu), target)
    return SignedCount(value, sum(target) - sum(nu) - sum(mu))


def alpha(shape: SkewShape, content: Partition) -> SignedCount:
    """Lattice count expanding a skew G polynomial in straight G's."""
    content = partition(content)
    value = tableaux.count_lattice_fillings(shape, content)
    return SignedCount(value, sum(content) - shape.size())


def expand_in_g(f: SymFunc) -> BasisExpansion:
    """Expansion of f in the dual stable Grothendieck basis.

    Peels from the top degree down: the top homogeneous part of g_lam is
    s_lam, so reading the Schur coefficients of the current top part and
    subtracting those multiples of g_lam strictly lowers the degree.
    """
    out: dict[Partition, int] = {}
    work = f
    while not work.is_zero():
        d = max(work.degrees())
        s_exp = m_to_schur(work.homogeneous_part(d))
        delta = SymFunc.zero(f.trunc)
        for lam, c in s_exp.coeffs.items():
            out[lam] = out.get(lam, 0) + c
            delta = delta + dual_g(SkewShape(lam, EMPTY), f.trunc).scale(c)
        work = work - delta
    return BasisExpansion("g", out, f.trunc)


def expand_in_G(f: SymFunc) -> BasisExpansion:
    """Expansion of f in the stable Grothendieck basis, up to the cap.

    Peels from the bottom degree up: the bottom part of G_lam is s_lam.
    The result represents f modulo degrees above the profile cap.
    """
    out: dict[Partition, int] = {}
    work = f
    while not work.is_zero():
        d = min(work.degrees())
        s_exp = m_to_schur(work.homogeneous_part(d))
        delta = SymFunc.zero(f.trunc)
        for lam, c in s_exp.coeffs.items():
            out[lam] = out.get(lam, 0) + c
            delta = delta + big_G(SkewShape(lam, EMPTY), f.trunc).scale(c)
        work = work - delta
    return BasisExpansion("G", out, f.trunc)


def tau(f: BasisExpansion) -> BasisExpansion:
    """Conjugate every index of a G-basis expansion: G_lam -> G_lam'."""
    if f.basis != "G":
        raise ValueError("tau acts on G-basis expansions")
    return BasisExpansion("G", {conjugate(k): c for k, c in f.coeffs.items()},
                          f.trunc)


def tau_bar(f: BasisExpansion) -> BasisExpansion:
    """Conjugate every index of a g-basis expansion: g_lam -> g_lam'."""
    if f.basis != "g":
        raise ValueError("tau_bar acts on g-basis expansions")
    return BasisExpansion("g", {conjugate(k): c for k, c in f.coeffs.items()},
                          f.trunc)


def expansion_to_symfunc(exp: BasisExpansion,
                         trunc: TruncationProfile | None = None) -> SymFunc:
    """Realize a basis expansion in monomial coordinates.

    Keys whose degree exceeds the target profile are dropped; for the G
    basis the realization is the usual degree-capped truncation.
    """
    if trunc is None:
        trunc = exp.trunc
    total = SymFunc.zero(trunc)
    for lam, c in exp.coeffs.items():
        if sum(lam) > trunc.max_degree:
            continue
        if exp.basis == "m":
            term = SymFunc({lam: 1}, trunc)
        elif exp.basis == "s":
            term = schur_to_m(lam, trunc)
        elif exp.basis in ("e", "h"):
            term = basis_element(exp.basis, lam, trunc)
        elif exp.basis == "g":
            term = dual_g(SkewShape(lam, EMPTY), trunc)
        else:
            term = big_G(SkewShape(lam, EMPTY), trunc)
        total = total + term.scale(c)
    return total


def to_schur_expansion(exp: BasisExpansion,
                       trunc: TruncationProfile | None = None) -> BasisExpansion:
    """Convert any basis expansion to the Schur basis, degree by degree."""
    if exp.basis == "s" and (trunc is None or trunc == exp.trunc):
        return exp
    return m_to_schur(expansion_to_symfunc(exp, trunc))


def skew_by(f: BasisExpansion, a: SymFunc) -> SymFunc:
    """Skewing operator: the Hall adjoint of multiplication by f.

    Splits ``a`` over two alphabets and pairs f against the first-alphabet
    part: the coefficient of m_beta in the result is the inner product of
    f with the symmetric function collecting every alpha paired with that
    beta.  Satisfies the adjunction <g, skew_by(f, a)> = <f g, a>.
    """
    fs = to_schur_expansion(f, a.trunc)
    fdeg = {sum(k) for k in fs.coeffs}
    if not fdeg:
        return SymFunc.zero(a.trunc)
    nv = a.trunc.num_vars
    by_beta: dict[Partition, dict[Partition, int]] = {}
    for (al, beta), c in split_alphabets(a, nv, nv).items():
        if sum(al) in fdeg:
            by_beta.setdefault(beta, {})[al] = c
    out: dict[Partition, int] = {}
    for beta, amap in by_beta.items():
        val = hall_inner(fs, m_to_schur(SymFunc(amap, a.trunc)))
        if val:
            out[beta] = val
    return SymFunc(out, a.trunc)
