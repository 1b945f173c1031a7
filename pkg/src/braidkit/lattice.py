"""
The prefix order ≼ on the whole group (a ≼ b iff a^{-1}b is positive), with
gcd and lcm. Suffix-order questions are answered through the reversal
anti-automorphism rather than separate code paths.
"""

from __future__ import annotations

from . import simple as sp
from .normal_form import (
    LeftNormalForm,
    inverse,
    nf_delta,
    nf_identity,
    nf_to_word,
    normal_form,
    product,
)
from .words import BraidWord, StrandMismatchError, identity, invert, reverse


def _same(a: BraidWord, b: BraidWord) -> int:
    if a.strands != b.strands:
        raise StrandMismatchError(f"strand counts differ: {a.strands} vs {b.strands}")
    return a.strands


def is_positive(w: BraidWord) -> bool:
    """Whether the braid lies in the positive monoid (inf ≥ 0)."""
    return normal_form(w).inf >= 0


def prefix_divides(a: BraidWord, b: BraidWord) -> bool:
    _same(a, b)
    return product(inverse(normal_form(a)), normal_form(b)).inf >= 0


def suffix_divides(a: BraidWord, b: BraidWord) -> bool:
    """True iff a is a suffix of b, i.e. b·a^{-1} is positive."""
    return prefix_divides(reverse(a), reverse(b))


def _first_simple(f: LeftNormalForm):
    """f ∧ Δ for positive f."""
    if f.inf > 0:
        return sp.p_delta(f.strands)
    if f.factors:
        return f.factors[0].perm
    return sp.p_identity(f.strands)


def _positive_gcd(a: LeftNormalForm, b: LeftNormalForm) -> LeftNormalForm:
    n = a.strands
    ident = sp.p_identity(n)
    d = nf_identity(n)
    while True:
        # a ∧ b ∧ Δ = (a ∧ Δ) ∧ (b ∧ Δ)
        s = sp.p_meet(_first_simple(a), _first_simple(b))
        if s == ident:
            return d
        s_nf = normal_form(BraidWord(n, tuple(sp.p_word(s))))
        s_inv = inverse(s_nf)
        d = product(d, s_nf)
        a = product(s_inv, a)
        b = product(s_inv, b)


def gcd_nf(a: LeftNormalForm, b: LeftNormalForm) -> LeftNormalForm:
    n = a.strands
    # shift into the positive cone by a central Δ^{2m}; left-invariance makes it transparent
    low = min(a.inf, b.inf, 0)
    m = (-low + 1) // 2
    shift = nf_delta(n, 2 * m)
    g = _positive_gcd(product(shift, a), product(shift, b))
    return product(nf_delta(n, -2 * m), g)


def gcd(x: BraidWord, y: BraidWord) -> BraidWord:
    """Greatest common prefix x ∧ y."""
    _same(x, y)
    return nf_to_word(gcd_nf(normal_form(x), normal_form(y)))


def gcd_suffix(x: BraidWord, y: BraidWord) -> BraidWord:
    """Greatest common suffix, via reversal."""
    return reverse(gcd(reverse(x), reverse(y)))


def lcm(x: BraidWord, y: BraidWord) -> BraidWord:
    """
    Least common multiple x ∨ y in the prefix order.

    x ≼ m iff m^{-1} is a suffix of x^{-1}, so (x ∨ y)^{-1} is the greatest common
    suffix of x^{-1} and y^{-1}.
    """
    _same(x, y)
    g = gcd_suffix(invert(x), invert(y))
    return nf_to_word(normal_form(invert(g)))


def torsion_witness(x: BraidWord, k: int) -> BraidWord:
    """
    d = 1 ∧ x ∧ x^2 ∧ ⋯ ∧ x^{k-1}.

    If x^k = 1 then x·d = d, which forces x = 1; comparing x·d with d is the
    torsion probe.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = x.strands
    xf = normal_form(x)
    d = nf_identity(n)
    p = nf_identity(n)
    for _ in range(1, k):
        p = product(p, xf)
        d = gcd_nf(d, p)
    return nf_to_word(d) if not d.is_identity() else identity(n)
