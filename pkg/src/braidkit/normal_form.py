"""
Left normal forms Δ^p a_1 ⋯ a_r and the word problem.

A braid word is first rewritten as Δ^{-C} times a product of simple elements:
positive runs are cut into maximal simple chunks, and every inverse chunk u^{-1}
becomes ∂u·Δ^{-1} (∂u the right complement). The Δ^{-1}'s are pushed to the
front with τ. The positive part is then brought into left-weighted form one
factor at a time: appending a factor and sweeping leftwards over adjacent pairs
(a, b) -> (a·s, s^{-1}·b), s = ∂a ∧ b, until a pair is already left-weighted.
"""

from __future__ import annotations

import dataclasses
from functools import lru_cache
from typing import Iterable, Sequence, Union

from . import simple as sp
from .simple import Perm, SimpleElement
from .words import BraidWord, StrandMismatchError, delta_letters, permutation_images


@lru_cache(maxsize=1 << 16)
def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Left-weighted form of the pair a·b: move ∂a ∧ b from b onto a."""
    n = len(a)
    a_ = list(a)
    b_ = list(b)
    binv = list(sp.p_inverse(b))
    moved = True
    while moved:
        moved = False
        for i in range(1, n):
            # σ_i ≼ b and a·σ_i still simple
            if binv[i - 1] > binv[i] and a_[i - 1] < a_[i]:
                a_[i - 1], a_[i] = a_[i], a_[i - 1]
                # b <- σ_i^{-1} b swaps the values i-1, i, i.e. the entries i-1, i of b^{-1}
                x, y = binv[i - 1], binv[i]
                b_[x], b_[y] = b_[y], b_[x]
                binv[i - 1], binv[i] = y, x
                moved = True
    return tuple(a_), tuple(b_)


def is_left_weighted(a: Perm, b: Perm) -> bool:
    # every atom starting b must finish a
    binv = sp.p_inverse(b)
    return all(not (binv[i - 1] > binv[i]) or a[i - 1] > a[i] for i in range(1, len(a)))


class _Builder:
    """Accumulates Δ^inf · a_1⋯a_r while simple factors are appended on the right."""

    def __init__(self, n: int, inf: int = 0, factors: Iterable[Perm] = ()):
        self.n = n
        self.inf = inf
        self.delta = sp.p_delta(n)
        self.ident = sp.p_identity(n)
        self.factors: list[Perm] = list(factors)

    def append(self, s: Perm) -> None:
        if s == self.ident:
            return
        f = self.factors
        f.append(s)
        j = len(f) - 1
        while j > 0:
            pair = _left_weight(f[j - 1], f[j])
            if pair == (f[j - 1], f[j]):
                break
            f[j - 1], f[j] = pair
            j -= 1
        self._clean()

    def _clean(self) -> None:
        f = self.factors
        lead = 0
        while lead < len(f) and f[lead] == self.delta:
            lead += 1
        if lead:
            self.inf += lead
            del f[:lead]
        while f and f[-1] == self.ident:
            f.pop()
        if self.ident in f:
            # not expected after a right multiplication; renormalise from scratch to stay safe
            rest = [x for x in f if x != self.ident]
            f.clear()
            for x in rest:
                self.append(x)


Piece = Union[Perm, int]  # a simple factor, or an int k standing for Δ^k


def _from_pieces(n: int, pieces: Sequence[Piece]) -> tuple[int, list[Perm]]:
    """Normal form of a product of simple factors and Δ powers."""
    total = 0
    shifted: list[Perm] = []
    # s·Δ^k = Δ^k·τ^k(s): walk right to left counting the Δ exponent to the right
    for piece in reversed(pieces):
        if isinstance(piece, int):
            total += piece
        else:
            shifted.append(sp.p_tau(piece, total))
    builder = _Builder(n, total)
    for s in reversed(shifted):
        builder.append(s)
    return builder.inf, builder.factors


def _chunk_positive(n: int, letters: Iterable[int]) -> list[Perm]:
    """Cut a positive word into maximal simple chunks, left to right."""
    chunks = []
    cur = list(range(n))
    empty = True
    for i in letters:
        if cur[i - 1] > cur[i]:  # current chunk already ends with σ_i
            chunks.append(tuple(cur))
            cur = list(range(n))
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
        empty = False
    if not empty:
        chunks.append(tuple(cur))
    return chunks


def _word_pieces(n: int, letters: Sequence[int]) -> list[Piece]:
    pieces: list[Piece] = []
    k = 0
    while k < len(letters):
        j = k
        if letters[k] > 0:
            while j < len(letters) and letters[j] > 0:
                j += 1
            pieces.extend(_chunk_positive(n, letters[k:j]))
        else:
            while j < len(letters) and letters[j] < 0:
                j += 1
            # σ_{i1}^{-1}⋯σ_{ik}^{-1} = (u_1⋯u_m)^{-1} with u_1⋯u_m = σ_{ik}⋯σ_{i1}
            chunks = _chunk_positive(n, [-x for x in reversed(letters[k:j])])
            for u in reversed(chunks):
                pieces.append(sp.p_right_complement(u))
                pieces.append(-1)
        k = j
    return pieces


@dataclasses.dataclass(frozen=True)
class LeftNormalForm:
    """Δ^inf · a_1 ⋯ a_r with proper, left-weighted simple factors."""

    strands: int
    inf: int
    factors: tuple[SimpleElement, ...] = ()

    @classmethod
    def _make(cls, n: int, inf: int, perms: Iterable[Perm]) -> LeftNormalForm:
        return cls(n, inf, tuple(SimpleElement(n, p) for p in perms))

    @property
    def perms(self) -> tuple[Perm, ...]:
        return tuple(f.perm for f in self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def key(self) -> tuple:
        """Structural key, also used as the canonical sort order."""
        return (self.inf, len(self.factors), self.perms)

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def is_valid(self) -> bool:
        n = self.strands
        perms = self.perms
        if any(p in (sp.p_identity(n), sp.p_delta(n)) for p in perms):
            return False
        return all(is_left_weighted(a, b) for a, b in zip(perms, perms[1:]))

    def __str__(self) -> str:
        parts = [f"D^{self.inf} |"]
        parts.extend(str(f) for f in self.factors)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "n": self.strands,
            "inf": self.inf,
            "factors": [[v + 1 for v in f.perm] for f in self.factors],
        }


def normal_form(w: BraidWord) -> LeftNormalForm:
    n = w.strands
    inf, perms = _from_pieces(n, _word_pieces(n, w.letters))
    return LeftNormalForm._make(n, inf, perms)


def nf_to_word(f: LeftNormalForm) -> BraidWord:
    n = f.strands
    d = delta_letters(n)
    if f.inf >= 0:
        letters = list(d) * f.inf
    else:
        letters = [-x for x in reversed(d)] * (-f.inf)
    for s in f.factors:
        letters.extend(sp.p_word(s.perm))
    return BraidWord(n, tuple(letters))


def _same(a, b) -> int:
    if a.strands != b.strands:
        raise StrandMismatchError(f"strand counts differ: {a.strands} vs {b.strands}")
    return a.strands


def product(a: LeftNormalForm, b: LeftNormalForm) -> LeftNormalForm:
    n = _same(a, b)
    # Δ^p A Δ^q B = Δ^{p+q} τ^q(A) B; τ^q(A) is still left-weighted
    builder = _Builder(n, a.inf + b.inf, (sp.p_tau(p, b.inf) for p in a.perms))
    for p in b.perms:
        builder.append(p)
    return LeftNormalForm._make(n, builder.inf, builder.factors)


def inverse(a: LeftNormalForm) -> LeftNormalForm:
    n = a.strands
    # a_i^{-1} = ∂a_i · Δ^{-1}
    pieces: list[Piece] = []
    for p in reversed(a.perms):
        pieces.append(sp.p_right_complement(p))
        pieces.append(-1)
    pieces.append(-a.inf)
    inf, perms = _from_pieces(n, pieces)
    return LeftNormalForm._make(n, inf, perms)


def nf_identity(n: int) -> LeftNormalForm:
    return LeftNormalForm(n, 0, ())


def nf_delta(n: int, k: int = 1) -> LeftNormalForm:
    return LeftNormalForm(n, k, ())


def nf_simple(s: SimpleElement) -> LeftNormalForm:
    inf, perms = _from_pieces(s.strands, [s.perm])
    return LeftNormalForm._make(s.strands, inf, perms)


def conjugate(f: LeftNormalForm, c: LeftNormalForm) -> LeftNormalForm:
    """c^{-1} f c."""
    return product(product(inverse(c), f), c)


def equal(a: BraidWord, b: BraidWord) -> bool:
    """Decide whether two words represent the same braid."""
    _same(a, b)
    return normal_form(a) == normal_form(b)


def is_trivial(w: BraidWord) -> bool:
    return normal_form(w).is_identity()


def nf_permutation(f: LeftNormalForm) -> tuple[int, ...]:
    """Permutation of the braid: reversal^inf composed with the factor permutations."""
    return permutation_images(f.strands, nf_to_word(f).letters)
