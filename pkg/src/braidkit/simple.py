"""
Simple elements (permutation braids): the positive prefixes of Δ.

A simple element is stored as its permutation η(s) in 0-based one-line
notation, using the same convention as :func:`braidkit.words.permutation`
(η(ab) = η(a)∘η(b)). The raw tuple helpers prefixed ``p_`` are the hot path for
normal forms; :class:`SimpleElement` wraps them for the public API.

With this convention:

* σ_i ≼ s  iff  η(s)^{-1} has a descent at i, i.e. value i-1 sits to the
  right of value i in η(s) (0-based values);
* s ≽ σ_i  iff  η(s) itself has a descent at i.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

from .words import BraidError, BraidWord, StrandMismatchError

Perm = tuple[int, ...]


class NotSimpleError(BraidError, ValueError):
    pass


# -- raw permutation helpers -------------------------------------------------

def p_identity(n: int) -> Perm:
    return tuple(range(n))


def p_delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def p_inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for k, v in enumerate(p):
        inv[v] = k
    return tuple(inv)


def p_compose(a: Sequence[int], b: Sequence[int]) -> Perm:
    """η(a·b) = η(a)∘η(b)."""
    return tuple(a[j] for j in b)


def p_atom(n: int, i: int) -> Perm:
    p = list(range(n))
    p[i - 1], p[i] = i, i - 1
    return tuple(p)


def p_starts_with(p: Sequence[int], i: int) -> bool:
    """σ_i ≼ s."""
    # value i-1 to the right of value i
    return p.index(i - 1) > p.index(i)


def p_ends_with(p: Sequence[int], i: int) -> bool:
    """s ≽ σ_i."""
    return p[i - 1] > p[i]


def p_starting_set(p: Sequence[int]) -> list[int]:
    inv = p_inverse(p)
    return [i for i in range(1, len(p)) if inv[i - 1] > inv[i]]


def p_finishing_set(p: Sequence[int]) -> list[int]:
    return [i for i in range(1, len(p)) if p[i - 1] > p[i]]


def p_strip_left(p: Sequence[int], i: int) -> Perm:
    """σ_i^{-1}·s (requires σ_i ≼ s): swap the values i-1 and i."""
    return tuple(i if v == i - 1 else i - 1 if v == i else v for v in p)


def p_strip_right(p: Sequence[int], i: int) -> Perm:
    """s·σ_i^{-1} (requires s ≽ σ_i); equally s·σ_i when σ_i is not a suffix."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def p_right_complement(p: Sequence[int]) -> Perm:
    """c with s·c = Δ: η(c) = η(s)^{-1}∘reversal."""
    inv = p_inverse(p)
    n = len(p)
    return tuple(inv[n - 1 - k] for k in range(n))


def p_left_complement(p: Sequence[int]) -> Perm:
    """l with l·s = Δ: η(l) = reversal∘η(s)^{-1}."""
    n = len(p)
    return tuple(n - 1 - v for v in p_inverse(p))


def p_tau(p: Sequence[int], k: int = 1) -> Perm:
    """Δ^{-k} s Δ^k."""
    if k % 2 == 0:
        return tuple(p)
    n = len(p)
    return tuple(n - 1 - p[n - 1 - j] for j in range(n))


def p_length(p: Sequence[int]) -> int:
    """Number of letters of the permutation braid (its number of inversions)."""
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


def p_meet(a: Sequence[int], b: Sequence[int]) -> Perm:
    """Greatest common prefix, by peeling common atoms off both arguments."""
    n = len(a)
    m = list(range(n))
    a, b = tuple(a), tuple(b)
    while True:
        ia, ib = p_inverse(a), p_inverse(b)
        for i in range(1, n):
            if ia[i - 1] > ia[i] and ib[i - 1] > ib[i]:
                a, b = p_strip_left(a, i), p_strip_left(b, i)
                m[i - 1], m[i] = m[i], m[i - 1]
                break
        else:
            return tuple(m)


def p_meet_right(a: Sequence[int], b: Sequence[int]) -> Perm:
    """Greatest common suffix."""
    n = len(a)
    m = list(range(n))
    a, b = list(a), list(b)
    while True:
        for i in range(1, n):
            if a[i - 1] > a[i] and b[i - 1] > b[i]:
                a[i - 1], a[i] = a[i], a[i - 1]
                b[i - 1], b[i] = b[i], b[i - 1]
                # m <- σ_i·m
                m = [i if v == i - 1 else i - 1 if v == i else v for v in m]
                break
        else:
            return tuple(m)


def p_join(a: Sequence[int], b: Sequence[int]) -> Perm:
    """Least common multiple: the left complement of the common suffix of the right complements."""
    return p_left_complement(p_meet_right(p_right_complement(a), p_right_complement(b)))


def p_word(p: Sequence[int]) -> list[int]:
    """Canonical positive word: repeatedly peel the smallest atom prefix."""
    p = tuple(p)
    n = len(p)
    letters = []
    while True:
        inv = p_inverse(p)
        for i in range(1, n):
            if inv[i - 1] > inv[i]:
                letters.append(i)
                p = p_strip_left(p, i)
                break
        else:
            return letters


def p_from_letters(n: int, letters: Sequence[int]) -> Perm:
    """Permutation of a positive word, checking that no two strands cross twice."""
    at = list(range(n))  # at[pos] = strand currently at pos (strands named by start position)
    crossed = set()
    for x in letters:
        if x <= 0:
            raise NotSimpleError(f"word is not positive (letter {x})")
        if x >= n:
            raise NotSimpleError(f"letter {x} out of range for {n} strands")
        a, b = at[x - 1], at[x]
        pair = (min(a, b), max(a, b))
        if pair in crossed:
            raise NotSimpleError(f"strands {pair[0] + 1},{pair[1] + 1} cross twice")
        crossed.add(pair)
        at[x - 1], at[x] = b, a
    return tuple(at)


# -- public type ---------------------------------------------------------------

@dataclasses.dataclass(frozen=True, order=True)
class SimpleElement:
    """A permutation braid on ``strands`` strands, identified with its permutation."""

    strands: int
    perm: Perm

    def __post_init__(self):
        if len(self.perm) != self.strands or sorted(self.perm) != list(range(self.strands)):
            raise ValueError(f"bad permutation {self.perm} for {self.strands} strands")

    @classmethod
    def identity(cls, n: int) -> SimpleElement:
        return cls(n, p_identity(n))

    @classmethod
    def atom(cls, n: int, i: int) -> SimpleElement:
        return cls(n, p_atom(n, i))

    def is_identity(self) -> bool:
        return self.perm == p_identity(self.strands)

    def is_delta(self) -> bool:
        return self.perm == p_delta(self.strands)

    def __len__(self) -> int:
        return p_length(self.perm)

    def __str__(self) -> str:
        return "[" + " ".join(str(x) for x in p_word(self.perm)) + "]"


def delta(n: int) -> SimpleElement:
    if n < 1:
        raise ValueError("n must be >= 1")
    return SimpleElement(n, p_delta(n))


def to_word(s: SimpleElement) -> BraidWord:
    return BraidWord(s.strands, tuple(p_word(s.perm)))


def from_word(w: BraidWord) -> SimpleElement:
    """The simple element represented by a positive, square-free word."""
    return SimpleElement(w.strands, p_from_letters(w.strands, w.letters))


def all_simples(n: int) -> list[SimpleElement]:
    import itertools

    return [SimpleElement(n, p) for p in itertools.permutations(range(n))]


def left_divides_atom(i: int, s: SimpleElement) -> bool:
    if not 1 <= i <= s.strands - 1:
        raise ValueError(f"generator index {i} out of range for {s.strands} strands")
    return p_starts_with(s.perm, i)


def _same(s: SimpleElement, t: SimpleElement) -> None:
    if s.strands != t.strands:
        raise StrandMismatchError(f"strand counts differ: {s.strands} vs {t.strands}")


def meet(s: SimpleElement, t: SimpleElement) -> SimpleElement:
    _same(s, t)
    return SimpleElement(s.strands, p_meet(s.perm, t.perm))


def meet_right(s: SimpleElement, t: SimpleElement) -> SimpleElement:
    _same(s, t)
    return SimpleElement(s.strands, p_meet_right(s.perm, t.perm))


def join(s: SimpleElement, t: SimpleElement) -> SimpleElement:
    _same(s, t)
    return SimpleElement(s.strands, p_join(s.perm, t.perm))


def right_complement(s: SimpleElement) -> SimpleElement:
    return SimpleElement(s.strands, p_right_complement(s.perm))


def left_complement(s: SimpleElement) -> SimpleElement:
    return SimpleElement(s.strands, p_left_complement(s.perm))


def tau(s: SimpleElement, k: int = 1) -> SimpleElement:
    return SimpleElement(s.strands, p_tau(s.perm, k))
