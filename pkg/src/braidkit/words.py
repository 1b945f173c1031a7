"""
Braid words over the Artin generators.

A braid word on n strands is a sequence of nonzero integers: the letter ``i``
stands for the generator σ_i and ``-i`` for its inverse, with 1 ≤ |i| ≤ n-1.
Words are plain immutable values; nothing here decides braid equality, that is
the job of :mod:`braidkit.normal_form`.

Permutations follow the homomorphism convention η(ab) = η(a)∘η(b) with
η(σ_i) = (i i+1), so σ1σ2 maps 1→2→3→1. They are stored 0-based.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Sequence


class BraidError(Exception):
    """Base class for domain errors raised by braidkit."""


class WordSyntaxError(BraidError, ValueError):
    pass


class StrandMismatchError(BraidError, ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A permutation of {0, ..., n-1} in one-line notation (``images[k]`` is the image of k)."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    def is_identity(self) -> bool:
        return all(k == v for k, v in enumerate(self.images))

    def __mul__(self, other: Permutation) -> Permutation:
        # (self * other)(k) = self(other(k))
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for k, v in enumerate(self.images):
            inv[v] = k
        return Permutation(tuple(inv))

    def cycle_type(self) -> tuple[int, ...]:
        """Sorted (descending) cycle lengths, fixed points included."""
        seen = [False] * len(self.images)
        lengths = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length = 0
            k = start
            while not seen[k]:
                seen[k] = True
                k = self.images[k]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def one_based(self) -> list[int]:
        return [v + 1 for v in self.images]

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.one_based())


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in σ_1^{±1}, ..., σ_{n-1}^{±1} on a fixed number of strands."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                raise WordSyntaxError(
                    f"letter {letter} out of range: index {abs(letter)} needs >= {abs(letter) + 1} strands"
                    if letter else "letter 0 is not a generator"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __invert__(self) -> BraidWord:
        return invert(self)

    def is_positive(self) -> bool:
        """True when no inverse letter occurs (a syntactic property of the word)."""
        return all(x > 0 for x in self.letters)


_TOKEN_SPLIT = re.compile(r"[\s,]+")
_INT_TOKEN = re.compile(r"-?[0-9]+")


def parse_letters(text: str, limit: int, out_of_range: str = "index {index} out of range 1..{limit}") -> list[int]:
    """Parse the shared token grammar; indices must satisfy 1 <= |i| <= limit."""
    letters = []
    for token in _TOKEN_SPLIT.split(text.strip()):
        if not token:
            continue
        if _INT_TOKEN.fullmatch(token):
            value = int(token)
        elif len(token) == 1 and token.isascii() and token.isalpha() and token.lower() != "z":
            value = ord(token.lower()) - ord("a") + 1
            if token.isupper():
                value = -value
        else:
            raise WordSyntaxError(f"bad token {token!r}")
        if value == 0:
            raise WordSyntaxError("0 is not a generator")
        if abs(value) > limit:
            raise WordSyntaxError(out_of_range.format(index=abs(value), limit=limit, need=abs(value) + 1))
        letters.append(value)
    return letters


def parse_word(text: str, strands: int) -> BraidWord:
    """
    Parse a braid word. Tokens are separated by whitespace or commas; a token is
    a signed decimal index or a single letter alias (a..y = σ_1..σ_25, upper
    case for inverses).

    >>> parse_word("1 2 -1", 3).letters
    (1, 2, -1)
    >>> parse_word("a,B", 3).letters
    (1, -2)
    """
    if strands < 1:
        raise WordSyntaxError(f"strand count must be >= 1, got {strands}")
    letters = parse_letters(text, strands - 1, "index {index} needs >= {need} strands")
    return BraidWord(strands, tuple(letters))


def identity(strands: int) -> BraidWord:
    return BraidWord(strands, ())


def _free_reduce_letters(letters: Iterable[int]) -> list[int]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent σ_i^{±1}σ_i^{∓1} pairs. This is not a triviality test."""
    return BraidWord(w.strands, tuple(_free_reduce_letters(w.letters)))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-x for x in reversed(w.letters)))


def _check_same(*words: BraidWord) -> int:
    n = words[0].strands
    for w in words[1:]:
        if w.strands != n:
            raise StrandMismatchError(f"strand counts differ: {n} vs {w.strands}")
    return n


def concat(*words: BraidWord) -> BraidWord:
    n = _check_same(*words)
    letters: list[int] = []
    for w in words:
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))


def power(w: BraidWord, k: int) -> BraidWord:
    """k-fold concatenation of w (of its inverse when k < 0)."""
    base = w if k >= 0 else invert(w)
    return BraidWord(w.strands, base.letters * abs(k))


def reverse(w: BraidWord) -> BraidWord:
    """The reversal anti-automorphism: letter order reversed, signs kept."""
    return BraidWord(w.strands, tuple(reversed(w.letters)))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def permutation_images(n: int, letters: Sequence[int]) -> tuple[int, ...]:
    images = list(range(n))
    for x in letters:
        i = abs(x)
        images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def permutation(w: BraidWord) -> Permutation:
    """The image of w in the symmetric group; signs are ignored."""
    return Permutation(permutation_images(w.strands, w.letters))


def apply_tau(w: BraidWord, k: int = 1) -> BraidWord:
    """Δ^{-k} w Δ^k: odd k sends σ_i to σ_{n-i}, even k is the identity."""
    if k % 2 == 0:
        return w
    n = w.strands
    return BraidWord(n, tuple((n - abs(x)) * (1 if x > 0 else -1) for x in w.letters))


def delta_letters(n: int) -> tuple[int, ...]:
    """Letters of Δ = σ1 (σ2σ1) ... (σ_{n-1} ... σ1)."""
    letters: list[int] = []
    for top in range(1, n):
        letters.extend(range(top, 0, -1))
    return tuple(letters)


def delta_word(n: int, k: int = 1) -> BraidWord:
    return power(BraidWord(n, delta_letters(n)), k)
