"""
Artin's representation of B_n in Aut(F_n).

σ_i acts on the free generators by x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}
and fixes the others. Braid words act left to right: the first letter of the
braid word is applied first, so act(ab, w) = act(b, act(a, w)).

Triviality by action is an independent (and exponential-time) word-problem
oracle; it is not meant to replace normal forms.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

from .words import BraidWord, WordSyntaxError, _free_reduce_letters, parse_letters


@dataclasses.dataclass(frozen=True)
class FreeWord:
    """A reduced word in x_1^{±1}, ..., x_rank^{±1}."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.rank:
                raise WordSyntaxError(f"free generator {x} out of range 1..{self.rank}")
        object.__setattr__(self, "letters", tuple(_free_reduce_letters(letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(self.rank, tuple(-x for x in reversed(self.letters)))


def parse_free_word(text: str, rank: int) -> FreeWord:
    return FreeWord(rank, tuple(parse_letters(text, rank)))


def generator(rank: int, j: int) -> FreeWord:
    return FreeWord(rank, (j,))


def boundary_word(rank: int) -> FreeWord:
    """x_1 x_2 ⋯ x_n, fixed by every braid."""
    return FreeWord(rank, tuple(range(1, rank + 1)))


def _images(i: int, inverse: bool) -> dict[int, tuple[int, ...]]:
    if not inverse:
        return {i: (i + 1,), i + 1: (-(i + 1), i, i + 1)}
    return {i + 1: (i,), i: (i, i + 1, -i)}


def _substitute(letters: Sequence[int], table: dict[int, tuple[int, ...]]) -> list[int]:
    out: list[int] = []
    for x in letters:
        img = table.get(abs(x))
        if img is None:
            img = (abs(x),)
        if x < 0:
            img = tuple(-y for y in reversed(img))
        for y in img:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return out


def act_generator(i: int, w: FreeWord) -> FreeWord:
    """Apply ρ_{σ_i} (ρ_{σ_i}^{-1} when i < 0) to w."""
    if i == 0 or abs(i) >= w.rank:
        raise ValueError(f"generator {i} out of range for rank {w.rank}")
    return FreeWord(w.rank, tuple(_substitute(w.letters, _images(abs(i), i < 0))))


def act(beta: BraidWord, w: FreeWord) -> FreeWord:
    if beta.strands != w.rank:
        raise ValueError(f"braid on {beta.strands} strands cannot act on F_{w.rank}")
    letters: list[int] = list(w.letters)
    for x in beta.letters:
        letters = _substitute(letters, _images(abs(x), x < 0))
    return FreeWord(w.rank, tuple(letters))


def is_trivial_by_action(beta: BraidWord) -> bool:
    n = beta.strands
    return all(act(beta, generator(n, j)).letters == (j,) for j in range(1, n + 1))


def cyclically_reduce(w: FreeWord) -> FreeWord:
    letters = list(w.letters)
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo] == -letters[hi - 1]:
        lo += 1
        hi -= 1
    return FreeWord(w.rank, tuple(letters[lo:hi]))


def is_braid_automorphism(images: Sequence[FreeWord]) -> bool:
    """
    Artin's criterion for the endomorphism x_i ↦ images[i-1]: every image is a
    conjugate of a generator (cyclically reduces to one positive letter) and
    x_1⋯x_n is fixed.
    """
    n = len(images)
    if any(img.rank != n for img in images):
        raise ValueError("every image must lie in F_n with n = number of images")
    for img in images:
        core = cyclically_reduce(img).letters
        if len(core) != 1 or core[0] < 0:
            return False
    product: list[int] = []
    for img in images:
        product.extend(img.letters)
    return tuple(_free_reduce_letters(product)) == boundary_word(n).letters
