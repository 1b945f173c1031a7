"""
Pure braids: strand removal and insertion, and combing.

Combing follows strand n through the word. Writing α_j = σ_j σ_{j+1} ⋯ σ_{n-1}
(α_n = 1) and j_k for the position of that strand after k letters, the word is
bracketed as ∏ α_{j_{k-1}}^{-1} σ^{e} α_{j_k}. Each bracket is trivial, a letter
x_j^{±1} of the free group F_{n-1} = ⟨x_1, …, x_{n-1}⟩ (with
x_j = σ_{n-1}^{-1}⋯σ_{j+1}^{-1} σ_j^2 σ_{j+1}⋯σ_{n-1}), or a single σ-letter of
lower index. The σ-letters are then pushed to the right by conjugation, giving
w = W_1·W_2 with W_1 in F_{n-1} and W_2 a braid on n-1 strands. Recursing on
W_2 yields one free word per level.
"""

from __future__ import annotations

import dataclasses

from .artin import FreeWord
from .words import (
    BraidError,
    BraidWord,
    _free_reduce_letters,
    permutation_images,
)


class NotPureError(BraidError, ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class CombingCoordinates:
    """Free words by level, top level (rank n-1) first, down to rank 1."""

    levels: tuple[FreeWord, ...]

    def is_trivial(self) -> bool:
        return all(len(level) == 0 for level in self.levels)

    def to_json(self) -> dict:
        return {"levels": [{"rank": lv.rank, "word": list(lv.letters)} for lv in self.levels]}


def is_pure(w: BraidWord) -> bool:
    return permutation_images(w.strands, w.letters) == tuple(range(w.strands))


def pure_generator(i: int, ambient: int) -> BraidWord:
    """The word of x_i in B_ambient: σ_{m-1}^{-1}⋯σ_{i+1}^{-1} σ_i^2 σ_{i+1}⋯σ_{m-1}, m = ambient."""
    if not 1 <= i <= ambient - 1:
        raise ValueError(f"pure generator index {i} out of range 1..{ambient - 1}")
    tail = tuple(range(i + 1, ambient))
    return BraidWord(ambient, tuple(-x for x in reversed(tail)) + (i, i) + tail)


def _split_last_strand(n: int, letters: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """
    w = W_1·W_2 for a word whose last strand returns home. W_1 is a reduced word
    in x_1..x_{n-1}, W_2 a word in σ_1..σ_{n-2}.
    """
    pos = n
    tokens: list[tuple[str, int]] = []
    for x in letters:
        a, e = abs(x), (1 if x > 0 else -1)
        if a == pos:
            if e < 0:
                tokens.append(("x", -pos))
            pos += 1
        elif a == pos - 1:
            if e > 0:
                tokens.append(("x", pos - 1))
            pos -= 1
        elif a < pos - 1:
            tokens.append(("s", x))
        else:
            # σ_a α_j = α_j σ_{a-1} for a > j
            tokens.append(("s", e * (a - 1)))
    if pos != n:
        raise NotPureError("the last strand does not return to its starting position")

    # right to left: suffix = Y·T; prepending σ gives (σYσ^{-1})·σT
    y: list[int] = []
    t: list[int] = []
    for kind, v in reversed(tokens):
        if kind == "x":
            y = _free_reduce_letters([v] + y)
        else:
            y = _conjugate_free(y, v)
            t.insert(0, v)
    return y, t


def _conj_image(i: int, e: int, j: int) -> tuple[int, ...]:
    """σ_i^e x_j σ_i^{-e} as a word in the x's."""
    if e > 0:
        if j == i + 1:
            return (i,)
        if j == i:
            return (-i, i + 1, i)
    else:
        if j == i:
            return (i + 1,)
        if j == i + 1:
            return (i + 1, i, -(i + 1))
    return (j,)


def _conjugate_free(y: list[int], s: int) -> list[int]:
    i, e = abs(s), (1 if s > 0 else -1)
    out: list[int] = []
    for x in y:
        img = _conj_image(i, e, abs(x))
        if x < 0:
            img = tuple(-z for z in reversed(img))
        for z in img:
            if out and out[-1] == -z:
                out.pop()
            else:
                out.append(z)
    return out


def comb(w: BraidWord) -> CombingCoordinates:
    if not is_pure(w):
        raise NotPureError("combing needs a pure braid")
    levels = []
    letters = w.letters
    for k in range(w.strands, 1, -1):
        y, t = _split_last_strand(k, letters)
        levels.append(FreeWord(k - 1, tuple(y)))
        letters = tuple(t)
    return CombingCoordinates(tuple(levels))


def is_trivial_pure(w: BraidWord) -> bool:
    return comb(w).is_trivial()


def uncomb(n: int, coords: CombingCoordinates) -> BraidWord:
    """Evaluate coordinates back to a braid word in B_n (levels multiplied top first)."""
    letters: list[int] = []
    for level in coords.levels:
        k = level.rank + 1
        for x in level.letters:
            g = pure_generator(abs(x), k).letters
            letters.extend(g if x > 0 else tuple(-z for z in reversed(g)))
    return BraidWord(n, tuple(letters))


def remove_last_strand(w: BraidWord) -> BraidWord:
    """Delete strand n from a braid whose permutation fixes n."""
    n = w.strands
    if n < 2:
        raise NotPureError("need at least two strands")
    perm = permutation_images(n, w.letters)
    if perm[n - 1] != n - 1:
        raise NotPureError("the permutation moves the last strand")
    _, t = _split_last_strand(n, w.letters)
    return BraidWord(n - 1, tuple(t))


def include_strand(w: BraidWord) -> BraidWord:
    """Add a straight strand on the right."""
    return BraidWord(w.strands + 1, w.letters)
