"""
Dehornoy's left-invariant ordering, decided by handle reduction.

A σ_i-handle is a subword σ_i^e v σ_i^{-e} whose interior v only uses generators
of index > i. Reducing it replaces the handle by v with every σ_{i+1}^d rewritten
as σ_{i+1}^{-e} σ_i^d σ_{i+1}^e (higher letters commute with σ_i and are kept).
We always reduce the handle that closes first; its interior contains no handle,
so the reduction is permitted. Once no handle is left, the lowest generator
present occurs with a single sign, which is the sign of the braid.
"""

from __future__ import annotations

from .words import BraidError, BraidWord, StrandMismatchError, _free_reduce_letters

DEFAULT_FUEL = 10**6


class FuelExhausted(BraidError, RuntimeError):
    pass


class OrderConsistencyError(BraidError, AssertionError):
    pass


def _first_handle(letters: list[int]) -> tuple[int, int] | None:
    """Positions (start, end) of the handle whose closing letter comes first."""
    n = max((abs(x) for x in letters), default=0) + 1
    # open_[i] = (position, sign) of the last σ_i seen with nothing of index < i after it
    open_: list[tuple[int, int] | None] = [None] * (n + 1)
    for pos, x in enumerate(letters):
        i = abs(x)
        e = 1 if x > 0 else -1
        prev = open_[i]
        if prev is not None and prev[1] == -e:
            return prev[0], pos
        open_[i] = (pos, e)
        for k in range(i + 1, n + 1):
            open_[k] = None
    return None


def _reduce_handle(letters: list[int], start: int, end: int) -> list[int]:
    x = letters[start]
    i = abs(x)
    e = 1 if x > 0 else -1
    middle: list[int] = []
    for y in letters[start + 1:end]:
        if abs(y) == i + 1:
            d = 1 if y > 0 else -1
            middle.extend((-e * (i + 1), d * i, e * (i + 1)))
        else:
            middle.append(y)
    return _free_reduce_letters(letters[:start] + middle + letters[end + 1:])


def handle_reduce(w: BraidWord, fuel: int = DEFAULT_FUEL) -> BraidWord:
    """Reduce all handles; the result represents the same braid."""
    letters = _free_reduce_letters(w.letters)
    steps = 0
    while True:
        handle = _first_handle(letters)
        if handle is None:
            return BraidWord(w.strands, tuple(letters))
        steps += 1
        if steps > fuel:
            raise FuelExhausted(f"handle reduction exceeded {fuel} steps")
        letters = _reduce_handle(letters, *handle)


def sign(w: BraidWord, fuel: int = DEFAULT_FUEL) -> int:
    """-1, 0 or +1: the position of w relative to the trivial braid."""
    reduced = handle_reduce(w, fuel).letters
    if not reduced:
        return 0
    low = min(abs(x) for x in reduced)
    signs = {x > 0 for x in reduced if abs(x) == low}
    if len(signs) != 1:
        raise OrderConsistencyError(f"lowest generator σ_{low} occurs with both signs after reduction")
    return 1 if signs.pop() else -1


def less(a: BraidWord, b: BraidWord, fuel: int = DEFAULT_FUEL) -> bool:
    """a < b iff a^{-1}b is σ-positive."""
    if a.strands != b.strands:
        raise StrandMismatchError(f"strand counts differ: {a.strands} vs {b.strands}")
    diff = BraidWord(a.strands, tuple(-x for x in reversed(a.letters)) + b.letters)
    return sign(diff, fuel) > 0


def compare(a: BraidWord, b: BraidWord, fuel: int = DEFAULT_FUEL) -> int:
    if a.strands != b.strands:
        raise StrandMismatchError(f"strand counts differ: {a.strands} vs {b.strands}")
    return sign(BraidWord(a.strands, tuple(-x for x in reversed(a.letters)) + b.letters), fuel)


SIGN_SYMBOLS = {-1: "-", 0: "0", 1: "+"}
