"""
Periodicity and centrality.

A braid is periodic when some power is a power of Δ; such braids are conjugate
to a power of δ = σ1⋯σ_{n-1} or of ε = σ1·δ. Exponent sums of conjugates of δ^k
and ε^k are k(n-1) and kn, which gates the conjugacy checks.
"""

from __future__ import annotations

from typing import Optional

from .conjugacy import DEFAULT_MAX_VERTICES, are_conjugate
from .normal_form import normal_form
from .words import BraidWord, exponent_sum, power

__all__ = ["delta_braid", "epsilon_braid", "is_periodic", "is_central", "power"]


def delta_braid(n: int) -> BraidWord:
    if n < 2:
        raise ValueError("n must be >= 2")
    return BraidWord(n, tuple(range(1, n)))


def epsilon_braid(n: int) -> BraidWord:
    if n < 2:
        raise ValueError("n must be >= 2")
    return BraidWord(n, (1,) + tuple(range(1, n)))


def is_periodic(x: BraidWord, max_vertices: int = DEFAULT_MAX_VERTICES) -> Optional[tuple[str, int]]:
    """``("delta", k)`` or ``("epsilon", k)`` if x is conjugate to δ^k or ε^k, else None."""
    n = x.strands
    if n == 1:
        return ("delta", 0)
    s = exponent_sum(x)
    if s % (n - 1) == 0:
        k = s // (n - 1)
        if are_conjugate(x, power(delta_braid(n), k), max_vertices) is not None:
            return ("delta", k)
    if s % n == 0:
        k = s // n
        if are_conjugate(x, power(epsilon_braid(n), k), max_vertices) is not None:
            return ("epsilon", k)
    return None


def is_central(x: BraidWord) -> bool:
    """The center is generated by Δ^2 (by Δ when n = 2)."""
    n = x.strands
    if n == 1:
        return True
    f = normal_form(x)
    if f.factors:
        return False
    return n == 2 or f.inf % 2 == 0
