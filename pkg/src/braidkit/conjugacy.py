"""
Conjugacy via cyclic sliding.

Cyclic sliding conjugates x = Δ^p x_1⋯x_r by its preferred prefix
τ^{-p}(x_1) ∧ ∂x_r. Iterating it always ends in a periodic orbit. The set SC(x)
of all elements of such orbits in the conjugacy class is finite and connected
under conjugation by simple elements, so it is computed by closing a seed
circuit under conjugation by every nontrivial simple element.
"""

from __future__ import annotations

import dataclasses
import itertools
from collections import deque
from typing import Optional

from . import simple as sp
from .normal_form import (
    LeftNormalForm,
    conjugate,
    inverse,
    nf_identity,
    nf_simple,
    nf_to_word,
    normal_form,
    product,
)
from .simple import SimpleElement
from .words import (
    BraidError,
    BraidWord,
    StrandMismatchError,
    exponent_sum,
    permutation,
)

DEFAULT_MAX_VERTICES = 10**5


class ResourceCapExceeded(BraidError, RuntimeError):
    pass


class ConjugatorVerificationError(BraidError, AssertionError):
    """An emitted conjugator failed its check; indicates an internal bug."""


def preferred_prefix(f: LeftNormalForm) -> SimpleElement:
    n = f.strands
    if not f.factors:
        return SimpleElement.identity(n)
    first = sp.p_tau(f.factors[0].perm, f.inf)  # Δ^p x_1 Δ^{-p}
    last = sp.p_right_complement(f.factors[-1].perm)  # x_r^{-1} Δ
    return SimpleElement(n, sp.p_meet(first, last))


def cyclic_slide(f: LeftNormalForm) -> tuple[LeftNormalForm, SimpleElement]:
    p = preferred_prefix(f)
    if p.is_identity():
        return f, p
    return conjugate(f, nf_simple(p)), p


def _slide_orbit(f: LeftNormalForm) -> tuple[list[LeftNormalForm], list[SimpleElement], int]:
    """Trajectory until the first repeat; returns (states, prefixes, index where the circuit starts)."""
    seen = {f: 0}
    states = [f]
    prefixes: list[SimpleElement] = []
    while True:
        g, p = cyclic_slide(states[-1])
        prefixes.append(p)
        if g in seen:
            return states, prefixes, seen[g]
        seen[g] = len(states)
        states.append(g)


def _compose(n: int, prefixes) -> LeftNormalForm:
    c = nf_identity(n)
    for p in prefixes:
        c = product(c, nf_simple(p))
    return c


def slide_to_circuit_nf(f: LeftNormalForm) -> tuple[LeftNormalForm, LeftNormalForm, int]:
    states, prefixes, start = _slide_orbit(f)
    conj = _compose(f.strands, prefixes[:start])
    return states[start], conj, len(states) - start


def slide_to_circuit(x: BraidWord) -> tuple[LeftNormalForm, BraidWord, int]:
    """First recurrent element z, conjugator c with z = c^{-1} x c, and the circuit length."""
    z, c, period = slide_to_circuit_nf(normal_form(x))
    return z, nf_to_word(c), period


def _on_circuit(f: LeftNormalForm, limit: int) -> bool:
    """Whether iterated sliding returns to f itself."""
    seen = {f}
    g = f
    for _ in range(limit):
        g, _p = cyclic_slide(g)
        if g == f:
            return True
        if g in seen:
            return False
        seen.add(g)
    raise ResourceCapExceeded(f"sliding orbit longer than {limit}")


@dataclasses.dataclass(frozen=True)
class SlidingCircuitGraph:
    """
    Vertices are the elements of SC(x) sorted by structural key; an edge
    (u, v, s) means v = s^{-1} u s for the simple element s.
    ``vertices[base] = base_conjugator^{-1} · x · base_conjugator``.
    """

    strands: int
    vertices: tuple[LeftNormalForm, ...]
    edges: tuple[tuple[int, int, SimpleElement], ...]
    base: int
    base_conjugator: LeftNormalForm

    def index(self) -> dict[LeftNormalForm, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "base_conjugator": list(nf_to_word(self.base_conjugator).letters),
            "vertices": [v.to_json() for v in self.vertices],
            "edges": [
                {"from": u, "to": v, "conjugator": sp.p_word(s.perm)} for u, v, s in self.edges
            ],
        }

    def paths_from_base(self) -> tuple[list[Optional[LeftNormalForm]], list[Optional[int]]]:
        """BFS spanning tree: conjugator P_v with v = P_v^{-1}·base·P_v, and the tree edge used."""
        n = self.strands
        adj: dict[int, list[tuple[int, int]]] = {}
        for e, (u, v, _s) in enumerate(self.edges):
            adj.setdefault(u, []).append((v, e))
        paths: list[Optional[LeftNormalForm]] = [None] * len(self.vertices)
        via: list[Optional[int]] = [None] * len(self.vertices)
        paths[self.base] = nf_identity(n)
        queue = deque([self.base])
        while queue:
            u = queue.popleft()
            for v, e in adj.get(u, ()):
                if paths[v] is None:
                    paths[v] = product(paths[u], nf_simple(self.edges[e][2]))
                    via[v] = e
                    queue.append(v)
        return paths, via


def _simples(n: int) -> list[tuple[int, ...]]:
    ident = sp.p_identity(n)
    return [p for p in itertools.permutations(range(n)) if p != ident]


def sliding_circuits_nf(f: LeftNormalForm, max_vertices: int = DEFAULT_MAX_VERTICES) -> SlidingCircuitGraph:
    n = f.strands
    seed, seed_conj, _period = slide_to_circuit_nf(f)
    candidates = [(p, nf_simple(SimpleElement(n, p))) for p in _simples(n)]
    orbit_limit = max(max_vertices, 1000)

    known = {seed: 0}
    order = [seed]
    raw_edges: list[tuple[int, int, tuple[int, ...]]] = []
    rejected: set[LeftNormalForm] = set()
    queue = deque([0])
    while queue:
        u = queue.popleft()
        z = order[u]
        for p, s in candidates:
            z2 = conjugate(z, s)
            # elements of SC(x) all share inf and sup, which rejects most candidates cheaply
            if z2.inf != seed.inf or len(z2.factors) != len(seed.factors):
                continue
            k = known.get(z2)
            if k is None:
                if z2 in rejected:
                    continue
                if not _on_circuit(z2, orbit_limit):
                    rejected.add(z2)
                    continue
                if len(order) >= max_vertices:
                    raise ResourceCapExceeded(f"SC has more than {max_vertices} elements")
                k = len(order)
                known[z2] = k
                order.append(z2)
                queue.append(k)
            raw_edges.append((u, k, p))

    # canonical vertex order
    ranking = sorted(range(len(order)), key=lambda k: order[k].key())
    new_index = {old: new for new, old in enumerate(ranking)}
    vertices = tuple(order[k] for k in ranking)
    edges = tuple(
        sorted(
            ((new_index[u], new_index[v], SimpleElement(n, p)) for u, v, p in raw_edges),
            key=lambda e: (e[0], e[1], e[2].perm),
        )
    )
    return SlidingCircuitGraph(n, vertices, edges, new_index[0], seed_conj)


def sliding_circuits(x: BraidWord, max_vertices: int = DEFAULT_MAX_VERTICES) -> SlidingCircuitGraph:
    return sliding_circuits_nf(normal_form(x), max_vertices)


def _verify(x: LeftNormalForm, c: LeftNormalForm, y: LeftNormalForm) -> None:
    if conjugate(x, c) != y:
        raise ConjugatorVerificationError("conjugator check failed")


def are_conjugate(
    x: BraidWord, y: BraidWord, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Optional[BraidWord]:
    """A word c with c^{-1} x c = y, or None when x and y are not conjugate."""
    if x.strands != y.strands:
        raise StrandMismatchError(f"strand counts differ: {x.strands} vs {y.strands}")
    if exponent_sum(x) != exponent_sum(y):
        return None
    if permutation(x).cycle_type() != permutation(y).cycle_type():
        return None
    xf, yf = normal_form(x), normal_form(y)
    y_tilde, cy, _ = slide_to_circuit_nf(yf)
    # elements of SC share inf and sup
    graph = sliding_circuits_nf(xf, max_vertices)
    k = graph.index().get(y_tilde)
    if k is None:
        return None
    paths, _via = graph.paths_from_base()
    # y~ = P^{-1} B^{-1} x B P and y~ = cy^{-1} y cy  =>  c = B P cy^{-1}
    c = product(product(graph.base_conjugator, paths[k]), inverse(cy))
    _verify(xf, c, yf)
    return nf_to_word(c)


def centralizer_generators(x: BraidWord, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[BraidWord]:
    """
    Elements commuting with x read off the loops of the sliding-circuit graph:
    each edge (u, v, s) outside the BFS tree gives P_u·s·P_v^{-1}, carried back
    to x. Soundness (commutation) is checked; minimality is not claimed.
    """
    xf = normal_form(x)
    graph = sliding_circuits_nf(xf, max_vertices)
    paths, via = graph.paths_from_base()
    b = graph.base_conjugator
    b_inv = inverse(b)
    tree = {e for e in via if e is not None}
    found: dict[LeftNormalForm, None] = {}
    for e, (u, v, s) in enumerate(graph.edges):
        if e in tree:
            continue
        loop = product(product(paths[u], nf_simple(s)), inverse(paths[v]))
        g = product(product(b, loop), b_inv)
        if g.is_identity():
            continue
        _verify(xf, g, xf)
        found.setdefault(g)
    return [nf_to_word(g) for g in sorted(found, key=LeftNormalForm.key)]
