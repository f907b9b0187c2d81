#!/usr/bin/env python3
"""
Lex segments, shadows and max-index statistics of t-spread monomial sets.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import islice

import networkx as nx

from tspread.errors import DomainError
from tspread.expansion import binom, count_tspread, segment_boundary, t_successor
from tspread.monomial import Monomial, MonomialSet, is_t_spread, iter_tspread


@dataclass(frozen=True)
class LexSegment:
    """
    The t-spread lex set of the given size: the `size` lex-greatest members
    of M_{n,d,t}. Only the cardinality is stored; see materialize().
    """

    n: int
    d: int
    t: int
    size: int

    def __post_init__(self):
        universe = count_tspread(self.n, self.d, self.t)
        if self.d < 1:
            raise DomainError(f"lex segments need degree >= 1, got {self.d}")
        if not isinstance(self.size, int) or not 0 <= self.size <= universe:
            raise DomainError(
                f"segment size {self.size} outside 0..{universe} = |M_{{{self.n},{self.d},{self.t}}}|"
            )

    @property
    def universe_size(self):
        return count_tspread(self.n, self.d, self.t)

    @property
    def complement_size(self):
        return self.universe_size - self.size

    def smallest(self):
        """Lex-smallest member, or None for the empty segment."""
        if self.size == 0:
            return None
        return Monomial(segment_boundary(self.complement_size, self.n, self.d, self.t))

    def shadow_size(self):
        """|shad_t(L)|, counted without materializing L."""
        upper = count_tspread(self.n, self.d + 1, self.t)
        return upper - t_successor(self.complement_size, self.d, self.t, self.n)


@dataclass(frozen=True)
class MaxIndexProfile:
    """m_i(L) for i = 1..n, stored as counts[i - 1]."""

    n: int
    counts: tuple

    def m(self, i):
        if 1 <= i <= self.n:
            return self.counts[i - 1]
        return 0

    def m_le(self, i):
        """m_{<=i}(L)."""
        return sum(self.counts[: max(0, min(i, self.n))])

    @property
    def cumulative(self):
        return tuple(self.m_le(i) for i in range(1, self.n + 1))

    @property
    def total(self):
        return sum(self.counts)


def materialize(segment):
    """The members of a lex segment as a MonomialSet."""
    members = islice(iter_tspread(segment.n, segment.d, segment.t), segment.size)
    return MonomialSet(segment.n, segment.d, segment.t, tuple(members))


def _check_member(u, n, t):
    if u.degree < 1:
        raise DomainError("the unit monomial is not a member of any M_{n,d,t}")
    if not is_t_spread(u, t):
        raise DomainError(f"{u} is not {t}-spread")
    if u.max_index > n:
        raise DomainError(f"{u} uses a variable beyond x{n}")


def complement_count(u, n, t):
    """
    Number of members of M_{n,d,t} strictly lex-smaller than u:
    the sum over j of C(n - i_{d-j+1} - (j-1)(t-1), j).
    """
    _check_member(u, n, t)
    d = u.degree
    return sum(
        binom(n - u.indices[d - j] - (j - 1) * (t - 1), j) for j in range(1, d + 1)
    )


def monomial_from_complement_count(a, n, d, t):
    """
    The u in M_{n,d,t} with exactly a members below it.

    a = 0 gives the lex-smallest member, a = |M_{n,d,t}| - 1 the lex-greatest
    x_1 x_{1+t} ... x_{1+(d-1)t}.
    """
    return Monomial(segment_boundary(a, n, d, t))


def _insertion_ranges(indices, n, tau):
    """Ranges of i for which x_i * v stays tau-spread."""
    if not indices:
        yield range(1, n + 1)
        return
    yield range(1, indices[0] - tau + 1)
    for left, right in zip(indices, indices[1:]):
        yield range(left + tau, right - tau + 1)
    yield range(indices[-1] + tau, n + 1)


def shadow(L, tau=None):
    """
    shad_tau(L): the tau-spread monomials x_i * v with v in L.

    Args:
        L: MonomialSet in M_{n,d,t}
        tau: Spread of the products, 1 <= tau <= L.t (default L.t)

    Returns:
        MonomialSet: degree d+1, spread tau, deduplicated
    """
    tau = L.t if tau is None else tau
    if not isinstance(tau, int) or tau < 1:
        raise DomainError(f"shadow spread must be a positive integer, got {tau!r}")
    if tau > L.t:
        raise DomainError(f"shadow spread {tau} exceeds the set's spread {L.t}")

    products = set()
    for v in L:
        for positions in _insertion_ranges(v.indices, L.n, tau):
            for i in positions:
                products.add(tuple(sorted(v.indices + (i,))))
    return MonomialSet(L.n, L.d + 1, tau, tuple(products))


def max_index_profile(L):
    counts = [0] * L.n
    for u in L:
        counts[u.max_index - 1] += 1
    return MaxIndexProfile(L.n, tuple(counts))


def shadow_size_by_formula(L):
    """
    |shad_t(L)| = sum of m_{<=i}(L) for 1+(d-1)t <= i <= n-t.

    Only valid for strongly stable sets, so anything else is refused.
    """
    if not is_strongly_stable_set(L):
        raise DomainError("the shadow size formula needs a strongly stable set")
    profile = max_index_profile(L)
    start = 1 + (L.d - 1) * L.t
    return sum(profile.m_le(i) for i in range(start, L.n - L.t + 1))


def is_lex_set(L):
    """True iff L is a prefix of M_{n,d,t} in descending lex order."""
    if not L:
        return True
    return complement_count(L.members[-1], L.n, L.t) == L.universe_size - len(L)


def exchange_images(u, t):
    """
    The t-spread x_i (u / x_j) with i < j that keep x_i in the position of x_j.

    For the p-th index j the admissible i fill [i_{p-1} + t, j - 1]. Any other
    t-spread exchange is a chain of these, so closure under them suffices.
    """
    images = []
    indices = u.indices
    for p, j in enumerate(indices):
        low = indices[p - 1] + t if p > 0 else 1
        for i in range(low, j):
            images.append(Monomial(indices[:p] + (i,) + indices[p + 1 :]))
    return images


def is_strongly_stable_set(L):
    return all(w in L for u in L for w in exchange_images(u, L.t))


@lru_cache(maxsize=64)
def exchange_graph(n, d, t):
    """
    Directed graph on M_{n,d,t} with an edge u -> w for every exchange image w
    of u. A set is strongly stable iff it is closed under descendants.
    """
    graph = nx.DiGraph()
    for u in iter_tspread(n, d, t):
        graph.add_node(u)
        for w in exchange_images(u, t):
            graph.add_edge(u, w)
    return nx.freeze(graph)


def lex_segment_of(L):
    if not is_lex_set(L):
        raise DomainError(f"{L} is not a {L.t}-spread lex set")
    return LexSegment(L.n, L.d, L.t, len(L))
