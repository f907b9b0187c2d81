#!/usr/bin/env python3
"""
Square-free monomials as strictly increasing 1-based index tuples.

A set of t-spread monomials of one degree is kept in descending lex order,
which for index tuples is plain ascending tuple order: x1x3 >lex x1x4 and
(1, 3) < (1, 4). Lex segments are therefore prefixes of the stored tuple.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from tspread.errors import DomainError
from tspread.expansion import count_tspread

__all__ = [
    "Monomial",
    "MonomialSet",
    "is_t_spread",
    "lex_compare",
    "iter_tspread",
    "enumerate_tspread",
    "count_tspread",
    "divides",
]


def _is_index(value):
    return isinstance(value, int) and not isinstance(value, bool) and value >= 1


@dataclass(frozen=True)
class Monomial:
    """x_{i_1} x_{i_2} ... x_{i_d} with i_1 < i_2 < ... < i_d."""

    indices: tuple

    def __post_init__(self):
        indices = tuple(self.indices)
        if not all(_is_index(i) for i in indices):
            raise DomainError(f"variable indices must be positive integers: {indices}")
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise DomainError(f"variable indices must be strictly increasing: {indices}")
        object.__setattr__(self, "indices", indices)

    @property
    def degree(self):
        return len(self.indices)

    @property
    def max_index(self):
        """m(u), the largest variable index (0 for the unit monomial)."""
        return self.indices[-1] if self.indices else 0

    @property
    def support(self):
        return frozenset(self.indices)

    def times(self, i):
        """x_i * u; the product must stay square-free."""
        if i in self.indices:
            raise DomainError(f"x{i} already divides {self}")
        return Monomial(tuple(sorted(self.indices + (i,))))

    def without(self, i):
        """u / x_i for x_i dividing u."""
        if i not in self.indices:
            raise DomainError(f"x{i} does not divide {self}")
        return Monomial(tuple(j for j in self.indices if j != i))

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __str__(self):
        if not self.indices:
            return "1"
        return "".join(f"x{i}" for i in self.indices)


def is_t_spread(u, t):
    """True iff every consecutive index gap of u is at least t."""
    indices = u.indices if isinstance(u, Monomial) else tuple(u)
    return all(b - a >= t for a, b in zip(indices, indices[1:]))


def lex_compare(u, v):
    """
    Compare two monomials of the same degree in the lex order.

    Returns:
        int: 1 if u >lex v, -1 if u <lex v, 0 if equal
    """
    if u.degree != v.degree:
        raise DomainError(
            f"lex comparison needs equal degrees, got {u.degree} and {v.degree}"
        )
    for a, b in zip(u.indices, v.indices):
        if a != b:
            return 1 if a < b else -1
    return 0


def divides(u, v):
    """Square-free divisibility: supp(u) is a subset of supp(v)."""
    return u.support <= v.support


def _check_params(n, d, t):
    for name, value, low in (("n", n, 0), ("d", d, 1), ("t", t, 1)):
        if not isinstance(value, int) or isinstance(value, bool) or value < low:
            raise DomainError(f"{name} must be an integer >= {low}, got {value!r}")


def _combinations_from(first, span):
    """Ascending d-subsets of [span] from `first` on, in the order of itertools.combinations."""
    combo = list(first)
    d = len(combo)
    while True:
        yield tuple(combo)
        k = d - 1
        while k >= 0 and combo[k] == span - (d - 1 - k):
            k -= 1
        if k < 0:
            return
        combo[k] += 1
        for m in range(k + 1, d):
            combo[m] = combo[m - 1] + 1


def iter_tspread(n, d, t, start=None):
    """
    Yield M_{n,d,t} in descending lex order, optionally from `start` on.

    Compressing i_k -> i_k - (k-1)(t-1) maps M_{n,d,t} onto the d-subsets of
    [n - (d-1)(t-1)] and preserves order, so itertools.combinations does the work.

    Args:
        start: A member of M_{n,d,t}; iteration begins there instead of at
            x_1 x_{1+t} ... x_{1+(d-1)t}
    """
    _check_params(n, d, t)
    span = n - (d - 1) * (t - 1)
    if start is None:
        combos = combinations(range(1, span + 1), d)
    else:
        start = start if isinstance(start, Monomial) else Monomial(tuple(start))
        if start.degree != d or start.max_index > n or not is_t_spread(start, t):
            raise DomainError(f"{start} is not a member of M_{{{n},{d},{t}}}")
        combos = _combinations_from((i - k * (t - 1) for k, i in enumerate(start)), span)
    for combo in combos:
        yield Monomial(tuple(c + k * (t - 1) for k, c in enumerate(combo)))


def enumerate_tspread(n, d, t):
    """All of M_{n,d,t} as a MonomialSet (empty when 1 + (d-1)t > n)."""
    return MonomialSet(n, d, t, tuple(iter_tspread(n, d, t)))


@dataclass(frozen=True)
class MonomialSet:
    """
    A duplicate-free subset L of M_{n,d,t}, stored in descending lex order.

    Members may be given as Monomials or index tuples in any order.
    """

    n: int
    d: int
    t: int
    members: tuple = field(default=())

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise DomainError(f"n must be a nonnegative integer, got {self.n!r}")
        if not isinstance(self.d, int) or self.d < 0:
            raise DomainError(f"d must be a nonnegative integer, got {self.d!r}")
        if not isinstance(self.t, int) or self.t < 1:
            raise DomainError(f"t must be a positive integer, got {self.t!r}")

        members = {
            u if isinstance(u, Monomial) else Monomial(tuple(u)) for u in self.members
        }
        if self.d == 0 and members:
            raise DomainError("degree-0 sets must be empty")
        for u in members:
            if u.degree != self.d:
                raise DomainError(f"{u} does not have degree {self.d}")
            if u.max_index > self.n:
                raise DomainError(f"{u} uses a variable beyond x{self.n}")
            if not is_t_spread(u, self.t):
                raise DomainError(f"{u} is not {self.t}-spread")
        ordered = tuple(sorted(members, key=lambda u: u.indices))
        object.__setattr__(self, "members", ordered)

    @cached_property
    def member_set(self):
        return frozenset(self.members)

    @property
    def universe_size(self):
        return count_tspread(self.n, self.d, self.t)

    def with_members(self, members):
        """Same ambient (n, d, t) with other members."""
        return MonomialSet(self.n, self.d, self.t, tuple(members))

    def __contains__(self, u):
        return u in self.member_set

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __bool__(self):
        return bool(self.members)

    def __str__(self):
        return "{" + ", ".join(str(u) for u in self.members) + "}"
