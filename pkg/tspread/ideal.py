#!/usr/bin/env python3
"""
t-spread monomial ideals, their f_t-vectors, and the t-spread lex ideal I^tlex.

An ideal is held by its minimal t-spread generators. Its t-spread graded
parts [I_j]_t are built degree by degree: [I_j]_t is the t-shadow of
[I_{j-1}]_t together with the degree-j generators.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import islice

import networkx as nx

from tspread.errors import DomainError
from tspread.expansion import count_tspread, segment_boundary
from tspread.lexset import (
    LexSegment,
    exchange_graph,
    is_lex_set,
    is_strongly_stable_set,
    shadow,
)
from tspread.monomial import Monomial, MonomialSet, divides, is_t_spread, iter_tspread


def d_max(n, t):
    """Largest degree with a t-spread monomial in n variables (0 when n = 0)."""
    if not isinstance(t, int) or t < 1:
        raise DomainError(f"t must be a positive integer, got {t!r}")
    if n < 1:
        return 0
    return 1 + (n - 1) // t


def _as_monomial(u):
    return u if isinstance(u, Monomial) else Monomial(tuple(u))


def minimalize(gens):
    """
    Drop every monomial divisible by another one of the collection.

    Returns:
        tuple: the surviving monomials by degree, then descending lex
    """
    ordered = sorted({_as_monomial(u) for u in gens}, key=lambda u: (u.degree, u.indices))
    kept = []
    for u in ordered:
        if not any(divides(g, u) for g in kept):
            kept.append(u)
    return tuple(kept)


@dataclass(frozen=True)
class TSpreadIdeal:
    """A t-spread monomial ideal of K[x_1, ..., x_n] given by minimal generators."""

    n: int
    t: int
    generators: tuple = field(default=())

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise DomainError(f"n must be a nonnegative integer, got {self.n!r}")
        if not isinstance(self.t, int) or self.t < 1:
            raise DomainError(f"t must be a positive integer, got {self.t!r}")
        gens = [_as_monomial(u) for u in self.generators]
        for u in gens:
            if u.degree < 1:
                raise DomainError("the unit ideal is not supported")
            if u.max_index > self.n:
                raise DomainError(f"generator {u} uses a variable beyond x{self.n}")
            if not is_t_spread(u, self.t):
                raise DomainError(f"generator {u} is not {self.t}-spread")
        minimal = minimalize(gens)
        if len(minimal) != len(gens):
            raise DomainError("generators are not minimal; use TSpreadIdeal.generated_by")
        object.__setattr__(self, "generators", minimal)

    @classmethod
    def generated_by(cls, n, t, monomials):
        return cls(n, t, minimalize(monomials))

    @property
    def degrees(self):
        return tuple(sorted({u.degree for u in self.generators}))

    def generators_in_degree(self, j):
        return MonomialSet(self.n, j, self.t, tuple(u for u in self.generators if u.degree == j))

    def contains(self, u):
        u = _as_monomial(u)
        return any(divides(g, u) for g in self.generators)

    @cached_property
    def graded_parts(self):
        """[I_j]_t for j = 0..d_max(n, t)."""
        parts = [MonomialSet(self.n, 0, self.t)]
        for j in range(1, d_max(self.n, self.t) + 1):
            below = shadow(parts[-1])
            fresh = (u for u in self.generators if u.degree == j)
            parts.append(below.with_members(below.members + tuple(fresh)))
        return tuple(parts)

    def __str__(self):
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(str(u) for u in self.generators) + ")"


def graded_part(ideal, j):
    """[I_j]_t, the t-spread monomials of degree j in the ideal."""
    if not isinstance(j, int) or j < 0:
        raise DomainError(f"degree must be a nonnegative integer, got {j!r}")
    parts = ideal.graded_parts
    if j < len(parts):
        return parts[j]
    return MonomialSet(ideal.n, j, ideal.t)


class FtVector:
    """
    f(0), f(1), ... with f(d) = f_{t,d-1}(I), zero-extended.

    Equality and hashing ignore trailing zeros; str() keeps the stored entries.
    """

    def __init__(self, t, entries):
        entries = tuple(entries)
        for value in entries:
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise DomainError(f"f-vector entries must be nonnegative integers: {entries}")
        self.t = t
        self.entries = entries

    def trimmed(self):
        entries = list(self.entries)
        while entries and entries[-1] == 0:
            entries.pop()
        return tuple(entries)

    def __getitem__(self, d):
        if d < 0:
            raise IndexError(d)
        return self.entries[d] if d < len(self.entries) else 0

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, FtVector):
            return NotImplemented
        return self.t == other.t and self.trimmed() == other.trimmed()

    def __hash__(self):
        return hash((self.t, self.trimmed()))

    def __repr__(self):
        return f"FtVector(t={self.t}, entries={self.entries})"

    def __str__(self):
        return ",".join(str(value) for value in self.entries)


def ft_vector(ideal):
    """f(0) = 1 and f(j) = |M_{n,j,t}| - |[I_j]_t| for 1 <= j <= d_max."""
    entries = [1]
    for j in range(1, d_max(ideal.n, ideal.t) + 1):
        entries.append(count_tspread(ideal.n, j, ideal.t) - len(graded_part(ideal, j)))
    return FtVector(ideal.t, entries)


def is_strongly_stable_ideal(ideal):
    return all(is_strongly_stable_set(part) for part in ideal.graded_parts[1:])


def is_lex_ideal(ideal):
    return all(is_lex_set(part) for part in ideal.graded_parts[1:])


def strongly_stable_closure(gens, n, t):
    """Smallest t-spread strongly stable ideal containing the given monomials."""
    closed = set()
    for u in map(_as_monomial, gens):
        if u.max_index > n or not is_t_spread(u, t):
            raise DomainError(f"{u} is not a {t}-spread monomial in {n} variables")
        closed.add(u)
        closed |= nx.descendants(exchange_graph(n, u.degree, t), u)
    return TSpreadIdeal.generated_by(n, t, closed)


@dataclass(frozen=True)
class TlexStep:
    """Degree j of the construction: L_j, |shad_t(L_{j-1})| and the new generators."""

    degree: int
    segment: LexSegment
    shadow_size: int
    generators: tuple


@dataclass(frozen=True)
class TlexTrace:
    n: int
    t: int
    steps: tuple
    failure_degree: int = None
    required: int = None
    available: int = None

    @property
    def succeeded(self):
        return self.failure_degree is None

    @property
    def generators(self):
        return tuple(u for step in self.steps for u in step.generators)

    def basis_contains(self, exponents, j):
        """
        Membership in B_j = L_j together with shad_0(B_{j-1}).

        Args:
            exponents: Variable indices of a degree-j monomial, repeats allowed
            j: The degree
        """
        exponents = tuple(sorted(exponents))
        if len(exponents) != j:
            raise DomainError(f"{exponents} does not have degree {j}")
        support = set(exponents)
        return any(g.degree <= j and g.support <= support for g in self.generators)


@dataclass(frozen=True)
class TlexResult:
    ideal: TSpreadIdeal
    trace: TlexTrace

    @property
    def succeeded(self):
        return self.ideal is not None


def ideal_from_lex_sizes(n, t, sizes):
    """
    Build the lex ideal whose t-spread graded part in degree j is the lex
    segment of size sizes[j].

    This works iff |shad_t(L_{j-1})| <= |L_j| in every degree; both sides are
    lex sets, so the shadow is then the first |shad_t(L_{j-1})| members of L_j
    and the rest of L_j are the new minimal generators.

    Returns:
        TlexResult: ideal is None and the trace names the failing degree when
        some shadow does not fit
    """
    sizes = list(sizes)
    if sizes and sizes[0] != 0:
        raise DomainError("the unit ideal is not supported")

    steps = []
    previous = None
    for j in range(1, len(sizes)):
        segment = LexSegment(n, j, t, sizes[j])
        required = previous.shadow_size() if previous is not None else 0
        if required > segment.size:
            trace = TlexTrace(
                n, t, tuple(steps), failure_degree=j, required=required, available=segment.size
            )
            return TlexResult(None, trace)
        fresh = ()
        if required < segment.size:
            # the shadow fills the first `required` places of L_j
            first = segment_boundary(segment.universe_size - 1 - required, n, j, t)
            fresh = tuple(islice(iter_tspread(n, j, t, start=first), segment.size - required))
        steps.append(TlexStep(j, segment, required, fresh))
        previous = segment

    trace = TlexTrace(n, t, tuple(steps))
    return TlexResult(TSpreadIdeal(n, t, trace.generators), trace)


def tlex(ideal):
    """
    The t-spread lex ideal with the same f_t-vector, when it exists.

    Strongly stable input always succeeds; other input may fail, and the
    trace then records the first degree whose shadow does not fit.
    """
    sizes = [len(part) for part in ideal.graded_parts]
    return ideal_from_lex_sizes(ideal.n, ideal.t, sizes)
