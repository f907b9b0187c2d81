#!/usr/bin/env python3
"""
Feasibility of f_t-vectors: f is the f_t-vector of a t-spread strongly stable
ideal iff f(0) = 1 and f(d+1) <= f(d)^{[d]_t} for every d >= 1, where the
operator is taken in n = f(1) variables.
"""

from dataclasses import dataclass, field

from tspread.errors import DomainError, InfeasibleError
from tspread.expansion import count_tspread, t_successor
from tspread.ideal import FtVector, d_max, ideal_from_lex_sizes


@dataclass(frozen=True)
class Violation:
    """f(degree + 1) = value exceeds f(degree)^{[degree]_t} = bound."""

    degree: int
    bound: int
    value: int


@dataclass(frozen=True)
class BoundRow:
    degree: int
    value: int
    next_value: int
    bound: int


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    t: int
    n: int
    entries: tuple
    reason: str = None
    violations: tuple = field(default=())
    bounds: tuple = field(default=())

    @property
    def first_violation(self):
        return self.violations[0] if self.violations else None


def _entries(f):
    entries = tuple(f.entries if isinstance(f, FtVector) else f)
    for value in entries:
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise DomainError(f"f-vector entries must be nonnegative integers: {entries}")
    return entries


def kk_check(f, t):
    """
    Test f against the generalized Kruskal-Katona bounds.

    Args:
        f: FtVector or integer sequence f(0), f(1), ..., zero-extended
        t: Spread, t >= 1

    Returns:
        FeasibilityReport: the earliest violation (if any) and the bound table
        up to it
    """
    if not isinstance(t, int) or t < 1:
        raise DomainError(f"t must be a positive integer, got {t!r}")
    entries = _entries(f)

    def value(d):
        return entries[d] if d < len(entries) else 0

    n = value(1)

    if not entries or entries[0] != 1:
        got = entries[0] if entries else "nothing"
        return FeasibilityReport(False, t, n, entries, reason=f"f(0) must be 1, got {got}")

    rows = []
    for d in range(1, len(entries)):
        current, following = value(d), value(d + 1)
        bound = t_successor(current, d, t, n)
        rows.append(BoundRow(d, current, following, bound))
        if following > bound:
            violation = Violation(d, bound, following)
            reason = f"f({d + 1}) = {following} exceeds f({d})^[{d}]_{t} = {bound}"
            return FeasibilityReport(
                False, t, n, entries, reason, (violation,), tuple(rows)
            )

    return FeasibilityReport(True, t, n, entries, bounds=tuple(rows))


def kk_witness(f, t):
    """
    The t-spread lex ideal in n = f(1) variables with f_t-vector f.

    Raises:
        InfeasibleError: f fails kk_check; the report is attached
    """
    report = kk_check(f, t)
    if not report.feasible:
        raise InfeasibleError(f"no t-spread strongly stable ideal: {report.reason}", report)

    n = report.n
    entries = report.entries
    sizes = [0]
    for d in range(1, d_max(n, t) + 1):
        given = entries[d] if d < len(entries) else 0
        sizes.append(count_tspread(n, d, t) - given)

    result = ideal_from_lex_sizes(n, t, sizes)
    if not result.succeeded:
        raise AssertionError(
            f"lex construction failed at degree {result.trace.failure_degree} for feasible {entries}"
        )
    return result.ideal


def enumerate_feasible(n, t):
    """
    Every f_t-vector (1, n, f(2), ...) accepted by kk_check, found by
    choosing each f(d+1) in 0..f(d)^{[d]_t}.

    Returns:
        tuple: FtVectors, trailing zeros trimmed, in depth-first order
    """
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    if not isinstance(t, int) or t < 1:
        raise DomainError(f"t must be a positive integer, got {t!r}")

    found = []
    stack = [(1, n)]
    while stack:
        prefix = stack.pop()
        d = len(prefix) - 1
        if prefix[-1] == 0:
            found.append(FtVector(t, prefix[:-1]))
            continue
        bound = t_successor(prefix[-1], d, t, n)
        for following in range(bound, -1, -1):
            stack.append(prefix + (following,))
    return tuple(found)
