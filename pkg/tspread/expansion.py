#!/usr/bin/env python3
"""
Macaulay binomial expansions and successor operators.

All arithmetic is exact integer arithmetic. Binomials follow the generalized
convention C(m, k) = 0 whenever m < k or m < 0, which is what makes the
sentinel terms of the t-spread operator vanish.
"""

from dataclasses import dataclass
from math import comb

from tspread.errors import DomainError


def binom(m, k):
    """Generalized binomial coefficient: 0 when k < 0, m < 0 or m < k."""
    if k < 0 or m < 0 or m < k:
        return 0
    return comb(m, k)


def count_tspread(n, d, t):
    """|M_{n,d,t}| = C(n - (d-1)(t-1), d); the degree-0 count is 1."""
    _check_nonneg("n", n)
    _check_nonneg("d", d)
    _check_positive("t", t)
    if d == 0:
        return 1
    return binom(n - (d - 1) * (t - 1), d)


def _check_nonneg(name, value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise DomainError(f"{name} must be a nonnegative integer, got {value!r}")


def _check_positive(name, value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value!r}")


def _largest_top(value, j):
    """Largest m with C(m, j) <= value, for value >= 1."""
    lo, hi = j, j + 1
    while comb(hi, j) <= value:
        lo, hi = hi, 2 * hi
    # invariant: C(lo, j) <= value < C(hi, j)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, j) <= value:
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class MacaulayExpansion:
    """
    The binomial expansion a = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_r, r).

    ``terms`` holds the pairs (a_j, j) for j = d down to r; it is empty for a = 0.
    """

    a: int
    d: int
    terms: tuple

    @property
    def r(self):
        """Lowest index of the expansion (d + 1 for the empty expansion)."""
        return self.terms[-1][1] if self.terms else self.d + 1

    def coefficients(self):
        """Map j -> a_j for r <= j <= d."""
        return {j: top for top, j in self.terms}

    def value(self):
        return sum(comb(top, j) for top, j in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return "+".join(f"C({top},{j})" for top, j in self.terms)


def macaulay_expand(a, d):
    """
    Greedy (hence unique) Macaulay expansion of a with respect to d.

    Args:
        a: Nonnegative integer to expand
        d: Positive degree

    Returns:
        MacaulayExpansion: terms with a_d > a_{d-1} > ... > a_r >= r >= 1
    """
    _check_nonneg("a", a)
    _check_positive("d", d)

    terms = []
    remainder = a
    j = d
    while remainder > 0:
        top = _largest_top(remainder, j)
        terms.append((top, j))
        remainder -= comb(top, j)
        j -= 1
    return MacaulayExpansion(a=a, d=d, terms=tuple(terms))


def classic_successor(a, d):
    """a^{(d)} = sum of C(a_j, j + 1) over the expansion; 0^{(d)} = 0."""
    return sum(binom(top, j + 1) for top, j in macaulay_expand(a, d).terms)


def _check_successor_args(a, d, t, n):
    _check_nonneg("a", a)
    _check_positive("d", d)
    _check_positive("t", t)
    _check_nonneg("n", n)
    size = count_tspread(n, d, t)
    if a > size:
        raise DomainError(
            f"a={a} exceeds |M_{{{n},{d},{t}}}| = {size}"
        )
    return size


def segment_boundary(a, n, d, t):
    """
    Index tuple of the lex-smallest member of the t-spread lex segment whose
    complement in M_{n,d,t} has exactly a elements.

    Built from the Macaulay expansion of a: with a_j = j - 1 below the lowest
    index r, i_{d-j+1} = n - a_j - (j-1)(t-1) for every j.
    """
    size = _check_successor_args(a, d, t, n)
    if a >= size:
        raise DomainError(
            f"complement size {a} leaves the segment empty (|M| = {size})"
        )
    tops = macaulay_expand(a, d).coefficients()
    indices = [0] * d
    for j in range(1, d + 1):
        top = tops.get(j, j - 1)
        indices[d - j] = n - top - (j - 1) * (t - 1)
    return tuple(indices)


def _binom_sum(low, high, k):
    """C(low, k) + ... + C(high, k), by the hockey-stick identity."""
    if high < low:
        return 0
    return binom(high + 1, k + 1) - binom(low, k + 1)


def t_successor(a, d, t, n):
    """
    The t-spread successor a^{[d]_t}: the number of t-spread monomials of
    degree d+1 outside shad_t(L), where L is the lex segment of M_{n,d,t}
    whose complement has a elements.

    The shadow is counted without materializing L: for a strongly stable set,
    |shad_t(L)| is the sum of m_{<=i}(L) for 1+(d-1)t <= i <= n-t. For a lex
    segment with smallest member u, m_{<=i}(L) = |M_{i,d,t}| minus the members
    of M_{i,d,t} below u, and both are sums of binomials in i. The p-th term
    of the second sum is present once i >= u_{p-1}, so summing over i splits
    into one hockey-stick sum per term.
    """
    size = _check_successor_args(a, d, t, n)
    if a == 0:
        return 0
    upper = count_tspread(n, d + 1, t)
    if a == size:
        return upper

    u = segment_boundary(a, n, d, t)
    low, high = 1 + (d - 1) * t, n - t
    offset = (d - 1) * (t - 1)
    shadow = _binom_sum(low - offset, high - offset, d)
    for p in range(d):
        first = low if p == 0 else max(low, u[p - 1])
        shift = u[p] + (d - 1 - p) * (t - 1)
        shadow -= _binom_sum(first - shift, high - shift, d - p)
    return upper - shadow


def _sentinel_coefficients(a, d, t, n):
    expansion = macaulay_expand(a, d)
    r = expansion.r
    tops = expansion.coefficients()
    tops[r - 1] = r - 2
    tops[d + 1] = n - (d - 1) * (t - 1)
    tops[d + 2] = tops[d + 1] + (t + 1)
    return r, tops


def successor_case(a, d, t, n):
    """
    The k selected by the closed form: the largest k in [-1, d-r+1] with
    a_{d-k+1} - a_{d-k} >= t + 1 on the sentinel-extended coefficients.
    """
    _check_successor_args(a, d, t, n)
    if a == 0:
        raise DomainError("the closed form has no case for a = 0")
    r, tops = _sentinel_coefficients(a, d, t, n)
    for k in range(d - r + 1, -2, -1):
        if tops[d - k + 1] - tops[d - k] >= t + 1:
            return k
    # k = -1 always qualifies: a_{d+2} - a_{d+1} = t + 1
    raise AssertionError("unreachable")


def t_successor_closed_form(a, d, t, n):
    """
    Literal sentinel formula for a^{[d]_t}.

    Agrees with t_successor whenever the lex-smallest member of the segment
    has an admissible extension (and always for t = 1 or a = |M_{n,d,t}|).
    It over-counts when only larger members extend, e.g. (a, d, t, n) =
    (1, 1, 2, 5) gives 1 although every member of M_{5,2,2} lies in the shadow.
    """
    _check_successor_args(a, d, t, n)
    if a == 0:
        return 0
    k = successor_case(a, d, t, n)
    if k == -1:
        return binom(n - d * (t - 1), d + 1)

    r, tops = _sentinel_coefficients(a, d, t, n)
    value = sum(binom(tops[j] - (t - 1), j + 1) for j in range(d + 1 - k, d + 1))
    value += binom(tops[d - k] - (2 * t - 1), d - k + 1)
    value += sum(binom(tops[j], j) for j in range(r, d - k + 1))
    return value
