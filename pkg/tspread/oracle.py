#!/usr/bin/env python3
"""
Brute-force recomputations used to check the counting formulas.

Everything here works from the definitions: shadows try every variable,
exchanges try every pair (i, j), complements are counted by enumeration.
Nothing in this module calls the expansion or lexset formulas.
"""

from collections import defaultdict

from tspread.config import get_settings
from tspread.errors import DomainError, SizeGuardError
from tspread.ideal import FtVector, d_max
from tspread.monomial import MonomialSet, divides, enumerate_tspread, is_t_spread, lex_compare


def brute_extensions(v, n, tau):
    """All tau-spread x_i * v with x_i not dividing v, i <= n."""
    extensions = set()
    for i in range(1, n + 1):
        if i in v.indices:
            continue
        product = v.times(i)
        if is_t_spread(product, tau):
            extensions.add(product)
    return extensions


def brute_shadow(L, tau=None):
    tau = L.t if tau is None else tau
    if not isinstance(tau, int) or not 1 <= tau <= L.t:
        raise DomainError(f"shadow spread must lie in 1..{L.t}, got {tau!r}")
    products = set()
    for v in L:
        products |= brute_extensions(v, L.n, tau)
    return MonomialSet(L.n, L.d + 1, tau, tuple(products))


def brute_complement_count(u, n, t):
    """Members of M_{n,d,t} lex-smaller than u, by enumeration."""
    universe = enumerate_tspread(n, u.degree, t)
    if u not in universe:
        raise DomainError(f"{u} is not in M_{{{n},{u.degree},{t}}}")
    return sum(1 for v in universe if lex_compare(v, u) < 0)


def brute_graded_part(ideal, j):
    """[I_j]_t filtered out of M_{n,j,t} by divisibility."""
    if j < 1:
        return MonomialSet(ideal.n, max(j, 0), ideal.t)
    members = tuple(
        w for w in enumerate_tspread(ideal.n, j, ideal.t)
        if any(divides(g, w) for g in ideal.generators)
    )
    return MonomialSet(ideal.n, j, ideal.t, members)


def brute_is_lex_set(L):
    if L.d < 1:
        return not L
    universe = enumerate_tspread(L.n, L.d, L.t).members
    return L.members == universe[: len(L)]


def brute_exchanges(u, t):
    """Every t-spread x_i (u / x_j) with i < j, i not dividing u."""
    images = []
    for j in u.indices:
        for i in range(1, j):
            if i in u.indices:
                continue
            image = u.without(j).times(i)
            if is_t_spread(image, t):
                images.append(image)
    return images


def brute_is_strongly_stable_set(L):
    return all(w in L for u in L for w in brute_exchanges(u, L.t))


def _checked_universe(n, d, t, settings):
    settings = settings or get_settings()
    universe = enumerate_tspread(n, d, t).members
    if len(universe) > settings.universe_max_size:
        raise SizeGuardError(
            f"|M_{{{n},{d},{t}}}| = {len(universe)} exceeds the oracle guard "
            f"{settings.universe_max_size}"
        )
    return universe


def _stable_masks(universe, t):
    """
    Bitmasks (bit k <-> universe[k]) of all strongly stable subsets.

    Exchange images are lex-greater, so walking the universe in descending
    lex order decides every image before the monomial that needs it.
    """
    position = {u: k for k, u in enumerate(universe)}
    required = []
    for u in universe:
        mask = 0
        for w in brute_exchanges(u, t):
            mask |= 1 << position[w]
        required.append(mask)

    masks = []
    stack = [(0, 0)]
    while stack:
        k, mask = stack.pop()
        if k == len(universe):
            masks.append(mask)
            continue
        if required[k] & ~mask == 0:
            stack.append((k + 1, mask | (1 << k)))
        stack.append((k + 1, mask))
    return masks


def _members(universe, mask):
    return tuple(u for k, u in enumerate(universe) if mask >> k & 1)


def enumerate_strongly_stable_sets(n, d, t, settings=None):
    """
    Every strongly stable subset of M_{n,d,t}.

    Raises:
        SizeGuardError: |M_{n,d,t}| exceeds settings.universe_max_size
    """
    universe = _checked_universe(n, d, t, settings)
    return tuple(
        MonomialSet(n, d, t, _members(universe, mask))
        for mask in _stable_masks(universe, t)
    )


def random_strongly_stable_set(n, d, t, rng, max_seeds=3):
    """Exchange closure of a few random members of M_{n,d,t}."""
    universe = enumerate_tspread(n, d, t).members
    if not universe:
        return MonomialSet(n, d, t)
    seeds = rng.sample(universe, rng.randint(1, min(max_seeds, len(universe))))
    closed = set(seeds)
    frontier = list(seeds)
    while frontier:
        u = frontier.pop()
        for w in brute_exchanges(u, t):
            if w not in closed:
                closed.add(w)
                frontier.append(w)
    return MonomialSet(n, d, t, tuple(closed))


def brute_kk_universe(n, t, settings=None):
    """
    f_t-vectors of all t-spread strongly stable ideals in n variables that
    contain no variable (so f(1) = n).

    The t-spread graded parts N_1, N_2, ... of such an ideal are strongly
    stable sets with N_1 empty and brute_shadow(N_d) inside N_{d+1}; every such
    chain comes from the ideal its union generates. The chains are walked
    degree by degree, remembering for each N_d the f-prefixes that reach it.

    Raises:
        SizeGuardError: n exceeds settings.universe_max_n, or some M_{n,d,t}
        exceeds settings.universe_max_size
    """
    settings = settings or get_settings()
    if n > settings.universe_max_n:
        raise SizeGuardError(
            f"n = {n} exceeds the oracle guard {settings.universe_max_n} (TSPREAD_MAX_N)"
        )
    top = d_max(n, t)
    if top < 2:
        return (FtVector(t, (1, n)),)

    universes = {d: _checked_universe(n, d, t, settings) for d in range(1, top + 1)}
    stable = {d: _stable_masks(universes[d], t) for d in range(2, top + 1)}

    states = {0: {(1, n)}}
    for d in range(1, top):
        here, above = universes[d], universes[d + 1]
        position = {u: k for k, u in enumerate(above)}
        lifts = []
        for v in here:
            mask = 0
            for w in brute_extensions(v, n, t):
                mask |= 1 << position[w]
            lifts.append(mask)

        following = defaultdict(set)
        for mask, prefixes in states.items():
            forced = 0
            for k, lift in enumerate(lifts):
                if mask >> k & 1:
                    forced |= lift
            for candidate in stable[d + 1]:
                if candidate & forced == forced:
                    value = len(above) - bin(candidate).count("1")
                    following[candidate] |= {p + (value,) for p in prefixes}
        states = following

    vectors = {FtVector(t, p) for prefixes in states.values() for p in prefixes}
    return tuple(sorted(vectors, key=lambda f: f.trimmed()))
