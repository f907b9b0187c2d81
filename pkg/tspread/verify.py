#!/usr/bin/env python3
"""
Oracle sweeps: compare every counting formula and both directions of the
feasibility theorem against brute force on small instances.

Each sweep returns a SweepResult; run_all prints a status line per sweep.
Sweeps are deterministic: sampling replaces exhaustion only where the
oracle guard refuses an instance, and the sampler is seeded.
"""

import random
import sys
from dataclasses import dataclass, field
from pathlib import Path

from tqdm import tqdm

from tspread.config import get_config_as_dict, get_settings
from tspread.errors import SizeGuardError
from tspread.expansion import classic_successor, count_tspread, t_successor
from tspread.ideal import d_max, ft_vector, is_lex_ideal, strongly_stable_closure, tlex
from tspread.kk import enumerate_feasible, kk_check, kk_witness
from tspread.lexset import (
    LexSegment,
    complement_count,
    is_strongly_stable_set,
    materialize,
    max_index_profile,
    monomial_from_complement_count,
    shadow,
    shadow_size_by_formula,
)
from tspread.monomial import enumerate_tspread, lex_compare
from tspread.oracle import (
    brute_complement_count,
    brute_extensions,
    brute_is_lex_set,
    brute_is_strongly_stable_set,
    brute_kk_universe,
    brute_shadow,
    enumerate_strongly_stable_sets,
    random_strongly_stable_set,
)

# Keep at most this many mismatch descriptions per sweep
MISMATCH_SAMPLE = 10

# The shadow sweep checks each set's shadow for stability by brute force,
# so it enumerates exhaustively only for smaller universes than the guard
STABLE_SHADOW_EXHAUSTIVE_MAX = 28


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    mismatches: list = field(default_factory=list)
    mismatch_count: int = 0

    @property
    def ok(self):
        return self.mismatch_count == 0

    def check(self, condition, description):
        self.checked += 1
        if not condition:
            self.mismatch_count += 1
            if len(self.mismatches) < MISMATCH_SAMPLE:
                self.mismatches.append(description)


def _instances(max_n, max_d, max_t, min_n=1):
    return [
        (n, d, t)
        for n in range(min_n, max_n + 1)
        for d in range(1, max_d + 1)
        for t in range(1, max_t + 1)
    ]


def _progress(items, name, quiet):
    return tqdm(items, desc=name, leave=False, disable=quiet or not sys.stdout.isatty())


def sweep_enumeration(max_n=12, quiet=False):
    """|enumerate_tspread| = count_tspread and strictly descending lex order."""
    result = SweepResult("enumeration")
    for n, d, t in _progress(_instances(max_n, 5, 3), result.name, quiet):
        members = enumerate_tspread(n, d, t).members
        result.check(len(members) == count_tspread(n, d, t), f"|M_{{{n},{d},{t}}}|")
        descending = all(lex_compare(u, v) == 1 for u, v in zip(members, members[1:]))
        result.check(descending, f"order of M_{{{n},{d},{t}}}")
    return result


def sweep_complement_counts(max_n=9, quiet=False):
    """complement_count against enumeration, and its inverse."""
    result = SweepResult("complement counts")
    for n, d, t in _progress(_instances(max_n, 3, 3), result.name, quiet):
        universe = enumerate_tspread(n, d, t).members
        for rank, u in enumerate(universe):
            expected = len(universe) - 1 - rank
            value = complement_count(u, n, t)
            result.check(value == expected, f"complement_count({u}, {n}, {t})")
            result.check(
                monomial_from_complement_count(value, n, d, t) == u,
                f"monomial_from_complement_count({value}, {n}, {d}, {t})",
            )
        if len(universe) <= 40:
            for u in universe:
                result.check(
                    brute_complement_count(u, n, t) == complement_count(u, n, t),
                    f"brute_complement_count({u}, {n}, {t})",
                )
    return result


def sweep_lex_shadows(max_n=10, quiet=False):
    """
    For every lex segment L: |M_{n,d+1,t}| - |shad_t(L)| = t_successor,
    shad_t(L) is a lex set, and the formula size matches.

    Shadows of the prefixes are grown one member at a time.
    """
    result = SweepResult("lex shadows")
    for n, d, t in _progress(_instances(max_n, 3, 3), result.name, quiet):
        universe = enumerate_tspread(n, d, t).members
        above = enumerate_tspread(n, d + 1, t).members
        rank = {w: k for k, w in enumerate(above)}
        grown = set()
        deepest = -1
        for size, v in enumerate(universe, start=1):
            for w in brute_extensions(v, n, t):
                grown.add(w)
                deepest = max(deepest, rank[w])
            a = len(universe) - size
            label = f"(a={a}, d={d}, t={t}, n={n})"
            result.check(len(above) - len(grown) == t_successor(a, d, t, n), f"t_successor{label}")
            result.check(deepest == len(grown) - 1, f"shadow not lex {label}")
            segment = LexSegment(n, d, t, size)
            result.check(segment.shadow_size() == len(grown), f"shadow_size{label}")
        if len(universe) <= 60:
            for size in range(len(universe) + 1):
                L = materialize(LexSegment(n, d, t, size))
                result.check(
                    shadow_size_by_formula(L) == len(brute_shadow(L)),
                    f"shadow_size_by_formula({n},{d},{t}, size {size})",
                )
    return result


def _stable_family(n, d, t, settings, rng, exhaustive_max=None):
    """All strongly stable subsets when small enough, else a seeded sample."""
    if exhaustive_max is None or count_tspread(n, d, t) <= exhaustive_max:
        try:
            return enumerate_strongly_stable_sets(n, d, t, settings)
        except SizeGuardError:
            pass
    return [random_strongly_stable_set(n, d, t, rng) for _ in range(settings.sample_count)]


def sweep_stable_shadows(max_n=9, settings=None, quiet=False):
    """
    For strongly stable L: shad_t(L) is strongly stable, the shadow size
    formula holds, and m_i(shad_t(L)) = m_{<=i-t}(L).
    """
    settings = settings or get_settings()
    rng = random.Random(settings.seed)
    result = SweepResult("stable shadows")
    for n, d, t in _progress(_instances(max_n, 3, 3), result.name, quiet):
        for L in _stable_family(n, d, t, settings, rng, STABLE_SHADOW_EXHAUSTIVE_MAX):
            S = brute_shadow(L)
            label = f"{L} in M_{{{n},{d},{t}}}"
            result.check(brute_is_strongly_stable_set(S), f"shadow not stable: {label}")
            result.check(shadow(L) == S, f"shadow mismatch: {label}")
            result.check(shadow_size_by_formula(L) == len(S), f"formula size: {label}")
            before, after = max_index_profile(L), max_index_profile(S)
            result.check(
                all(after.m(i) == before.m_le(i - t) for i in range(1, n + 1)),
                f"max-index profile: {label}",
            )
    return result


def sweep_bayer(max_n=7, settings=None, quiet=False):
    """m_{<=i}(L) <= m_{<=i}(N) for lex L, strongly stable N, |L| <= |N|."""
    settings = settings or get_settings()
    rng = random.Random(settings.seed)
    result = SweepResult("lex sets minimize m_<=i")
    for n, d, t in _progress(_instances(min(max_n, 7), 3, 2), result.name, quiet):
        lex_profiles = [
            max_index_profile(materialize(LexSegment(n, d, t, size))).cumulative
            for size in range(count_tspread(n, d, t) + 1)
        ]
        for N in _stable_family(n, d, t, settings, rng):
            if not is_strongly_stable_set(N):
                result.check(False, f"family member not stable: {N}")
                continue
            stable_profile = max_index_profile(N).cumulative
            # the lex profile grows with |L|, so |L| = |N| is the binding case
            lex_profile = lex_profiles[len(N)]
            result.check(
                all(a <= b for a, b in zip(lex_profile, stable_profile)),
                f"{N} in M_{{{n},{d},{t}}}",
            )
    return result


def sweep_tlex(max_n=9, settings=None, quiet=False):
    """Random strongly stable closures admit I^tlex with the same f_t-vector."""
    settings = settings or get_settings()
    rng = random.Random(settings.seed)
    result = SweepResult("tlex on strongly stable ideals")
    for _ in _progress(range(settings.sample_count), result.name, quiet):
        n = rng.randint(1, max(1, min(max_n, 9)))
        t = rng.randint(1, 3)
        gens = []
        for _ in range(rng.randint(1, 4)):
            d = rng.randint(1, d_max(n, t))
            gens.append(rng.choice(enumerate_tspread(n, d, t).members))
        ideal = strongly_stable_closure(gens, n, t)
        outcome = tlex(ideal)
        label = f"{ideal} with n={n} t={t}"
        result.check(outcome.succeeded, f"tlex failed: {label}")
        if outcome.succeeded:
            result.check(is_lex_ideal(outcome.ideal), f"not lex: {label}")
            result.check(ft_vector(outcome.ideal) == ft_vector(ideal), f"f_t differs: {label}")
    return result


def sweep_kk_universe(max_n=6, settings=None, quiet=False):
    """Brute-force f_t-vectors = vectors accepted by kk_check, with witnesses."""
    settings = settings or get_settings()
    result = SweepResult("feasibility theorem")
    top = min(max_n, settings.universe_max_n)
    for n, t in _progress([(n, t) for n in range(1, top + 1) for t in (1, 2)], result.name, quiet):
        universe = set(brute_kk_universe(n, t, settings))
        accepted = set(enumerate_feasible(n, t))
        result.check(universe == accepted, f"n={n} t={t}: {len(universe)} vs {len(accepted)}")
        for f in accepted:
            result.check(kk_check(f, t).feasible, f"kk_check rejects {f} for t={t}")
            witness = kk_witness(f, t)
            result.check(ft_vector(witness) == f, f"witness for {f} t={t}")
    return result


def sweep_classic_reduction(max_n=12, quiet=False):
    """t_successor(a, d, 1, n) = classic_successor(a, d)."""
    result = SweepResult("t = 1 reduction")
    pairs = [(n, d) for n in range(1, max_n + 1) for d in range(1, 5)]
    for n, d in _progress(pairs, result.name, quiet):
        for a in range(count_tspread(n, d, 1) + 1):
            result.check(
                t_successor(a, d, 1, n) == classic_successor(a, d),
                f"(a={a}, d={d}, n={n})",
            )
    return result


def run_all(max_n=None, settings=None, quiet=False, quick=False):
    """
    Run every sweep.

    Args:
        max_n: Largest ambient n for the size-sensitive sweeps
        settings: Settings (default: get_settings())
        quiet: Suppress status lines and progress bars
        quick: Small ranges only, for smoke testing

    Returns:
        list[SweepResult]
    """
    settings = settings or get_settings()
    max_n = max_n or settings.sweep_max_n
    if quick:
        max_n = min(max_n, 5)

    sweeps = [
        lambda: sweep_enumeration(max_n=min(12, max_n + 3), quiet=quiet),
        lambda: sweep_complement_counts(max_n=max_n, quiet=quiet),
        lambda: sweep_lex_shadows(max_n=max_n + 1, quiet=quiet),
        lambda: sweep_stable_shadows(max_n=max_n, settings=settings, quiet=quiet),
        lambda: sweep_bayer(max_n=max_n, settings=settings, quiet=quiet),
        lambda: sweep_tlex(max_n=max_n, settings=settings, quiet=quiet),
        lambda: sweep_kk_universe(max_n=max_n, settings=settings, quiet=quiet),
        lambda: sweep_classic_reduction(max_n=min(12, max_n + 3), quiet=quiet),
    ]

    results = []
    for sweep in sweeps:
        result = sweep()
        results.append(result)
        if not quiet:
            mark = "✓" if result.ok else "✗"
            print(f"{mark} {result.name}: {result.checked} checks, {result.mismatch_count} mismatches")
            for description in result.mismatches:
                print(f"    - {description}")
    return results


def write_report(results, path, settings=None):
    """Markdown summary of a verify run."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write("# Oracle Verification Report\n\n")
        f.write("## Settings\n\n")
        for key, value in get_config_as_dict(settings).items():
            f.write(f"- {key}: {value}\n")
        f.write("\n## Sweeps\n\n")
        f.write("| Sweep | Checks | Mismatches |\n")
        f.write("|-------|--------|------------|\n")
        for result in results:
            f.write(f"| {result.name} | {result.checked} | {result.mismatch_count} |\n")
        failing = [result for result in results if not result.ok]
        if failing:
            f.write("\n## Mismatches\n\n")
            for result in failing:
                f.write(f"### {result.name}\n\n")
                for description in result.mismatches:
                    f.write(f"- {description}\n")
                f.write("\n")
    return path
