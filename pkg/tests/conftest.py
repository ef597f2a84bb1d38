"""Shared oracles for the test-suite.

Each oracle recomputes a quantity by a method independent of the production
code path: Hilbert functions by brute monomial enumeration, staircase areas
by inclusion-exclusion over corner triangles, Borel-fixedness by scanning
every monomial of the ideal up to a degree bound.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest

from limshape import MonomialIdeal


def compositions(total: int, parts: int):
    """All tuples of `parts` non-negative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def brute_hf(I: MonomialIdeal, d: int) -> int:
    """Hilbert function by enumerating every degree-d monomial."""
    count = 0
    for mono in compositions(d, I.nvars):
        if not any(all(g[i] <= mono[i] for i in range(I.nvars)) for g in I.gens):
            count += 1
    return count


def borel_by_full_scan(I: MonomialIdeal, extra_degrees: int = 2) -> bool:
    """Exchange condition checked on every monomial of the ideal up to
    max generator degree + extra_degrees (not just the generators)."""
    top = I.max_generator_degree() + extra_degrees
    for d in range(top + 1):
        for mono in compositions(d, I.nvars):
            if not I.contains(mono):
                continue
            for j in range(I.nvars):
                if mono[j] == 0:
                    continue
                moved = list(mono)
                moved[j] -= 1
                for i in range(j):
                    moved[i] += 1
                    if not I.contains(moved):
                        return False
                    moved[i] -= 1
    return True


def area_by_inclusion_exclusion(corners) -> Fraction:
    """Union area of corner triangles {x>=p0, y>=p1, x+y<=s} via subsets;
    intersections of corner triangles are corner triangles again."""

    def tri_area(p0, p1, s):
        side = Fraction(s) - p0 - p1
        return side * side / 2 if side > 0 else Fraction(0)

    total = Fraction(0)
    items = list(corners)
    for k in range(1, len(items) + 1):
        sign = 1 if k % 2 == 1 else -1
        for subset in combinations(items, k):
            p0 = max(p for (p, _), _ in subset)
            p1 = max(q for (_, q), _ in subset)
            s = min(Fraction(s) for _, s in subset)
            total += sign * tri_area(p0, p1, s)
    return total


def random_ideal(rng: random.Random, nvars: int, maxdeg: int = 5, ngens: int = 4):
    gens = []
    for _ in range(rng.randint(1, ngens)):
        deg = rng.randint(1, maxdeg)
        cuts = sorted(rng.randint(0, deg) for _ in range(nvars - 1))
        gen = []
        prev = 0
        for c in cuts:
            gen.append(c - prev)
            prev = c
        gen.append(deg - prev)
        gens.append(tuple(gen))
    return MonomialIdeal.from_gens(nvars, gens)


def borel_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Smallest strongly stable ideal containing I."""
    gens = set(I.gens)
    frontier = list(gens)
    while frontier:
        g = frontier.pop()
        for j in range(I.nvars):
            if g[j] == 0:
                continue
            for i in range(j):
                moved = list(g)
                moved[j] -= 1
                moved[i] += 1
                moved = tuple(moved)
                if moved not in gens:
                    gens.add(moved)
                    frontier.append(moved)
    return MonomialIdeal.from_gens(I.nvars, gens)


@pytest.fixture
def rng():
    return random.Random(20260810)
