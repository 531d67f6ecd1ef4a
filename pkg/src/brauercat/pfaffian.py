"""Kernel generators built from sums over sub-matchings, and the rewrite
system that reduces any morphism to its noncrossing normal form.

A generator picks a subset S of 2(n+1) boundary points and a fixed matching f
of the rest; it is the sum of s union f over all matchings s of S.  Rewriting
replaces the fully crossing matching of S by minus the sum of all others,
which strictly decreases the crossing count.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .category import Morphism
from .matchings import (Diagram, PerfectMatching, bend, crossing_pairs,
                        find_mutually_crossing, unbend, _matchings_of)


@dataclass(frozen=True)
class PfGenerator:
    """A kernel generator: subset S of size 2(n+1) plus a matching f of the rest."""

    n: int
    points: int
    subset: tuple[int, ...]
    rest: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "subset", tuple(sorted(self.subset)))
        object.__setattr__(self, "rest",
                           tuple(sorted((min(a, b), max(a, b)) for a, b in self.rest)))
        if len(self.subset) != 2 * (self.n + 1):
            raise ValueError(f"subset has {len(self.subset)} points, expected {2 * (self.n + 1)}")
        covered = set(self.subset)
        for a, b in self.rest:
            covered.update((a, b))
        if len(covered) != self.points or covered != set(range(1, self.points + 1)) \
                or len(set(self.subset)) + 2 * len(self.rest) != self.points:
            raise ValueError("subset and fixed matching must partition the point set")


def pfaffian(g: PfGenerator, delta=None) -> Morphism:
    """Sum of all matchings of the subset, each completed by the fixed matching."""
    terms = {}
    for s in _matchings_of(g.subset):
        pm = PerfectMatching(s + g.rest)
        terms[Diagram(0, g.points, pm)] = 1
    return Morphism(0, g.points, terms, delta)


def enumerate_pf_generators(n: int, points: int) -> Iterator[PfGenerator]:
    """All kernel generators on the given boundary, in a deterministic order."""
    size = 2 * (n + 1)
    if points < size or points % 2 != 0:
        return
    all_points = tuple(range(1, points + 1))
    for subset in combinations(all_points, size):
        rest_points = tuple(p for p in all_points if p not in subset)
        for f in _matchings_of(rest_points):
            yield PfGenerator(n, points, subset, f)


def find_violation(d: Diagram, n: int) -> tuple[tuple[int, int], ...] | None:
    """Lexicographically smallest set of n+1 mutually crossing strands, or None."""
    return find_mutually_crossing(d.matching, n + 1)


def rewrite_step(d: Diagram, violation: tuple[tuple[int, int], ...],
                 delta=None) -> Morphism:
    """Replace the fully crossing matching on the violation's endpoints.

    Returns minus the sum over all other matchings of those endpoints, each
    completed by the untouched strands; d plus the result spans the relation.
    Every output term is checked to have strictly fewer crossing pairs.
    """
    violation = tuple(sorted(violation))
    strands = set(d.matching.pairs)
    if not set(violation) <= strands:
        raise ValueError("violation is not a strand subset of the diagram")
    k = len(violation)
    subset = tuple(sorted(p for pair in violation for p in pair))
    a_part, b_part = subset[:k], subset[k:]
    if tuple(zip(a_part, b_part)) != violation:
        raise ValueError(f"strands {violation} do not cross mutually")
    rest = tuple(sorted(strands - set(violation)))
    before = crossing_pairs(d.matching)
    terms = {}
    for s in _matchings_of(subset):
        if tuple(sorted(s)) == violation:
            continue
        pm = PerfectMatching(s + rest)
        after = crossing_pairs(pm)
        if after >= before:
            raise AssertionError(
                f"crossing count did not decrease: {d.matching} -> {pm} ({before} -> {after})")
        terms[Diagram(0, d.matching.n_points, pm)] = -1
    return Morphism(0, d.matching.n_points, terms, delta)


class RewriteDiverged(RuntimeError):
    """Raised when the fuel guard trips; means the termination measure failed."""


def normal_form(m: Morphism, n: int, _trace: list | None = None) -> Morphism:
    """Reduce a morphism to an equal one supported on (n+1)-noncrossing diagrams.

    Works on Hom(0, 2r); other shapes are bent flat, reduced, and unbent.
    Deterministic: always rewrites the lexicographically first diagram in the
    support that still has a violation.
    """
    if m.r != 0:
        flat = Morphism(0, m.r + m.s,
                        {bend(d): c for d, c in m.terms.items()}, m.delta)
        reduced = normal_form(flat, n, _trace)
        return Morphism(m.r, m.s,
                        {unbend(d, m.r, m.s): c for d, c in reduced.terms.items()}, m.delta)

    points = m.r + m.s
    total_crossings = sum(crossing_pairs(d.matching) for d in m.terms)
    term_bound = 1
    for odd in range(points - 1, 0, -2):
        term_bound *= odd
    fuel = max(1, total_crossings) * term_bound

    current = m
    while True:
        target = None
        violation = None
        for d in current.support():
            violation = find_violation(d, n)
            if violation is not None:
                target = d
                break
        if target is None:
            return current
        if fuel <= 0:
            raise RewriteDiverged(
                f"rewrite fuel exhausted while reducing {target} (measure gap?)")
        fuel -= 1
        coeff = current.terms[target]
        replacement = rewrite_step(target, violation, m.delta).scaled(coeff)
        current = (current - Morphism.from_diagram(target, m.delta, coeff)) + replacement
        if _trace is not None:
            _trace.append(target)
