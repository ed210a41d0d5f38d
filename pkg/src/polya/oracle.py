"""Brute-force ground truth: enumerate every coloring and split it into orbits.

Nothing in here goes through cycle indices or polynomial substitution, so
its answers are an independent check on :mod:`polya.inventory`.

A coloring of n positions with k colors is a tuple of color indices in
``range(k)``, position 1 first. A permutation ``g`` acts by carrying the
color at position i to position ``g(i)``; with positions 1..4 and
``g = (1 2 3 4)`` this sends ``rwww`` to ``wrww``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import LimitExceededError, PolyaError
from .group import PermutationGroup
from .inventory import ColorSet
from .perm import Permutation
from .polynomial import Monomial

DEFAULT_LIMIT = 10_000_000

Coloring = tuple[int, ...]


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


@dataclass(frozen=True)
class Orbit:
    """Colorings equivalent under the group, sorted; the first is the representative."""

    members: tuple[Coloring, ...]

    @property
    def representative(self) -> Coloring:
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)

    def composition(self, num_colors: int) -> tuple[int, ...]:
        counts = Counter(self.representative)
        return tuple(counts[i] for i in range(num_colors))


def act(g: Permutation, coloring: Sequence[int]) -> Coloring:
    """Apply ``g`` to a coloring: ``result[i] = coloring[g⁻¹(i)]``."""
    if g.degree != len(coloring):
        raise ValueError(f"permutation degree {g.degree} != coloring length {len(coloring)}")
    out = [0] * g.degree
    for i, img in enumerate(g.images):
        out[img - 1] = coloring[i]
    return tuple(out)


def format_coloring(coloring: Sequence[int], colors: ColorSet) -> str:
    """``"rwww"`` for single-character names, else ``"red-white-white-white"``."""
    names = [colors.colors[i] for i in coloring]
    if all(len(c) == 1 for c in colors.colors):
        return "".join(names)
    return "-".join(names)


def parse_coloring(text: str, colors: ColorSet) -> Coloring:
    parts = text.split("-") if "-" in text else list(text)
    try:
        return tuple(colors.index(p) for p in parts)
    except ValueError:
        raise PolyaError(f"coloring {text!r} uses colors outside {list(colors.colors)}") from None


def _check_limit(num_colors: int, degree: int, limit: int) -> int:
    if num_colors < 1:
        raise PolyaError(f"need at least one color, got {num_colors}")
    total = num_colors**degree
    if total > limit:
        raise LimitExceededError(
            f"{num_colors}^{degree} = {total} colorings exceeds limit {limit}"
        )
    return total


def enumerate_orbits(
    group: PermutationGroup,
    num_colors: int,
    limit: int = DEFAULT_LIMIT,
) -> list[Orbit]:
    """Partition all ``num_colors ** degree`` colorings into orbits.

    Orbits come back sorted by representative, members sorted within each.
    Unioning each coloring with its image under every generator is enough
    to connect whole orbits; the full element list is only used when the
    group carries no generators.
    """
    n = group.degree
    total = _check_limit(num_colors, n, limit)
    # itertools.product yields colorings in lexicographic order, so the
    # position of a coloring in that sequence is its base-k value
    weights = [num_colors ** (n - 1 - i) for i in range(n)]
    movers = [g for g in (group.generators or group.elements) if not g.is_identity()]
    uf = UnionFind(total)
    for idx, c in enumerate(itertools.product(range(num_colors), repeat=n)):
        for g in movers:
            image = act(g, c)
            uf.union(idx, sum(w * x for w, x in zip(weights, image)))

    classes: dict[int, list[Coloring]] = {}
    for idx, c in enumerate(itertools.product(range(num_colors), repeat=n)):
        classes.setdefault(uf.find(idx), []).append(c)
    # members were appended in lexicographic order already
    orbits = [Orbit(tuple(members)) for members in classes.values()]
    orbits.sort(key=lambda o: o.representative)
    return orbits


def _cycle_count(g: Permutation) -> int:
    seen = [False] * g.degree
    cycles = 0
    for start in range(g.degree):
        if not seen[start]:
            cycles += 1
            i = start
            while not seen[i]:
                seen[i] = True
                i = g.images[i] - 1
    return cycles


def burnside_count(group: PermutationGroup, num_colors: int) -> int:
    """Average number of fixed colorings, ``(1/|G|) Σ k^cycles(g)``, exactly."""
    total = sum(num_colors ** _cycle_count(g) for g in group)
    q, r = divmod(total, group.order)
    if r:
        raise PolyaError(
            f"fixed-point total {total} is not divisible by |G| = {group.order}; "
            f"average {Fraction(total, group.order)}"
        )
    return q


def orbit_census(
    group: PermutationGroup,
    colors: ColorSet,
    limit: int = DEFAULT_LIMIT,
) -> dict[Monomial, int]:
    """Number of orbits per color composition, keyed by color monomial.

    Keys are the monomials ``c1^i · c2^j · ...`` so the result can be
    compared directly against pattern-inventory coefficients.
    """
    census: Counter[Monomial] = Counter()
    for orbit in enumerate_orbits(group, len(colors), limit):
        counts = orbit.composition(len(colors))
        census[Monomial(zip(colors.colors, counts))] += 1
    return dict(census)
