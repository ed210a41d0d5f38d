"""Cycle index, pattern inventory and pattern counts for a permutation group.

The cycle index of G is the average over its elements of the monomial
``x1^a1 · x2^a2 · ...`` where ``ak`` is the number of k-cycles (1-cycles
included). The variable ``xk`` stands for what single-variable notation
writes as ``(x^k)``.

Substituting ``xk -> c1^k + c2^k + ...`` over the colors gives the pattern
inventory: the coefficient of ``c1^i · c2^j · ...`` is the number of
inequivalent colorings with i positions of color c1, j of color c2, and so
on.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import PolyaError
from .group import PermutationGroup
from .perm import cycle_type, num_cycles
from .polynomial import Monomial, Polynomial


def cycle_variable(length: int) -> str:
    return f"x{length}"


@dataclass(frozen=True)
class ColorSet:
    colors: tuple[str, ...]

    def __post_init__(self):
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        if not colors:
            raise PolyaError("a color set needs at least one color")
        for c in colors:
            if not isinstance(c, str) or not c:
                raise PolyaError(f"color names must be nonempty strings, got {c!r}")
        if len(set(colors)) != len(colors):
            raise PolyaError(f"duplicate color names in {list(colors)}")

    @classmethod
    def of(cls, names: Iterable[str] | str) -> ColorSet:
        """``ColorSet.of("r,w,b")`` or ``ColorSet.of(["r", "w", "b"])``."""
        if isinstance(names, str):
            names = [n.strip() for n in names.split(",")]
        return cls(tuple(names))

    @classmethod
    def generic(cls, k: int) -> ColorSet:
        """Colors named c1..ck."""
        if k < 1:
            raise PolyaError(f"need at least one color, got {k}")
        return cls(tuple(f"c{i}" for i in range(1, k + 1)))

    def __len__(self) -> int:
        return len(self.colors)

    def __iter__(self):
        return iter(self.colors)

    def index(self, name: str) -> int:
        return self.colors.index(name)

    def monomial(self, composition: Mapping[str, int]) -> Monomial:
        """The color monomial for a composition; zero counts are dropped."""
        unknown = [c for c in composition if c not in self.colors]
        if unknown:
            raise PolyaError(f"unknown color(s) {unknown}; colors are {list(self.colors)}")
        for c, k in composition.items():
            if not isinstance(k, int) or k < 0:
                raise PolyaError(f"count for color {c!r} must be a nonnegative integer, got {k!r}")
        return Monomial(composition)


def cycle_index(group: PermutationGroup) -> Polynomial:
    types = Counter(tuple(cycle_type(g).items()) for g in group)
    order = group.order
    return Polynomial(
        {
            Monomial((cycle_variable(length), count) for length, count in ctype): Fraction(n, order)
            for ctype, n in types.items()
        }
    )


def power_sum(colors: ColorSet, k: int) -> Polynomial:
    return Polynomial({Monomial({c: k}): 1 for c in colors})


def pattern_inventory(group: PermutationGroup, colors: ColorSet) -> Polynomial:
    index = cycle_index(group)
    bindings = {}
    for v in index.variables():
        bindings[v] = power_sum(colors, int(v[1:]))
    inventory = index.substitute(bindings)
    bad = [c for _, c in inventory if c.denominator != 1 or c < 0]
    if bad:
        raise PolyaError(f"pattern inventory has non-integral coefficients {bad}; is the group closed?")
    return inventory


def _exact_count(value: Fraction) -> int:
    if value.denominator != 1 or value < 0:
        raise PolyaError(f"pattern count {value} is not a nonnegative integer; is the group closed?")
    return value.numerator


def count_distinct(
    group: PermutationGroup,
    num_colors: int,
    inventory: Polynomial | None = None,
) -> int:
    """Number of colorings with ``num_colors`` colors that are distinct up to ``group``.

    With a materialized ``inventory`` the count is its value at all-ones;
    otherwise it is the direct average of ``num_colors ** cycles(g)``.
    """
    if num_colors < 1:
        raise PolyaError(f"need at least one color, got {num_colors}")
    if inventory is not None:
        if len(inventory.variables()) != num_colors:
            raise PolyaError(
                f"inventory is in {len(inventory.variables())} colors, not {num_colors}"
            )
        return _exact_count(inventory.evaluate({v: 1 for v in inventory.variables()}))
    total = sum(num_colors ** num_cycles(g) for g in group)
    return _exact_count(Fraction(total, group.order))


def count_by_composition(
    group: PermutationGroup,
    colors: ColorSet,
    composition: Mapping[str, int],
    inventory: Polynomial | None = None,
) -> int:
    m = colors.monomial(composition)
    if m.degree != group.degree:
        raise PolyaError(
            f"composition uses {m.degree} positions but the group has degree {group.degree}"
        )
    if inventory is None:
        inventory = pattern_inventory(group, colors)
    return _exact_count(inventory.coefficient(m))
