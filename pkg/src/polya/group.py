"""Finite permutation groups built by closure, plus the standard families."""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import LimitExceededError, ParseError
from .perm import Permutation, compose, parse_permutation

DEFAULT_MAX_ORDER = 1_000_000
SYMMETRIC_CAP = 8


@dataclass(frozen=True)
class PermutationGroup:
    """A finite group of permutations of {1..degree}.

    ``elements`` is sorted by image table, so iteration order is
    deterministic. ``generators`` records what the group was built from and
    may be empty (the trivial group).
    """

    degree: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...] = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, p: object) -> bool:
        return p in self._element_set

    @property
    def _element_set(self) -> frozenset[Permutation]:
        # cached lazily; frozen dataclass so go through object.__setattr__
        try:
            return self.__dict__["_elements_cache"]
        except KeyError:
            s = frozenset(self.elements)
            object.__setattr__(self, "_elements_cache", s)
            return s

    def issubgroup(self, other: PermutationGroup) -> bool:
        return self.degree == other.degree and all(g in other for g in self.elements)


def closure(
    generators: Sequence[Permutation],
    degree: int,
    max_order: int = DEFAULT_MAX_ORDER,
) -> PermutationGroup:
    """Smallest group containing ``generators``, by breadth-first products.

    Raises LimitExceededError once more than ``max_order`` elements appear.
    """
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    if max_order < 1:
        raise ValueError(f"max_order must be >= 1, got {max_order}")
    gens = tuple(generators)
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")

    identity = Permutation.identity(degree)
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(g, x)
            if y not in seen:
                seen.add(y)
                if len(seen) > max_order:
                    raise LimitExceededError(
                        f"group closure exceeds max_order={max_order}"
                    )
                queue.append(y)
    return PermutationGroup(degree, tuple(sorted(seen)), gens)


def _n_cycle(n: int) -> Permutation:
    return Permutation(tuple(range(2, n + 1)) + (1,))


def trivial_group(n: int) -> PermutationGroup:
    return closure([], n)


def cyclic_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> PermutationGroup:
    """Rotations of n positions, generated by the n-cycle (1 2 ... n)."""
    return closure([_n_cycle(n)], n, max_order)


def dihedral_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> PermutationGroup:
    """Rotations and reflections of a regular n-gon, order 2n for n >= 3.

    The reflection generator is (1 n)(2 n-1)..., which for n = 4 is the
    flip (1 4)(2 3). For n = 1 the group is trivial and for n = 2 it has
    order 2, since both generators coincide.
    """
    flip = Permutation(tuple(range(n, 0, -1)))
    return closure([_n_cycle(n), flip], n, max_order)


def symmetric_group(n: int, cap: int = SYMMETRIC_CAP) -> PermutationGroup:
    """All n! permutations of n positions; refuses n above ``cap``."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if n > cap:
        raise LimitExceededError(
            f"symmetric group of degree {n} has {math.factorial(n)} elements; cap is degree {cap}"
        )
    elements = tuple(Permutation(p) for p in itertools.permutations(range(1, n + 1)))
    gens: tuple[Permutation, ...] = ()
    if n >= 2:
        gens = (Permutation.from_cycles([(1, 2)], n), _n_cycle(n))
    return PermutationGroup(n, elements, gens)


_FAMILIES = {
    "cyclic": cyclic_group,
    "dihedral": dihedral_group,
    "symmetric": symmetric_group,
    "trivial": trivial_group,
}


def _parse_degree(text: str, spec: str) -> int:
    text = text.strip()
    if not text.isascii() or not text.isdigit() or int(text) < 1:
        raise ParseError(f"bad degree {text!r} in group spec {spec!r}")
    return int(text)


def parse_group_spec(spec: str, max_order: int = DEFAULT_MAX_ORDER) -> PermutationGroup:
    """Build a group from a spec string.

    Accepted forms: ``cyclic:N``, ``dihedral:N``, ``symmetric:N``,
    ``trivial:N`` and ``gens:<perm>[;<perm>...]@N`` where N is the degree
    and each perm is in cycle notation, e.g. ``gens:(1 2 3 4);(1 4)(2 3)@4``.
    """
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise ParseError(f"group spec {spec!r} lacks ':'")
    kind = kind.strip()
    if kind == "gens":
        perms, at, deg = rest.rpartition("@")
        if not at:
            raise ParseError(f"group spec {spec!r} lacks '@<degree>'")
        degree = _parse_degree(deg, spec)
        gens = [parse_permutation(t, degree) for t in perms.split(";") if t.strip()]
        return closure(gens, degree, max_order)
    if kind not in _FAMILIES:
        raise ParseError(f"unknown group family {kind!r} in {spec!r}")
    degree = _parse_degree(rest, spec)
    if kind in ("cyclic", "dihedral"):
        return _FAMILIES[kind](degree, max_order=max_order)
    group = _FAMILIES[kind](degree)
    if group.order > max_order:
        raise LimitExceededError(f"group order {group.order} exceeds max_order={max_order}")
    return group
