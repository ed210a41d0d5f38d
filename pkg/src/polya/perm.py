"""Permutations of {1..n}: cycle notation, composition, cycle structure.

Positions are 1-based. A permutation is stored as its image table, so
``p.images[i - 1]`` is the image of position ``i``.

Composition follows the functional convention: ``compose(p, q)`` applies
``q`` first and then ``p``, i.e. ``compose(p, q)(i) == p(q(i))``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError

Cycle = tuple[int, ...]
CycleDecomposition = tuple[Cycle, ...]
CycleType = dict[int, int]


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n < 1:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {list(images)}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Build a permutation from disjoint cycles; unmentioned positions are fixed."""
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for pos in cycle:
                if pos < 1:
                    raise ParseError(f"position {pos} is below 1")
                if pos > degree:
                    raise ParseError(f"position {pos} exceeds degree {degree}")
                if pos in seen:
                    raise ParseError(f"position {pos} repeated")
                seen.add(pos)
            cyc = list(cycle)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, 1))

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"Permutation({format_permutation(self)!r})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p∘q``: apply ``q`` first, then ``p``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation(tuple(p.images[j - 1] for j in q.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, img in enumerate(p.images, 1):
        inv[img - 1] = i
    return Permutation(tuple(inv))


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    """Disjoint cycles of ``p`` in canonical order, 1-cycles included.

    Each cycle starts at its smallest position and cycles are sorted by
    their first position. Scanning positions in increasing order and
    starting a new cycle at each unvisited one produces exactly that.
    """
    seen = [False] * (p.degree + 1)
    cycles = []
    for start in range(1, p.degree + 1):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = p(i)
        cycles.append(tuple(cycle))
    return tuple(cycles)


def cycle_type(p: Permutation) -> CycleType:
    """Map cycle length -> number of cycles of that length, keys ascending."""
    counts = Counter(len(c) for c in cycle_decomposition(p))
    return dict(sorted(counts.items()))


def num_cycles(p: Permutation) -> int:
    return len(cycle_decomposition(p))


def format_permutation(p: Permutation) -> str:
    return "".join(
        "(" + " ".join(str(i) for i in cycle) + ")" for cycle in cycle_decomposition(p)
    )


_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_SEP_RE = re.compile(r"[,\s]+")
_POS_RE = re.compile(r"[0-9]+")


def _parse_cycle_body(body: str, degree: int, text: str) -> list[int]:
    body = body.strip()
    if not body:
        raise ParseError(f"empty cycle in {text!r}")
    if _SEP_RE.search(body):
        tokens = _SEP_RE.split(body)
    elif degree <= 9:
        # compact form "(1234)": one digit per position
        tokens = list(body)
    else:
        tokens = [body]
    positions = []
    for tok in tokens:
        if not _POS_RE.fullmatch(tok):
            raise ParseError(f"bad position {tok!r} in {text!r}")
        positions.append(int(tok))
    return positions


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``"(1 2 3 4)"``, ``"(1,4)(2,3)"`` or ``"(1234)"``.

    The empty string is the identity. Positions not mentioned are fixed.
    Adjacent single digits without separators are read as separate
    positions only when ``degree <= 9``.
    """
    if degree < 1:
        raise ParseError(f"degree must be >= 1, got {degree}")
    cycles = []
    pos = 0
    stripped = text.strip()
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(stripped, pos)
        if m is None:
            raise ParseError(f"malformed cycle notation at {stripped[pos:]!r}")
        cycles.append(_parse_cycle_body(m.group(1), degree, text))
        pos = m.end()
    return Permutation.from_cycles(cycles, degree)
