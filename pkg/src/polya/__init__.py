"""Pólya pattern inventories for colorings under permutation-group symmetry."""

from .errors import LimitExceededError, ParseError, PolyaError
from .perm import (
    Permutation,
    compose,
    cycle_decomposition,
    cycle_type,
    format_permutation,
    inverse,
    parse_permutation,
)
from .group import (
    PermutationGroup,
    closure,
    cyclic_group,
    dihedral_group,
    parse_group_spec,
    symmetric_group,
    trivial_group,
)
from .polynomial import Monomial, Polynomial
from .inventory import (
    ColorSet,
    count_by_composition,
    count_distinct,
    cycle_index,
    pattern_inventory,
)
from .oracle import Orbit, act, burnside_count, enumerate_orbits, orbit_census

__all__ = [
    "ColorSet",
    "LimitExceededError",
    "Monomial",
    "Orbit",
    "ParseError",
    "Permutation",
    "PermutationGroup",
    "PolyaError",
    "Polynomial",
    "act",
    "burnside_count",
    "closure",
    "compose",
    "count_by_composition",
    "count_distinct",
    "cycle_decomposition",
    "cycle_index",
    "cycle_type",
    "cyclic_group",
    "dihedral_group",
    "enumerate_orbits",
    "format_permutation",
    "inverse",
    "orbit_census",
    "parse_group_spec",
    "parse_permutation",
    "pattern_inventory",
    "symmetric_group",
    "trivial_group",
]
