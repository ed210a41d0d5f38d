"""Sparse multivariate polynomials with exact rational coefficients.

Coefficients are :class:`fractions.Fraction`; nothing here touches floating
point. A polynomial is a mapping from :class:`Monomial` to a nonzero
coefficient, the empty monomial standing for the constant term.

Text rendering orders terms graded-lexicographically, descending, with the
variables ranked by a caller-supplied order (remaining variables follow in
natural order, so ``x2`` sorts before ``x10``). Factors and the coefficient
are joined with ``·`` and fractional coefficients are parenthesized::

    (1/8)·x1^4 + (1/4)·x1^2·x2 + (3/8)·x2^2 + (1/4)·x4
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import PolyaError

Coefficient = Union[int, Fraction]


def natural_key(name: str):
    """Sort key splitting digit runs, so "x2" < "x10"."""
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


class Monomial:
    """A product of variables with positive integer exponents.

    Zero exponents are dropped on construction, so ``Monomial({"r": 2, "b": 0})``
    equals ``Monomial({"r": 2})``.
    """

    __slots__ = ("_exps", "_hash")

    def __init__(self, exponents: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        exps: dict[str, int] = {}
        for var, e in items:
            if not isinstance(var, str) or not var:
                raise ValueError(f"variable names must be nonempty strings, got {var!r}")
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponent of {var} must be a nonnegative integer, got {e!r}")
            if e:
                exps[var] = exps.get(var, 0) + e
        self._exps = tuple(sorted(exps.items()))
        self._hash = hash(self._exps)

    @classmethod
    def one(cls) -> Monomial:
        return cls()

    def __getitem__(self, var: str) -> int:
        for v, e in self._exps:
            if v == var:
                return e
        return 0

    def items(self) -> tuple[tuple[str, int], ...]:
        return self._exps

    def as_dict(self) -> dict[str, int]:
        return dict(self._exps)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self._exps)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._exps)

    def __bool__(self) -> bool:
        return bool(self._exps)

    def __mul__(self, other: Monomial) -> Monomial:
        merged = dict(self._exps)
        for v, e in other._exps:
            merged[v] = merged.get(v, 0) + e
        return Monomial(merged)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._exps == other._exps

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({dict(self._exps)!r})"

    def render(self, order: Sequence[str] = ()) -> str:
        return "·".join(
            v if e == 1 else f"{v}^{e}" for v, e in self._ordered(order)
        )

    def _ordered(self, order: Sequence[str]) -> list[tuple[str, int]]:
        rank = _rank(order, self.variables)
        return sorted(self._exps, key=lambda ve: rank[ve[0]])


def _rank(order: Sequence[str], variables: Iterable[str]) -> dict[str, int]:
    ranked = list(dict.fromkeys(order))
    extra = sorted(set(variables) - set(ranked), key=natural_key)
    return {v: i for i, v in enumerate(ranked + extra)}


def _as_fraction(c) -> Fraction:
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")
    return Fraction(c)


class Polynomial:
    """Immutable sparse polynomial; supports ``+ - * **`` with ints and Fractions."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Coefficient] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            if not isinstance(m, Monomial):
                m = Monomial(m)
            c = _as_fraction(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
                if not clean[m]:
                    del clean[m]
        self._terms = clean

    @classmethod
    def constant(cls, c: Coefficient) -> Polynomial:
        return cls({Monomial(): c})

    @classmethod
    def variable(cls, name: str) -> Polynomial:
        return cls({Monomial({name: 1}): 1})

    @classmethod
    def zero(cls) -> Polynomial:
        return cls()

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def variables(self) -> set[str]:
        return {v for m in self._terms for v in m.variables}

    @property
    def degree(self) -> int:
        return max((m.degree for m in self._terms), default=0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # arithmetic

    @staticmethod
    def _coerce(x) -> Polynomial:
        if isinstance(x, Polynomial):
            return x
        return Polynomial.constant(_as_fraction(x))

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: Coefficient) -> Polynomial:
        c = _as_fraction(c)
        return Polynomial({m: c * v for m, v in self._terms.items()})

    def coefficient(self, m: Monomial | Mapping[str, int]) -> Fraction:
        if not isinstance(m, Monomial):
            m = Monomial(m)
        return self._terms.get(m, Fraction(0))

    def substitute(self, bindings: Mapping[str, Polynomial | Coefficient]) -> Polynomial:
        """Replace every variable by its binding and expand.

        Every variable occurring in the polynomial must be bound.
        """
        missing = self.variables() - set(bindings)
        if missing:
            raise PolyaError(f"unbound variable(s): {', '.join(sorted(missing, key=natural_key))}")
        powers: dict[tuple[str, int], Polynomial] = {}
        out = Polynomial()
        for m, c in self._terms.items():
            term = Polynomial.constant(c)
            for v, e in m.items():
                if (v, e) not in powers:
                    powers[v, e] = self._coerce(bindings[v]) ** e
                term = term * powers[v, e]
            out = out + term
        return out

    def evaluate(self, values: Mapping[str, Coefficient]) -> Fraction:
        missing = self.variables() - set(values)
        if missing:
            raise PolyaError(f"unbound variable(s): {', '.join(sorted(missing, key=natural_key))}")
        exact = {v: _as_fraction(values[v]) for v in self.variables()}
        total = Fraction(0)
        for m, c in self._terms.items():
            for v, e in m.items():
                c *= exact[v] ** e
            total += c
        return total

    # output

    def ordered_terms(self, order: Sequence[str] = ()) -> list[tuple[Monomial, Fraction]]:
        """Terms in graded-lex descending order with variables ranked by ``order``."""
        rank = _rank(order, self.variables())
        nvars = len(rank)

        def key(item):
            vec = [0] * nvars
            for v, e in item[0].items():
                vec[rank[v]] = e
            return (item[0].degree, vec)

        return sorted(self._terms.items(), key=key, reverse=True)

    def render(self, order: Sequence[str] = ()) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.ordered_terms(order)):
            mag = abs(c)
            if mag.denominator == 1:
                coeff = str(mag.numerator)
            else:
                coeff = f"({mag.numerator}/{mag.denominator})"
            if not m:
                body = coeff
            elif mag == 1:
                body = m.render(order)
            else:
                body = f"{coeff}·{m.render(order)}"
            if i == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Polynomial({self.render()!r})"

    def to_json(self, order: Sequence[str] = ()) -> list[dict]:
        """JSON-ready list of ``{"coefficient": {"num", "den"}, "exponents"}`` terms.

        Numerator and denominator are strings so arbitrarily large values
        survive JSON readers that coerce numbers to floats.
        """
        out = []
        for m, c in self.ordered_terms(order):
            out.append(
                {
                    "coefficient": {"num": str(c.numerator), "den": str(c.denominator)},
                    "exponents": dict(m._ordered(order)),
                }
            )
        return out

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> Polynomial:
        terms: dict[Monomial, Fraction] = {}
        for t in data:
            c = Fraction(int(t["coefficient"]["num"]), int(t["coefficient"]["den"]))
            m = Monomial(t["exponents"])
            terms[m] = terms.get(m, Fraction(0)) + c
        return cls(terms)
