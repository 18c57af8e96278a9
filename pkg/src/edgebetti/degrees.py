"""Multidegrees over vertex sets, identified with monomials.

A multidegree is a nonnegative integer vector indexed by vertex names.
Following the usual identification, the degree ``2u + v`` is the monomial
``u^2 v``; multiplication of monomials is addition of degrees.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping

from .errors import NotDivisible


class Multidegree(Mapping):
    """Immutable sparse exponent vector; zero entries are never stored.

    Accepts a mapping or an iterable of (name, exponent) pairs; repeated
    names accumulate, which makes sums of edge degrees easy to write.
    """

    __slots__ = ("_exp", "_items", "_hash")

    def __init__(self, exponents: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        pairs = exponents.items() if isinstance(exponents, Mapping) else exponents
        exp: dict[str, int] = {}
        for name, e in pairs:
            e = int(e)
            if e:
                exp[name] = exp.get(name, 0) + e
        for name, e in exp.items():
            if e < 0:
                raise ValueError(f"negative exponent {e} at {name!r}")
        self._exp = exp
        self._items = tuple(sorted(exp.items()))
        self._hash = hash(self._items)

    @classmethod
    def zero(cls) -> "Multidegree":
        return cls()

    @classmethod
    def vertex(cls, name: str, power: int = 1) -> "Multidegree":
        return cls(((name, power),))

    @classmethod
    def edge(cls, u: str, v: str) -> "Multidegree":
        """Degree of the edge {u, v}: one at each endpoint."""
        if u == v:
            raise ValueError(f"loop at {u!r} is not an edge")
        return cls(((u, 1), (v, 1)))

    def __getitem__(self, name: str) -> int:
        return self._exp.get(name, 0)

    def __iter__(self) -> Iterator[str]:
        return iter(self._exp)

    def __len__(self) -> int:
        return len(self._exp)

    def __contains__(self, name) -> bool:
        return name in self._exp

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if isinstance(other, Multidegree):
            return self._items == other._items
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self._exp)

    def items(self):
        return self._items

    def support(self) -> frozenset:
        return frozenset(self._exp)

    def total(self) -> int:
        """Total degree, i.e. the sum of all exponents."""
        return sum(self._exp.values())

    def __mul__(self, other: "Multidegree") -> "Multidegree":
        if not isinstance(other, Multidegree):
            return NotImplemented
        exp = dict(self._exp)
        for name, e in other._exp.items():
            exp[name] = exp.get(name, 0) + e
        return Multidegree(exp)

    def __pow__(self, k: int) -> "Multidegree":
        if k < 0:
            raise ValueError("negative power")
        return Multidegree({n: e * k for n, e in self._exp.items()})

    def divides(self, other: "Multidegree") -> bool:
        """Componentwise ``self <= other``."""
        oexp = other._exp
        return all(e <= oexp.get(name, 0) for name, e in self._exp.items())

    def quotient(self, other: "Multidegree") -> "Multidegree":
        """self / other, defined when other divides self."""
        if not other.divides(self):
            raise NotDivisible(f"{other} does not divide {self}")
        exp = dict(self._exp)
        for name, e in other._exp.items():
            exp[name] -= e
        return Multidegree(exp)

    def sort_key(self):
        """Canonical ordering key: lexicographic over sorted (name, exp) items."""
        return self._items

    def to_json(self) -> dict:
        return dict(self._items)

    def monomial(self, theta: "Multidegree | None" = None) -> str:
        """Render as a monomial string, optionally factoring out ``theta``."""
        if not self._exp:
            return "1"
        if theta is not None and theta and theta.divides(self):
            rest = self.quotient(theta)
            if not rest:
                return "Theta"
            return "Theta*" + rest.monomial()
        parts = []
        for name, e in self._items:
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Multidegree({self.monomial()})"


def divides(a: Multidegree, b: Multidegree) -> bool:
    """True when a divides b componentwise."""
    return a.divides(b)


def subtract(b: Multidegree, a: Multidegree) -> Multidegree:
    """b - a as multidegrees; raises NotDivisible when a does not divide b."""
    return b.quotient(a)


def product(degrees: Iterable[Multidegree]) -> Multidegree:
    exp: dict[str, int] = {}
    for d in degrees:
        for name, e in d.items():
            exp[name] = exp.get(name, 0) + e
    return Multidegree(exp)


def theta(g) -> Multidegree:
    """Product of all vertices of degree exactly two in g."""
    return Multidegree({v: 1 for v in g.vertices if g.degree(v) == 2})


def big_d(g) -> Multidegree:
    """Sum of all edge degrees of g; equals the vertex-degree vector."""
    return Multidegree({v: g.degree(v) for v in g.vertices})
