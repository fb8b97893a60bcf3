"""Exact arithmetic in integral group rings Z[G].

A ``RingElement`` is a finitely supported formal sum of group elements with
integer coefficients, over any of the group models in ``zdring.groups``.
Coefficients are Python integers, so every computation is exact.  Values are
immutable; all operations return fresh elements.

Integers and ``GroupElement`` values coerce into the ring, so expressions
read like the mathematics: ``(1 - a) * geometric_sum(a, q)``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Optional, Tuple, Union

from .groups import GroupElement, GroupSpec

__all__ = ["RingElement", "geometric_sum", "geometric_sum_from_one"]

Coercible = Union["RingElement", GroupElement, int]


class RingElement:
    """An element of Z[G]: a map from group elements to nonzero integers.

    Supports ``+``, ``-``, ``*`` (ring product and integer scaling) and
    ``**`` with nonnegative exponents.  Equality is exact coefficient-wise
    equality; elements are hashable.  Operands over different groups are
    rejected.
    """

    __slots__ = ("spec", "_coeffs", "_hash")

    def __init__(self, spec: GroupSpec, coeffs: Mapping[GroupElement, int]):
        self.spec = spec
        self._coeffs = {g: c for g, c in coeffs.items() if c != 0}
        self._hash = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, spec: GroupSpec) -> "RingElement":
        return cls(spec, {})

    @classmethod
    def one(cls, spec: GroupSpec) -> "RingElement":
        return cls(spec, {spec.identity(): 1})

    @classmethod
    def monomial(cls, g: GroupElement, coeff: int = 1) -> "RingElement":
        return cls(g.spec, {g: coeff})

    @classmethod
    def from_terms(
        cls, spec: GroupSpec, terms: Iterable[Tuple[GroupElement, int]]
    ) -> "RingElement":
        acc: dict = {}
        for g, c in terms:
            if g.spec != spec:
                raise ValueError("support element from a different group")
            acc[g] = acc.get(g, 0) + c
        return cls(spec, acc)

    # -- queries ---------------------------------------------------------------

    def coefficient(self, g: GroupElement) -> int:
        return self._coeffs.get(g, 0)

    def support(self) -> frozenset:
        """The set of group elements carrying a nonzero coefficient."""
        return frozenset(self._coeffs)

    def support_size(self) -> int:
        return len(self._coeffs)

    def augmentation(self) -> int:
        """Sum of coefficients: the ring homomorphism onto the integers."""
        return sum(self._coeffs.values())

    def is_zero(self) -> bool:
        return not self._coeffs

    def terms(self) -> Iterator[Tuple[GroupElement, int]]:
        """Terms in the deterministic enumeration order of the group."""
        for g in sorted(self._coeffs, key=lambda g: g.sort_key()):
            yield g, self._coeffs[g]

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElement):
            coerced = _try_coerce(self.spec, other)
            if coerced is None:
                return NotImplemented
            other = coerced
        return self.spec == other.spec and self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spec, frozenset(self._coeffs.items())))
        return self._hash

    # -- arithmetic --------------------------------------------------------------

    def _check_spec(self, other: "RingElement") -> None:
        if self.spec != other.spec:
            raise ValueError("cannot combine ring elements over different groups")

    def __add__(self, other: Coercible) -> "RingElement":
        other = _coerce(self.spec, other)
        self._check_spec(other)
        acc = dict(self._coeffs)
        for g, c in other._coeffs.items():
            acc[g] = acc.get(g, 0) + c
        return RingElement(self.spec, acc)

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement(self.spec, {g: -c for g, c in self._coeffs.items()})

    def __sub__(self, other: Coercible) -> "RingElement":
        return self + (-_coerce(self.spec, other))

    def __rsub__(self, other: Coercible) -> "RingElement":
        return _coerce(self.spec, other) + (-self)

    def __mul__(self, other: Coercible) -> "RingElement":
        if isinstance(other, int):
            return RingElement(self.spec, {g: c * other for g, c in self._coeffs.items()})
        other = _coerce(self.spec, other)
        self._check_spec(other)
        acc: dict = {}
        for g1, c1 in self._coeffs.items():
            for g2, c2 in other._coeffs.items():
                g = g1 * g2
                acc[g] = acc.get(g, 0) + c1 * c2
        return RingElement(self.spec, acc)

    def __rmul__(self, other: Coercible) -> "RingElement":
        if isinstance(other, int):
            return self * other
        return _coerce(self.spec, other) * self

    def __pow__(self, n: int) -> "RingElement":
        if not isinstance(n, int) or n < 0:
            raise ValueError("ring elements support only nonnegative integer powers")
        result = RingElement.one(self.spec)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse_monomial(self) -> Optional["RingElement"]:
        """The inverse when this is a single term with coefficient +-1."""
        if len(self._coeffs) != 1:
            return None
        (g, c), = self._coeffs.items()
        if c not in (1, -1):
            return None
        return RingElement.monomial(g.inverse(), c)

    # -- formatting ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for g, c in self.terms():
            word = str(g)
            mag = abs(c)
            if g.is_identity():
                body = str(mag)
            elif mag == 1:
                body = word
            else:
                body = f"{mag}*{word}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"<{self} over {self.spec.short_str()}>"


def _try_coerce(spec: GroupSpec, value) -> Optional[RingElement]:
    if isinstance(value, RingElement):
        return value
    if isinstance(value, GroupElement):
        return RingElement.monomial(value, 1)
    if isinstance(value, int):
        return RingElement(spec, {spec.identity(): value})
    return None


def _coerce(spec: GroupSpec, value: Coercible) -> RingElement:
    coerced = _try_coerce(spec, value)
    if coerced is None:
        raise TypeError(f"cannot coerce {value!r} into Z[{spec.short_str()}]")
    return coerced


def geometric_sum(h: GroupElement, q: int) -> RingElement:
    """1 + h + ... + h^(q-1), for any q >= 1.

    When h has order dividing q this equals ``geometric_sum_from_one(h, q)``;
    printed output always uses this 0..q-1 convention.
    """
    if q < 1:
        raise ValueError(f"need q >= 1, got {q}")
    acc: dict = {}
    power = h.spec.identity()
    for _ in range(q):
        acc[power] = acc.get(power, 0) + 1
        power = power * h
    return RingElement(h.spec, acc)


def geometric_sum_from_one(h: GroupElement, q: int) -> RingElement:
    """h + h^2 + ... + h^q, the shifted variant of ``geometric_sum``."""
    return RingElement.monomial(h, 1) * geometric_sum(h, q)
