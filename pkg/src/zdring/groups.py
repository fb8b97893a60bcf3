"""Canonical-form models of the group families used throughout the package.

Five models are provided, each with exact multiplication, inversion, element
order, and deterministic enumeration:

* ``FreeGroupSpec(rank)``: free group on generators ``a1 .. am``, elements
  stored as freely reduced words.
* ``CyclicGroupSpec(order)``: finite cyclic group ``<a>`` of order q >= 2.
* ``FreeProductSpec(q, r)``: free product ``C_q * C_r`` of two cyclic groups,
  generators ``a`` (order q, finite) and ``b`` (order r, possibly infinite),
  elements stored as alternating syllable lists.
* ``Nil2Spec(n)``: the two-generator class-2 group of exponent n with normal
  form ``a^i b^j c^k`` where ``c = a b a^-1 b^-1`` is central; realized on
  residue triples mod n.
* ``FiniteTableSpec(names, table)``: finite group given explicitly by a
  multiplication table (validated to be a group at construction).

Elements are immutable and hashable; two elements are equal exactly when
their canonical forms agree.  Every operation is a pure function, so values
can be shared freely between concurrent workers.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "GroupSpec",
    "FreeGroupSpec",
    "CyclicGroupSpec",
    "FreeProductSpec",
    "Nil2Spec",
    "FiniteTableSpec",
    "GroupElement",
    "CyclicSubgroup",
    "AntinormalityReport",
    "enumerate_elements",
    "is_antinormal_bounded",
    "load_table",
    "parse_table",
]

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class GroupSpec:
    """Base class for group models.  Subclasses own the canonical forms.

    An element is a ``GroupElement`` wrapping this spec together with an
    opaque hashable ``key``; all group laws are implemented on keys.
    """

    # -- core law -----------------------------------------------------------

    def identity_key(self):
        raise NotImplementedError

    def mul_keys(self, k1, k2):
        raise NotImplementedError

    def inv_key(self, k):
        raise NotImplementedError

    def order_of_key(self, k) -> Optional[int]:
        """Least s >= 1 with k^s = identity, or None for infinite order."""
        raise NotImplementedError

    def length_key(self, k) -> int:
        """Canonical length used for enumeration order."""
        raise NotImplementedError

    def lex_key(self, k):
        """Deterministic tie-break among elements of equal length."""
        raise NotImplementedError

    def validate_key(self, k) -> None:
        """Raise ValueError unless ``k`` is a canonical-form key."""
        raise NotImplementedError

    def key_str(self, k) -> str:
        raise NotImplementedError

    # -- size / enumeration ------------------------------------------------

    @property
    def is_finite(self) -> bool:
        raise NotImplementedError

    def group_order(self) -> int:
        raise ValueError(f"{self.short_str()} is infinite")

    def _all_keys(self) -> Iterator:
        raise ValueError(f"{self.short_str()} is infinite")

    def _bounded_keys(self, bound: int) -> Iterator:
        """Keys of length <= bound, nondecreasing length, lex tie-break."""
        raise NotImplementedError

    # -- naming --------------------------------------------------------------

    def short_str(self) -> str:
        raise NotImplementedError

    def symbol_table(self) -> dict:
        """Names resolvable in ring expressions, mapped to elements."""
        raise NotImplementedError

    # -- conveniences --------------------------------------------------------

    def identity(self) -> "GroupElement":
        return GroupElement(self, self.identity_key())

    def element(self, key) -> "GroupElement":
        self.validate_key(key)
        return GroupElement(self, key)

    def __str__(self) -> str:
        return self.short_str()


@dataclass(frozen=True)
class GroupElement:
    """A canonical-form element of one group model.

    Equality and hashing go through the canonical form, so elements can key
    dictionaries and sets.  ``g1 * g2`` multiplies, ``g ** n`` powers,
    ``g.inverse()`` (or ``~g``) inverts.  Mixing elements of different specs
    raises ValueError.  Adding or subtracting elements and integers lifts
    into the group ring (see ``zdring.ring``).
    """

    spec: GroupSpec
    key: object

    def __mul__(self, other):
        if isinstance(other, GroupElement):
            if self.spec != other.spec:
                raise ValueError("cannot multiply elements of different groups")
            return GroupElement(self.spec, self.spec.mul_keys(self.key, other.key))
        if isinstance(other, int):
            from .ring import RingElement

            return RingElement.monomial(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            from .ring import RingElement

            return RingElement.monomial(self, other)
        return NotImplemented

    def inverse(self) -> "GroupElement":
        return GroupElement(self.spec, self.spec.inv_key(self.key))

    def __invert__(self) -> "GroupElement":
        return self.inverse()

    def __pow__(self, n: int) -> "GroupElement":
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = self.spec.identity()
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # lifting into the group ring: 1 - a, a + b, -a, ...

    def __add__(self, other):
        from .ring import RingElement

        return RingElement.monomial(self, 1) + other

    def __radd__(self, other):
        from .ring import RingElement

        return RingElement.monomial(self, 1) + other

    def __sub__(self, other):
        from .ring import RingElement

        return RingElement.monomial(self, 1) - other

    def __rsub__(self, other):
        from .ring import RingElement

        return -RingElement.monomial(self, 1) + other

    def __neg__(self):
        from .ring import RingElement

        return RingElement.monomial(self, -1)

    def is_identity(self) -> bool:
        return self.key == self.spec.identity_key()

    def order(self) -> Optional[int]:
        """Least s >= 1 with self**s = identity, or None when infinite."""
        return self.spec.order_of_key(self.key)

    def length(self) -> int:
        return self.spec.length_key(self.key)

    def sort_key(self):
        """Total order used by enumeration, printing, and search tie-breaks."""
        return (self.spec.length_key(self.key), self.spec.lex_key(self.key))

    def conjugate_by(self, g: "GroupElement") -> "GroupElement":
        """g * self * g^-1."""
        return g * self * g.inverse()

    def __str__(self) -> str:
        return self.spec.key_str(self.key)

    def __repr__(self) -> str:
        return f"<{self} in {self.spec.short_str()}>"


def commutator(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """g1 g2 g1^-1 g2^-1 in canonical form."""
    return g1 * g2 * g1.inverse() * g2.inverse()


# ---------------------------------------------------------------------------
# free groups


@dataclass(frozen=True)
class FreeGroupSpec(GroupSpec):
    """Free group of rank m >= 1; keys are tuples of (generator, exponent)
    syllables with nonzero exponents and distinct adjacent generators."""

    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"free group rank must be >= 1, got {self.rank}")

    def identity_key(self):
        return ()

    def generator(self, i: int) -> GroupElement:
        """The i-th generator, 1-based (printed as ``a{i}``)."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"generator index {i} out of range 1..{self.rank}")
        return GroupElement(self, ((i - 1, 1),))

    def generators(self) -> tuple:
        return tuple(self.generator(i) for i in range(1, self.rank + 1))

    def mul_keys(self, k1, k2):
        out = list(k1)
        for g, e in k2:
            if out and out[-1][0] == g:
                e2 = out[-1][1] + e
                out.pop()
                if e2 != 0:
                    out.append((g, e2))
            else:
                out.append((g, e))
        return tuple(out)

    def inv_key(self, k):
        return tuple((g, -e) for g, e in reversed(k))

    def order_of_key(self, k):
        return 1 if k == () else None

    def length_key(self, k):
        return sum(abs(e) for _, e in k)

    def lex_key(self, k):
        letters = []
        for g, e in k:
            letters.extend([(g, 0 if e > 0 else 1)] * abs(e))
        return tuple(letters)

    def validate_key(self, k):
        if not isinstance(k, tuple):
            raise ValueError("free-group key must be a tuple of syllables")
        for idx, (g, e) in enumerate(k):
            if not (0 <= g < self.rank) or e == 0:
                raise ValueError(f"bad syllable {(g, e)}")
            if idx and k[idx - 1][0] == g:
                raise ValueError("word is not freely reduced")

    @property
    def is_finite(self):
        return False

    def _bounded_keys(self, bound):
        yield ()
        letters = [(g, s) for g in range(self.rank) for s in (1, -1)]
        for length in range(1, bound + 1):
            batch = []

            def extend(word, remaining):
                if remaining == 0:
                    batch.append(self.mul_keys((), tuple(word)))
                    return
                for g, s in letters:
                    if word and word[-1][0] == g and word[-1][1] != s:
                        continue
                    word.append((g, s))
                    extend(word, remaining - 1)
                    word.pop()

            extend([], length)
            batch.sort(key=self.lex_key)
            yield from batch

    def short_str(self):
        return f"free:{self.rank}"

    def symbol_table(self):
        return {f"a{i}": self.generator(i) for i in range(1, self.rank + 1)}

    def key_str(self, k):
        if not k:
            return "1"
        return "*".join(f"a{g + 1}" + (f"^{e}" if e != 1 else "") for g, e in k)


# ---------------------------------------------------------------------------
# finite cyclic groups


@dataclass(frozen=True)
class CyclicGroupSpec(GroupSpec):
    """Cyclic group of order q >= 2; keys are exponents in [0, q)."""

    order: int

    def __post_init__(self):
        if self.order < 2:
            raise ValueError(f"cyclic order must be >= 2, got {self.order}")

    def identity_key(self):
        return 0

    def generator(self) -> GroupElement:
        return GroupElement(self, 1)

    def mul_keys(self, k1, k2):
        return (k1 + k2) % self.order

    def inv_key(self, k):
        return (-k) % self.order

    def order_of_key(self, k):
        return self.order // gcd(k, self.order)

    def length_key(self, k):
        return min(k, self.order - k)

    def lex_key(self, k):
        return (k,)

    def validate_key(self, k):
        if not isinstance(k, int) or not 0 <= k < self.order:
            raise ValueError(f"cyclic key {k!r} out of range")

    @property
    def is_finite(self):
        return True

    def group_order(self):
        return self.order

    def _all_keys(self):
        return iter(sorted(range(self.order), key=lambda k: (self.length_key(k), k)))

    def short_str(self):
        return f"cyclic:{self.order}"

    def symbol_table(self):
        return {"a": self.generator()}

    def key_str(self, k):
        if k == 0:
            return "1"
        return "a" if k == 1 else f"a^{k}"


# ---------------------------------------------------------------------------
# free products of two cyclic groups


@dataclass(frozen=True)
class FreeProductSpec(GroupSpec):
    """Free product ``C_q * C_r``; ``right_order=None`` means r is infinite.

    Keys are tuples of (factor, exponent) syllables, factors strictly
    alternating between 0 (the order-q generator ``a``) and 1 (``b``).
    Finite-factor exponents are stored in [1, order-1]; infinite-factor
    exponents are arbitrary nonzero integers.
    """

    left_order: int
    right_order: Optional[int]

    def __post_init__(self):
        if self.left_order < 2:
            raise ValueError(f"left factor order must be >= 2, got {self.left_order}")
        if self.right_order is not None and self.right_order < 2:
            raise ValueError(f"right factor order must be >= 2, got {self.right_order}")

    def factor_order(self, factor: int) -> Optional[int]:
        return self.left_order if factor == 0 else self.right_order

    def identity_key(self):
        return ()

    def generator(self, factor: int) -> GroupElement:
        if factor not in (0, 1):
            raise ValueError("factor must be 0 (a) or 1 (b)")
        return GroupElement(self, ((factor, 1),))

    def _norm_exp(self, factor, e):
        order = self.factor_order(factor)
        return e % order if order is not None else e

    def syllable(self, factor: int, exponent: int) -> GroupElement:
        e = self._norm_exp(factor, exponent)
        return GroupElement(self, ((factor, e),) if e else ())

    def mul_keys(self, k1, k2):
        out = list(k1)
        for f, e in k2:
            if out and out[-1][0] == f:
                e2 = self._norm_exp(f, out[-1][1] + e)
                out.pop()
                if e2 != 0:
                    out.append((f, e2))
            else:
                out.append((f, e))
        return tuple(out)

    def inv_key(self, k):
        return tuple((f, self._norm_exp(f, -e)) for f, e in reversed(k))

    def cyclically_reduce(self, k):
        """Return (w, core) with k = w * core * w^-1 and core cyclically
        reduced (its first and last syllables lie in different factors)."""
        w = ()
        core = k
        while len(core) >= 2 and core[0][0] == core[-1][0]:
            head = (core[0],)
            w = self.mul_keys(w, head)
            core = self.mul_keys(self.mul_keys(self.inv_key(head), core), head)
        return w, core

    def order_of_key(self, k):
        _, core = self.cyclically_reduce(k)
        if not core:
            return 1
        if len(core) == 1:
            f, e = core[0]
            order = self.factor_order(f)
            return order // gcd(e, order) if order is not None else None
        return None

    def _syllable_length(self, f, e):
        order = self.factor_order(f)
        return min(e, order - e) if order is not None else abs(e)

    def length_key(self, k):
        return sum(self._syllable_length(f, e) for f, e in k)

    def lex_key(self, k):
        out = []
        for f, e in k:
            order = self.factor_order(f)
            if order is not None:
                out.append((f, self._syllable_length(f, e), 0 if e <= order - e else 1))
            else:
                out.append((f, abs(e), 0 if e > 0 else 1))
        return tuple(out)

    def validate_key(self, k):
        if not isinstance(k, tuple):
            raise ValueError("free-product key must be a tuple of syllables")
        for idx, (f, e) in enumerate(k):
            if f not in (0, 1):
                raise ValueError(f"bad factor tag {f}")
            order = self.factor_order(f)
            if order is not None and not 1 <= e < order:
                raise ValueError(f"exponent {e} out of range for factor of order {order}")
            if order is None and e == 0:
                raise ValueError("zero syllable")
            if idx and k[idx - 1][0] == f:
                raise ValueError("syllables do not alternate")

    @property
    def is_finite(self):
        return False

    def _exponents_of_length(self, f, length):
        order = self.factor_order(f)
        if order is not None:
            if length > order - length:
                return []
            return [length] if length == order - length else [length, order - length]
        return [length, -length]

    def _bounded_keys(self, bound):
        yield ()
        for length in range(1, bound + 1):
            batch = []

            def extend(sylls, remaining):
                if remaining == 0:
                    batch.append(tuple(sylls))
                    return
                for f in (0, 1):
                    if sylls and sylls[-1][0] == f:
                        continue
                    for part in range(1, remaining + 1):
                        for e in self._exponents_of_length(f, part):
                            sylls.append((f, e))
                            extend(sylls, remaining - part)
                            sylls.pop()

            extend([], length)
            batch.sort(key=self.lex_key)
            yield from batch

    def short_str(self):
        r = "inf" if self.right_order is None else str(self.right_order)
        return f"freeprod:{self.left_order},{r}"

    def symbol_table(self):
        a, b = self.generator(0), self.generator(1)
        return {"a": a, "b": b, "a1": a, "a2": b}

    def key_str(self, k):
        if not k:
            return "1"
        names = ("a", "b")
        return "*".join(f"{names[f]}" + (f"^{e}" if e != 1 else "") for f, e in k)


# ---------------------------------------------------------------------------
# the class-2 exponent-n model


@dataclass(frozen=True)
class Nil2Spec(GroupSpec):
    """Two-generator class-2 group with normal form a^i b^j c^k mod n.

    c = a b a^-1 b^-1 is central and the multiplication law is

        (i1, j1, k1) * (i2, j2, k2) = (i1+i2, j1+j2, k1+k2 - i2*j1)  mod n,

    derived from b a = a b c^-1 and validated against the unitriangular
    matrix model in the test suite.  For odd n every element has order
    dividing n; for even n the exponent of the model is 2n.
    """

    exponent: int

    def __post_init__(self):
        if self.exponent < 2:
            raise ValueError(f"exponent must be >= 2, got {self.exponent}")

    def identity_key(self):
        return (0, 0, 0)

    def gen_a(self) -> GroupElement:
        return GroupElement(self, (1, 0, 0))

    def gen_b(self) -> GroupElement:
        return GroupElement(self, (0, 1, 0))

    def gen_c(self) -> GroupElement:
        return GroupElement(self, (0, 0, 1))

    def mul_keys(self, k1, k2):
        n = self.exponent
        i1, j1, x1 = k1
        i2, j2, x2 = k2
        return ((i1 + i2) % n, (j1 + j2) % n, (x1 + x2 - i2 * j1) % n)

    def inv_key(self, k):
        n = self.exponent
        i, j, x = k
        return ((-i) % n, (-j) % n, (-x - i * j) % n)

    def order_of_key(self, k):
        power = k
        s = 1
        while power != (0, 0, 0):
            power = self.mul_keys(power, k)
            s += 1
        return s

    def length_key(self, k):
        n = self.exponent
        return sum(min(v, n - v) for v in k)

    def lex_key(self, k):
        return k

    def validate_key(self, k):
        if (
            not isinstance(k, tuple)
            or len(k) != 3
            or not all(isinstance(v, int) and 0 <= v < self.exponent for v in k)
        ):
            raise ValueError(f"bad normal-form triple {k!r}")

    @property
    def is_finite(self):
        return True

    def group_order(self):
        return self.exponent**3

    def _all_keys(self):
        n = self.exponent
        keys = list(itertools.product(range(n), repeat=3))
        keys.sort(key=lambda k: (self.length_key(k), k))
        return iter(keys)

    def short_str(self):
        return f"nil2:{self.exponent}"

    def symbol_table(self):
        a, b, c = self.gen_a(), self.gen_b(), self.gen_c()
        return {"a": a, "b": b, "c": c, "a1": a, "a2": b}

    def key_str(self, k):
        parts = [
            f"{name}" + (f"^{v}" if v != 1 else "")
            for name, v in zip("abc", k)
            if v != 0
        ]
        return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# finite groups by multiplication table


@dataclass(frozen=True)
class FiniteTableSpec(GroupSpec):
    """Finite group given by element names and a q x q multiplication table.

    ``table[i][j]`` is the index of the product of elements i and j; index 0
    must be the identity.  The table is checked to be a Latin square with a
    two-sided identity and an associative law, which together make it a
    group.  ``label`` is used for display only (e.g. the source file path).
    """

    names: tuple
    table: tuple
    label: str = field(default="", compare=False)

    def __post_init__(self):
        q = len(self.names)
        if q == 0:
            raise ValueError("empty table")
        if len(set(self.names)) != q:
            raise ValueError("element names must be distinct")
        for name in self.names:
            if not _NAME_RE.match(name):
                raise ValueError(
                    f"element name {name!r} is not a valid identifier "
                    "(needed by the expression grammar)"
                )
        if len(self.table) != q or any(len(row) != q for row in self.table):
            raise ValueError("table must be q x q")
        rng = range(q)
        for row in self.table:
            if sorted(row) != list(rng):
                raise ValueError("table rows must permute the elements")
        for j in rng:
            if sorted(self.table[i][j] for i in rng) != list(rng):
                raise ValueError("table columns must permute the elements")
        for i in rng:
            if self.table[0][i] != i or self.table[i][0] != i:
                raise ValueError("first element must be a two-sided identity")
        t = self.table
        for i in rng:
            for j in rng:
                tij = t[i][j]
                for k in rng:
                    if t[tij][k] != t[i][t[j][k]]:
                        raise ValueError(
                            f"table is not associative at "
                            f"({self.names[i]}, {self.names[j]}, {self.names[k]})"
                        )

    def identity_key(self):
        return 0

    def element_by_name(self, name: str) -> GroupElement:
        try:
            return GroupElement(self, self.names.index(name))
        except ValueError:
            raise ValueError(f"unknown element name {name!r}") from None

    def mul_keys(self, k1, k2):
        return self.table[k1][k2]

    def inv_key(self, k):
        return self.table[k].index(0)

    def order_of_key(self, k):
        power = k
        s = 1
        while power != 0:
            power = self.table[power][k]
            s += 1
        return s

    def length_key(self, k):
        return 0 if k == 0 else 1

    def lex_key(self, k):
        return (k,)

    def validate_key(self, k):
        if not isinstance(k, int) or not 0 <= k < len(self.names):
            raise ValueError(f"table index {k!r} out of range")

    @property
    def is_finite(self):
        return True

    def group_order(self):
        return len(self.names)

    def _all_keys(self):
        return iter(range(len(self.names)))

    def short_str(self):
        return f"table:{self.label or ','.join(self.names)}"

    def symbol_table(self):
        return {name: GroupElement(self, i) for i, name in enumerate(self.names)}

    def key_str(self, k):
        return "1" if k == 0 else self.names[k]


def parse_table(text: str, label: str = "") -> FiniteTableSpec:
    """Parse the plain-text table format.

    Line 1 holds the group order q, line 2 the q element names (the first
    name is the identity), then q lines of q names each: row g, column h
    gives g*h.  Blank lines are ignored.
    """
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines or len(lines[0]) != 1:
        raise ValueError("first line must hold the group order")
    try:
        q = int(lines[0][0])
    except ValueError:
        raise ValueError(f"bad group order {lines[0][0]!r}") from None
    if q < 1:
        raise ValueError("group order must be positive")
    if len(lines) != q + 2:
        raise ValueError(f"expected {q + 2} nonblank lines, got {len(lines)}")
    names = tuple(lines[1])
    if len(names) != q:
        raise ValueError(f"expected {q} element names, got {len(names)}")
    index = {name: i for i, name in enumerate(names)}
    rows = []
    for line in lines[2:]:
        if len(line) != q:
            raise ValueError(f"table row has {len(line)} entries, expected {q}")
        try:
            rows.append(tuple(index[name] for name in line))
        except KeyError as exc:
            raise ValueError(f"unknown element name {exc.args[0]!r} in table") from None
    return FiniteTableSpec(names=names, table=tuple(rows), label=label)


def load_table(path) -> FiniteTableSpec:
    """Load a multiplication-table group from a file (see ``parse_table``)."""
    p = Path(path)
    return parse_table(p.read_text(), label=str(path))


# ---------------------------------------------------------------------------
# enumeration


def enumerate_elements(
    spec: GroupSpec, length_bound: Optional[int] = None
) -> Iterator[GroupElement]:
    """Stream each element exactly once in canonical form.

    Finite models yield the whole group; infinite models require a finite
    ``length_bound`` and yield all elements of length <= bound.  Order is
    nondecreasing length with a fixed lexicographic tie-break, so searches
    that take the first hit are reproducible.
    """
    if spec.is_finite:
        keys = spec._all_keys()
    else:
        if length_bound is None:
            raise ValueError(f"{spec.short_str()} is infinite: a length bound is required")
        keys = spec._bounded_keys(length_bound)
    for k in keys:
        yield GroupElement(spec, k)


# ---------------------------------------------------------------------------
# cyclic subgroups and bounded antinormality


@dataclass(frozen=True)
class CyclicSubgroup:
    """A generator together with its true order (None when infinite)."""

    generator: GroupElement
    order: Optional[int]

    def __post_init__(self):
        true_order = self.generator.order()
        if true_order != self.order:
            raise ValueError(
                f"stored order {self.order} does not match the true order {true_order}"
            )

    @classmethod
    def generated_by(cls, g: GroupElement) -> "CyclicSubgroup":
        return cls(generator=g, order=g.order())

    @property
    def spec(self) -> GroupSpec:
        return self.generator.spec

    def elements(self) -> tuple:
        """All members; defined only when the subgroup is finite."""
        if self.order is None:
            raise ValueError("subgroup is infinite")
        out = []
        g = self.spec.identity()
        for _ in range(self.order):
            out.append(g)
            g = g * self.generator
        return tuple(out)

    def contains(self, x: GroupElement) -> bool:
        """Exact membership test, decidable in every model."""
        if x.spec != self.spec:
            raise ValueError("element from a different group")
        if self.order is not None:
            return x in set(self.elements())
        return self._contains_infinite(x)

    def _contains_infinite(self, x):
        # Infinite cyclic subgroups only arise in the free and free-product
        # models.  Conjugate away the common part: h = w h0 w^-1 with h0
        # cyclically reduced, then x = h^k iff w^-1 x w = h0^k, and k is
        # pinned by the additive length of powers of a cyclically reduced
        # core.
        spec = self.spec
        h = self.generator
        if isinstance(spec, FreeProductSpec):
            w_key, core_key = spec.cyclically_reduce(h.key)
            w = GroupElement(spec, w_key)
            core = GroupElement(spec, core_key)
        elif isinstance(spec, FreeGroupSpec):
            w, core = _free_cyclic_reduce(h)
        else:  # pragma: no cover - finite models never reach here
            raise AssertionError("infinite cyclic subgroup in a finite model")
        y = w.inverse() * x * w
        if y.is_identity():
            return True
        core_len = core.length()
        k, rem = divmod(y.length(), core_len)
        if rem != 0 or k == 0:
            return False
        return core**k == y or core**-k == y


def _free_cyclic_reduce(g: GroupElement):
    """Free-group analogue of syllable cyclic reduction: g = w * core * w^-1."""
    spec = g.spec
    w = spec.identity()
    core = g
    while True:
        k = core.key
        if len(k) < 2:
            break
        (g0, e0), (g1, e1) = k[0], k[-1]
        if g0 != g1 or (e0 > 0) == (e1 > 0):
            break
        head = GroupElement(spec, ((g0, 1 if e0 > 0 else -1),))
        w = w * head
        core = head.inverse() * core * head
    return w, core


@dataclass(frozen=True)
class AntinormalityReport:
    """Outcome of a bounded antinormality check of K = <h>.

    ``witness`` is a conjugator g with g K g^-1 meeting K nontrivially while
    g lies outside K, or None if none was found.  ``exhaustive`` is True when
    every group element was checked (finite ambient groups)."""

    subgroup: CyclicSubgroup
    bound: Optional[int]
    conjugators_checked: int
    exhaustive: bool
    witness: Optional[GroupElement]

    @property
    def ok(self) -> bool:
        return self.witness is None


def is_antinormal_bounded(
    K: CyclicSubgroup, conjugator_bound: Optional[int] = None
) -> AntinormalityReport:
    """Search for a violation of antinormality of K among bounded conjugators.

    For finite ambient groups every conjugator is checked and the verdict is
    exhaustive; otherwise all elements of length <= conjugator_bound are
    tried.  For an infinite K the conjugated powers h^i are additionally
    capped at the same bound, so a clean verdict is only
    no-violation-within-bound.
    """
    spec = K.spec
    if spec.is_finite:
        candidates = enumerate_elements(spec)
        exhaustive = True
    else:
        if conjugator_bound is None:
            raise ValueError("infinite group: a conjugator bound is required")
        candidates = enumerate_elements(spec, conjugator_bound)
        exhaustive = False

    if K.order is not None:
        powers = [p for p in K.elements() if not p.is_identity()]
    else:
        cap = conjugator_bound or 1
        powers = [K.generator**i for i in range(1, cap + 1)]

    checked = 0
    for g in candidates:
        if K.contains(g):
            continue
        checked += 1
        for p in powers:
            if K.contains(g * p * g.inverse()):
                return AntinormalityReport(
                    subgroup=K,
                    bound=conjugator_bound,
                    conjugators_checked=checked,
                    exhaustive=exhaustive,
                    witness=g,
                )
    return AntinormalityReport(
        subgroup=K,
        bound=conjugator_bound,
        conjugators_checked=checked,
        exhaustive=exhaustive,
        witness=None,
    )
