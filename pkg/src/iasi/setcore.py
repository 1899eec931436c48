"""Set algebra over finite sets of non-negative integers.

The kernel type is IntSet, a bit-vector backed set bounded by a configurable
universe bound. Sumsets are computed by shift-or accumulation: for each
element a of A, OR in the bits of B shifted left by a. On top of the sumset
sit the compatibility-class constructions: the pairs (a, b) of A x B grouped
by their sum, the number of such groups (the compatibility index), and the
neglecting number |A||B| minus that count.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BoundExceededError, EmptySetError, ParseError

DEFAULT_UNIVERSE_BOUND = 4096

_SET_LITERAL_RE = re.compile(r"^\{(.*)\}$")


class IntSet:
    """Immutable set of distinct non-negative integers, each <= universe_bound.

    Equality and hashing consider only the elements; the universe bound is
    operational metadata and does not distinguish otherwise equal sets.
    """

    __slots__ = ("_bits", "_elements", "universe_bound")

    def __init__(self, elements: Iterable[int] = (), universe_bound: int = DEFAULT_UNIVERSE_BOUND):
        if universe_bound < 0:
            raise ValueError(f"universe bound must be non-negative, got {universe_bound}")
        bits = 0
        for x in elements:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"IntSet elements must be integers, got {x!r}")
            if x < 0:
                raise ValueError(f"IntSet elements must be non-negative, got {x}")
            if x > universe_bound:
                raise BoundExceededError(f"element {x} exceeds universe bound {universe_bound}")
            bits |= 1 << x
        object.__setattr__(self, "_bits", bits)
        object.__setattr__(self, "_elements", _bits_to_tuple(bits))
        object.__setattr__(self, "universe_bound", universe_bound)

    @classmethod
    def _from_bits(cls, bits: int, universe_bound: int) -> "IntSet":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_bits", bits)
        object.__setattr__(obj, "_elements", _bits_to_tuple(bits))
        object.__setattr__(obj, "universe_bound", universe_bound)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("IntSet is immutable")

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def elements(self) -> tuple[int, ...]:
        return self._elements

    def __iter__(self) -> Iterator[int]:
        return iter(self._elements)

    def __len__(self) -> int:
        return len(self._elements)

    def __contains__(self, x: int) -> bool:
        return x >= 0 and (self._bits >> x) & 1 == 1

    def __bool__(self) -> bool:
        return self._bits != 0

    def min(self) -> int:
        if not self._elements:
            raise EmptySetError("min of empty set")
        return self._elements[0]

    def max(self) -> int:
        if not self._elements:
            raise EmptySetError("max of empty set")
        return self._elements[-1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntSet):
            return NotImplemented
        return self._bits == other._bits

    def __hash__(self) -> int:
        return hash(self._bits)

    def __add__(self, other: "IntSet") -> "IntSet":
        return sumset(self, other)

    def to_literal(self) -> str:
        return "{" + ",".join(str(x) for x in self._elements) + "}"

    def __str__(self) -> str:
        return self.to_literal()

    def __repr__(self) -> str:
        return f"IntSet({self.to_literal()})"


def _bits_to_tuple(bits: int) -> tuple[int, ...]:
    out = []
    x = bits
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return tuple(out)


def parse_int_set(text: str, universe_bound: int = DEFAULT_UNIVERSE_BOUND) -> IntSet:
    """Parse a set literal like ``{1,2,3}``.

    Elements must be distinct decimal integers in ascending order; spaces are
    tolerated anywhere. Empty literals are rejected (labels are non-empty).
    """
    compact = text.strip()
    m = _SET_LITERAL_RE.match(compact)
    if m is None:
        raise ParseError(f"not a set literal: {text!r}")
    body = m.group(1).strip()
    if not body:
        raise ParseError(f"empty set literal: {text!r}")
    values = []
    for part in body.split(","):
        part = part.strip()
        if not re.fullmatch(r"\d+", part):
            raise ParseError(f"bad set element {part!r} in {text!r}")
        values.append(int(part))
    for prev, cur in zip(values, values[1:]):
        if cur <= prev:
            raise ParseError(f"set elements must be ascending and distinct: {text!r}")
    return IntSet(values, universe_bound)


def _require_nonempty(*sets: IntSet) -> None:
    for s in sets:
        if len(s) == 0:
            raise EmptySetError("operation requires non-empty sets")


def sumset(a: IntSet, b: IntSet) -> IntSet:
    """Return {x + y : x in a, y in b}.

    Raises BoundExceededError when the largest sum would exceed the (smaller
    of the two) universe bounds: overflow is rejected, never truncated.
    """
    _require_nonempty(a, b)
    bound = min(a.universe_bound, b.universe_bound)
    if a.max() + b.max() > bound:
        raise BoundExceededError(
            f"sum {a.max()} + {b.max()} exceeds universe bound {bound}"
        )
    bits = 0
    for x in a:
        bits |= b.bits << x
    return IntSet._from_bits(bits, bound)


@dataclass(frozen=True, eq=True)
class CompatibilityTable:
    """The pairs of A x B partitioned by their sum.

    ``classes`` maps each attainable sum k to the list of pairs (a, b) with
    a + b = k, keys ascending, pairs within a class ascending by first
    coordinate. The classes partition A x B.
    """

    left: IntSet
    right: IntSet
    classes: dict[int, list[tuple[int, int]]]

    @property
    def index(self) -> int:
        return len(self.classes)

    def class_sizes(self) -> list[int]:
        return [len(pairs) for pairs in self.classes.values()]

    def pair_count(self) -> int:
        return len(self.left) * len(self.right)


def compatibility_table(a: IntSet, b: IntSet) -> CompatibilityTable:
    """Group the pairs of a x b by their sum."""
    _require_nonempty(a, b)
    classes: dict[int, list[tuple[int, int]]] = {}
    for x in a:
        for y in b:
            classes.setdefault(x + y, []).append((x, y))
    ordered = {k: sorted(classes[k]) for k in sorted(classes)}
    return CompatibilityTable(left=a, right=b, classes=ordered)


def compatibility_index(a: IntSet, b: IntSet) -> int:
    """Number of distinct sums attainable from a x b; equals |sumset(a, b)|."""
    _require_nonempty(a, b)
    return len(sumset(a, b))


def neglecting_number(a: IntSet, b: IntSet) -> int:
    """|a|*|b| minus the compatibility index.

    Counts, summed over the sum-classes, the members beyond each class's
    single representative.
    """
    _require_nonempty(a, b)
    return len(a) * len(b) - compatibility_index(a, b)


def max_class_size(a: IntSet, b: IntSet) -> int:
    """Size of the largest sum-class of a x b."""
    table = compatibility_table(a, b)
    return max(table.class_sizes())


def has_saturated_class(a: IntSet, b: IntSet) -> bool:
    """True iff some sum-class attains the ceiling min(|a|, |b|)."""
    return max_class_size(a, b) == min(len(a), len(b))
