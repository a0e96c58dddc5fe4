"""Finite formal contexts and their concepts.

A context is a finite bipartite incidence structure: a list of objects, a
list of attributes, and a boolean incidence matrix. Deriving a set of
objects yields the attributes they all share; deriving a set of attributes
yields the objects that have them all. A concept is a pair (extent,
intent) fixed by both derivations, i.e. a maximal rectangle of crosses in
the cross table (a maximal biclique of the bipartite incidence graph).

Empty derivations follow the ambient-set convention: the common attributes
of no objects are all attributes, and dually. This is what makes contexts
with an empty side have exactly one concept.

Incidence is packed into integer bit rows/columns, so derivation is a
word-wise AND. Two enumeration strategies are provided:

* ``close-by-one``: canonical depth-first generation; each closed extent
  is produced exactly once. The production enumerator.
* ``closure-scan``: checks all 2**|G| candidate extents for closedness.
  Exponential by construction, guarded to |G| <= 20; kept as an
  independent cross-check for the fancier algorithm.

All types are immutable after construction and safe to share across
threads; enumeration itself is single-threaded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InputError, SizeError

MAX_SCAN_OBJECTS = 20

ALGORITHMS = ("close-by-one", "closure-scan")
_ALGORITHM_ALIASES = {
    "close-by-one": "close-by-one",
    "cbo": "close-by-one",
    "closure-scan": "closure-scan",
    "scan": "closure-scan",
}


@dataclass(frozen=True)
class FormalContext:
    """An immutable (objects, attributes, incidence) triple.

    Labels are carried for presentation and file round-trips only; they
    never affect semantics. Equality is structural over (labels,
    incidence).
    """

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    incidence: tuple[tuple[bool, ...], ...]
    _rows: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _cols: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        objects = tuple(self.objects)
        attributes = tuple(self.attributes)
        incidence = tuple(tuple(bool(v) for v in row) for row in self.incidence)
        if len(set(objects)) != len(objects):
            raise InputError("object labels must be pairwise distinct")
        if len(set(attributes)) != len(attributes):
            raise InputError("attribute labels must be pairwise distinct")
        if len(incidence) != len(objects):
            raise InputError(
                f"incidence has {len(incidence)} rows, expected {len(objects)}"
            )
        m = len(attributes)
        for i, row in enumerate(incidence):
            if len(row) != m:
                raise InputError(
                    f"incidence row {i} has {len(row)} entries, expected {m}"
                )
        rows = tuple(
            sum(1 << j for j, v in enumerate(row) if v) for row in incidence
        )
        cols = tuple(
            sum(1 << i for i, r in enumerate(rows) if r >> j & 1) for j in range(m)
        )
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "attributes", attributes)
        object.__setattr__(self, "incidence", incidence)
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_cols", cols)

    @classmethod
    def from_bit_rows(
        cls,
        objects: Sequence[str],
        attributes: Sequence[str],
        rows: Sequence[int],
    ) -> "FormalContext":
        """Build a context from integer bit rows (bit j of row i = incidence)."""
        m = len(attributes)
        incidence = tuple(
            tuple(bool(r >> j & 1) for j in range(m)) for r in rows
        )
        return cls(tuple(objects), tuple(attributes), incidence)

    @property
    def object_count(self) -> int:
        return len(self.objects)

    @property
    def attribute_count(self) -> int:
        return len(self.attributes)

    @property
    def incidence_count(self) -> int:
        """Number of incident (object, attribute) pairs."""
        return sum(r.bit_count() for r in self._rows)

    def _full_extent(self) -> int:
        return (1 << len(self.objects)) - 1

    def _full_intent(self) -> int:
        return (1 << len(self.attributes)) - 1

    def _intent_of(self, extent_mask: int) -> int:
        """Attributes shared by every object in the mask (all if empty)."""
        result = self._full_intent()
        remaining = extent_mask
        while remaining:
            low = remaining & -remaining
            result &= self._rows[low.bit_length() - 1]
            remaining ^= low
        return result

    def _extent_of(self, intent_mask: int) -> int:
        """Objects having every attribute in the mask (all if empty)."""
        result = self._full_extent()
        remaining = intent_mask
        while remaining:
            low = remaining & -remaining
            result &= self._cols[low.bit_length() - 1]
            remaining ^= low
        return result


@dataclass(frozen=True)
class Concept:
    """An (extent, intent) pair of index sets, fixed by both derivations."""

    extent: frozenset[int]
    intent: frozenset[int]


def _indices_to_mask(indices: Iterable[int], size: int, kind: str) -> int:
    mask = 0
    for i in indices:
        if not 0 <= i < size:
            raise InputError(f"{kind} index {i} out of range [0, {size})")
        mask |= 1 << i
    return mask


def _mask_to_set(mask: int) -> frozenset[int]:
    result = []
    i = 0
    while mask:
        if mask & 1:
            result.append(i)
        mask >>= 1
        i += 1
    return frozenset(result)


def derive_objects(ctx: FormalContext, objects: Iterable[int]) -> frozenset[int]:
    """Attributes common to every object in the set (all of them if empty)."""
    mask = _indices_to_mask(objects, len(ctx.objects), "object")
    return _mask_to_set(ctx._intent_of(mask))


def derive_attributes(ctx: FormalContext, attributes: Iterable[int]) -> frozenset[int]:
    """Objects having every attribute in the set (all of them if empty)."""
    mask = _indices_to_mask(attributes, len(ctx.attributes), "attribute")
    return _mask_to_set(ctx._extent_of(mask))


def is_concept(
    ctx: FormalContext, objects: Iterable[int], attributes: Iterable[int]
) -> bool:
    """True iff deriving either side of the pair yields the other."""
    extent = _indices_to_mask(objects, len(ctx.objects), "object")
    intent = _indices_to_mask(attributes, len(ctx.attributes), "attribute")
    return ctx._intent_of(extent) == intent and ctx._extent_of(intent) == extent


def _close_by_one(ctx: FormalContext) -> Iterator[tuple[int, int]]:
    """Yield all (extent, intent) mask pairs, each exactly once.

    Depth-first canonical generation: from a closed extent, try adding each
    object above the branching point and keep the closure only when it
    introduces no object below that point.
    """
    n_objects = len(ctx.objects)
    intent0 = ctx._full_intent()
    extent0 = ctx._extent_of(intent0)
    intent0 = ctx._intent_of(extent0)

    def generate(extent: int, intent: int, start: int) -> Iterator[tuple[int, int]]:
        yield extent, intent
        for g in range(start, n_objects):
            if extent >> g & 1:
                continue
            new_intent = intent & ctx._rows[g]
            new_extent = ctx._extent_of(new_intent)
            below = (1 << g) - 1
            if (new_extent & below) == (extent & below):
                yield from generate(new_extent, new_intent, g + 1)

    return generate(extent0, intent0, 0)


def _closure_scan(ctx: FormalContext) -> Iterator[tuple[int, int]]:
    """Check every candidate extent for closedness. 2**|G| candidates."""
    n_objects = len(ctx.objects)
    if n_objects > MAX_SCAN_OBJECTS:
        raise SizeError(
            f"closure-scan supports at most {MAX_SCAN_OBJECTS} objects, got {n_objects}"
        )
    for extent in range(1 << n_objects):
        intent = ctx._intent_of(extent)
        if ctx._extent_of(intent) == extent:
            yield extent, intent


def enumerate_concepts(
    ctx: FormalContext, algorithm: str = "close-by-one"
) -> list[Concept]:
    """All concepts of the context, each exactly once.

    Output order is canonical: ascending by the extent bit pattern read as
    an integer (object 0 = least significant bit), so repeated runs and
    both algorithms produce identical lists.
    """
    try:
        name = _ALGORITHM_ALIASES[algorithm]
    except KeyError:
        raise InputError(
            f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}"
        ) from None
    pairs = _close_by_one(ctx) if name == "close-by-one" else _closure_scan(ctx)
    ordered = sorted(pairs)
    return [Concept(_mask_to_set(e), _mask_to_set(i)) for e, i in ordered]


def count_concepts(ctx: FormalContext) -> int:
    """Number of concepts; same traversal as close-by-one, no materialization."""
    return sum(1 for _ in _close_by_one(ctx))


def contranomial(k: int) -> FormalContext:
    """The k x k context with incidence everywhere except the diagonal.

    Has exactly 2**k concepts, the worst case for k objects.
    """
    if k < 1:
        raise InputError(f"contranomial size must be >= 1, got {k}")
    labels = tuple(str(i) for i in range(1, k + 1))
    full = (1 << k) - 1
    return FormalContext.from_bit_rows(
        labels, labels, [full ^ (1 << i) for i in range(k)]
    )


def empty_relation(g: int, m: int) -> FormalContext:
    """A g x m context with no incident pairs."""
    if g < 0 or m < 0:
        raise InputError(f"sizes must be >= 0, got ({g}, {m})")
    return FormalContext.from_bit_rows(
        tuple(f"g{i}" for i in range(1, g + 1)),
        tuple(f"m{j}" for j in range(1, m + 1)),
        [0] * g,
    )


def full_relation(g: int, m: int) -> FormalContext:
    """A g x m context where every pair is incident."""
    if g < 0 or m < 0:
        raise InputError(f"sizes must be >= 0, got ({g}, {m})")
    return FormalContext.from_bit_rows(
        tuple(f"g{i}" for i in range(1, g + 1)),
        tuple(f"m{j}" for j in range(1, m + 1)),
        [(1 << m) - 1] * g,
    )
