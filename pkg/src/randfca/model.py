"""Random contexts over the universe {1, ..., n}.

Each universe element becomes an object with probability p (otherwise an
attribute), then each realized (object, attribute) pair is incident with
probability q, all draws independent. The probability of one specific
context (G, M, I) is therefore

    p**|G| * (1-p)**|M| * q**|I| * (1-q)**(|G|*|M| - |I|).

Determinism contract
--------------------
All randomness flows through SplitMix64 with the standard constants
(increment 0x9E3779B97F4A7C15, multipliers 0xBF58476D1CE4E5B9 and
0x94D049BB133111EB). Draws are consumed in a fixed order: one 64-bit word
per side assignment for elements 1..n, then one word per incidence pair in
row-major (object, attribute) order over the realized sides. A Bernoulli(p)
draw is true iff the word is below int(p * 2**64).

Sample k of a batch uses ``derive_seed(master, k)``, the (k+1)-th output of
the SplitMix64 stream seeded with the master seed, so batched results never
depend on how samples are scheduled across workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Union

from .context import FormalContext
from .errors import InputError, SizeError
from .logspace import LogValue

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX_MULT_1 = 0xBF58476D1CE4E5B9
_MIX_MULT_2 = 0x94D049BB133111EB

MAX_SAMPLE_SPACE_N = 6


@dataclass(frozen=True)
class Seed:
    """64-bit master seed; wider ints are reduced modulo 2**64."""

    master: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "master", int(self.master) & MASK64)


SeedLike = Union[Seed, int]


def _master_of(seed: SeedLike) -> int:
    if isinstance(seed, Seed):
        return seed.master
    return int(seed) & MASK64


def mix64(x: int) -> int:
    """SplitMix64 finalizer: a bijective 64-bit scrambler."""
    x &= MASK64
    x = ((x ^ (x >> 30)) * _MIX_MULT_1) & MASK64
    x = ((x ^ (x >> 27)) * _MIX_MULT_2) & MASK64
    return x ^ (x >> 31)


def derive_seed(master: SeedLike, index: int) -> int:
    """Seed for batch sample `index` (the SplitMix64 output at that offset)."""
    if index < 0:
        raise InputError(f"sample index must be >= 0, got {index}")
    m = _master_of(master)
    return mix64((m + GOLDEN_GAMMA * (index + 1)) & MASK64)


class _BitStream:
    """SplitMix64 output stream serving Bernoulli draws."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & MASK64

    def next_word(self) -> int:
        self._state = (self._state + GOLDEN_GAMMA) & MASK64
        return mix64(self._state)


def _threshold(p: float) -> int:
    # P(word < threshold) = p up to 1 ulp of p; exact at 0, 1 and dyadics.
    return int(p * 18446744073709551616.0)


@dataclass(frozen=True)
class ModelParams:
    """Model parameters: universe size n, object probability p, incidence probability q."""

    n: int
    p: float
    q: float

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"n must be a positive integer, got {self.n!r}")
        p = float(self.p)
        q = float(self.q)
        if not (math.isfinite(p) and 0.0 <= p <= 1.0):
            raise InputError(f"p must be in [0, 1], got {self.p!r}")
        if not (math.isfinite(q) and 0.0 <= q <= 1.0):
            raise InputError(f"q must be in [0, 1], got {self.q!r}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)


def sample_context(params: ModelParams, seed: SeedLike) -> FormalContext:
    """Draw one random context; a pure function of (params, seed).

    Element i keeps its universe label str(i); objects and attributes each
    appear in ascending universe order.
    """
    stream = _BitStream(_master_of(seed))
    p_threshold = _threshold(params.p)
    q_threshold = _threshold(params.q)
    is_object = [stream.next_word() < p_threshold for _ in range(params.n)]
    objects = tuple(str(i + 1) for i in range(params.n) if is_object[i])
    attributes = tuple(str(i + 1) for i in range(params.n) if not is_object[i])
    m = len(attributes)
    rows = []
    for _ in objects:
        mask = 0
        for j in range(m):
            if stream.next_word() < q_threshold:
                mask |= 1 << j
        rows.append(mask)
    return FormalContext.from_bit_rows(objects, attributes, rows)


def _check_universe_labels(ctx: FormalContext, n: int) -> None:
    labels = list(ctx.objects) + list(ctx.attributes)
    try:
        numbers = sorted(int(label) for label in labels)
    except ValueError:
        raise InputError(
            "context labels must be the integers 1..n, got non-numeric labels"
        ) from None
    if numbers != list(range(1, n + 1)):
        raise InputError(
            f"context labels must partition 1..{n}, got {sorted(labels)}"
        )


def context_log_probability(params: ModelParams, ctx: FormalContext) -> LogValue:
    """Log of the model probability of one specific context.

    Zero state when a factor with positive exponent vanishes (e.g. p == 1
    but the context has attributes). Factors with exponent 0 contribute 1
    regardless of the base.
    """
    _check_universe_labels(ctx, params.n)
    g = ctx.object_count
    m = ctx.attribute_count
    incident = ctx.incidence_count
    absent = g * m - incident
    total = 0.0
    for count, prob in (
        (g, params.p),
        (m, 1.0 - params.p),
        (incident, params.q),
        (absent, 1.0 - params.q),
    ):
        if count:
            if prob == 0.0:
                return LogValue.zero()
            total += count * math.log(prob)
    return LogValue.from_log(total)


def enumerate_sample_space(n: int) -> Iterator[FormalContext]:
    """Every context on the universe {1, ..., n}, exactly once.

    All 2**n side assignments, times all 2**(|G|*|M|) incidence relations;
    the count grows doubly exponentially, hence the small-n guard.
    """
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if n > MAX_SAMPLE_SPACE_N:
        raise SizeError(
            f"sample space enumeration supports n <= {MAX_SAMPLE_SPACE_N}, got {n}"
        )
    universe = [str(i) for i in range(1, n + 1)]

    def generate() -> Iterator[FormalContext]:
        for side in range(1 << n):
            objects = tuple(universe[i] for i in range(n) if side >> i & 1)
            attributes = tuple(universe[i] for i in range(n) if not side >> i & 1)
            g = len(objects)
            m = len(attributes)
            row_mask = (1 << m) - 1
            for inc in range(1 << (g * m)):
                rows = [inc >> (i * m) & row_mask for i in range(g)]
                yield FormalContext.from_bit_rows(objects, attributes, rows)

    return generate()
