"""Exact average number of concepts of a random context.

The average over the (n, p, q) model is a finite sum indexed by the
length-4 compositions (a, b, c, d) of n:

    multinomial(n; a, b, c, d)
      * p**(a+c) * (1-p)**(b+d)
      * q**(a*b) * (1 - q**a)**d * (1 - q**b)**c

with the convention x**0 = 1 throughout, so exponent-0 factors never zero
a term even at p, q in {0, 1}. The blocks have a direct reading: a objects
and b attributes form the candidate concept, c objects each miss one of
the b attributes, d attributes are each missed by one of the a objects.

Terms span many orders of magnitude, so the sum is accumulated in log
space (multinomials via log-gamma, the (1 - q**a) factors via expm1/log1p)
and the term count is only C(n+3, 3), so nothing is truncated. Two
independent checks are provided: an exact-rational evaluation for rational
p, q, and a brute-force oracle that integrates the concept count over the
entire sample space (guarded to n <= 5).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .context import count_concepts
from .errors import InputError, SizeError
from .logspace import LogSumExp, LogValue, log_one_minus_pow
from .model import ModelParams, context_log_probability, enumerate_sample_space

MAX_BRUTEFORCE_N = 5
MAX_EXACT_N = 64


@dataclass(frozen=True)
class Composition4:
    """An ordered 4-tuple of nonnegative integers (a, b, c, d)."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        for part in (self.a, self.b, self.c, self.d):
            if part < 0:
                raise InputError(f"composition parts must be >= 0, got {self}")

    @property
    def total(self) -> int:
        return self.a + self.b + self.c + self.d


@dataclass(frozen=True)
class ExpectationReport:
    """Result of evaluating the average-concept-count sum."""

    params: ModelParams
    log_value: LogValue
    value: float
    terms_evaluated: int
    terms_skipped_zero: int


def composition_count(n: int) -> int:
    """Number of length-4 compositions of n: C(n+3, 3)."""
    return math.comb(n + 3, 3)


def composition_iter(n: int) -> Iterator[Composition4]:
    """All length-4 compositions of n, lexicographic in (a, b, c)."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")

    def generate() -> Iterator[Composition4]:
        for a in range(n + 1):
            for b in range(n - a + 1):
                for c in range(n - a - b + 1):
                    yield Composition4(a, b, c, n - a - b - c)

    return generate()


def log_term(params: ModelParams, comp: Composition4) -> LogValue:
    """Log of one summand of the average-concept-count sum.

    Zero state as soon as any factor with positive exponent is 0; in
    particular (1 - q**a)**d is zero for d > 0 with a == 0 (since q**0 is
    1), and likewise for the c-factor with b == 0.
    """
    if comp.total != params.n:
        raise InputError(
            f"composition {comp} sums to {comp.total}, expected n = {params.n}"
        )
    a, b, c, d = comp.a, comp.b, comp.c, comp.d
    p, q = params.p, params.q
    total = (
        math.lgamma(params.n + 1)
        - math.lgamma(a + 1)
        - math.lgamma(b + 1)
        - math.lgamma(c + 1)
        - math.lgamma(d + 1)
    )
    if a + c:
        if p == 0.0:
            return LogValue.zero()
        total += (a + c) * math.log(p)
    if b + d:
        if p == 1.0:
            return LogValue.zero()
        total += (b + d) * math.log1p(-p)
    if a and b:
        if q == 0.0:
            return LogValue.zero()
        total += a * b * math.log(q)
    if d:
        factor = log_one_minus_pow(q, a)
        if factor == float("-inf"):
            return LogValue.zero()
        total += d * factor
    if c:
        factor = log_one_minus_pow(q, b)
        if factor == float("-inf"):
            return LogValue.zero()
        total += c * factor
    return LogValue.from_log(total)


def expected_concepts(params: ModelParams) -> ExpectationReport:
    """Average number of concepts under the (n, p, q) model, evaluated exactly.

    Streams all C(n+3, 3) terms through a log-sum-exp accumulator; no
    cutoff is applied. The cubic term count makes this practical up to n
    in the few hundreds.
    """
    accumulator = LogSumExp()
    evaluated = 0
    skipped = 0
    for comp in composition_iter(params.n):
        term = log_term(params, comp)
        if term.is_zero:
            skipped += 1
        else:
            evaluated += 1
            accumulator.add(term.log)
    log_value = accumulator.result()
    return ExpectationReport(
        params=params,
        log_value=log_value,
        value=log_value.exp(),
        terms_evaluated=evaluated,
        terms_skipped_zero=skipped,
    )


def expected_concepts_exact(n: int, p: Fraction, q: Fraction) -> Fraction:
    """Exact rational value of the average, for rational p and q.

    Used to calibrate the float path; arbitrary-precision arithmetic keeps
    this honest but slow, hence the n guard.
    """
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if n > MAX_EXACT_N:
        raise SizeError(f"exact evaluation supports n <= {MAX_EXACT_N}, got {n}")
    p = Fraction(p)
    q = Fraction(q)
    if not 0 <= p <= 1:
        raise InputError(f"p must be in [0, 1], got {p}")
    if not 0 <= q <= 1:
        raise InputError(f"q must be in [0, 1], got {q}")
    total = Fraction(0)
    for comp in composition_iter(n):
        a, b, c, d = comp.a, comp.b, comp.c, comp.d
        multinomial = math.factorial(n) // (
            math.factorial(a) * math.factorial(b) * math.factorial(c) * math.factorial(d)
        )
        total += (
            multinomial
            * p ** (a + c)
            * (1 - p) ** (b + d)
            * q ** (a * b)
            * (1 - q**a) ** d
            * (1 - q**b) ** c
        )
    return total


def expected_concepts_bruteforce(params: ModelParams) -> float:
    """Average via direct integration: sum of count * probability over all contexts.

    Independent of the composition-sum formula; exponentially expensive.
    """
    if params.n > MAX_BRUTEFORCE_N:
        raise SizeError(
            f"brute-force averaging supports n <= {MAX_BRUTEFORCE_N}, got {params.n}"
        )
    return math.fsum(
        count_concepts(ctx) * context_log_probability(params, ctx).exp()
        for ctx in enumerate_sample_space(params.n)
    )
