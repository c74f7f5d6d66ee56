"""Exact enumeration of offset words and the supporting multi-index arithmetic.

An offset word of order n with offset xi in Z^d is a string ww' over the
alphabet [1:d] of length 2n + ||xi||_1 whose two halves have Parikh vectors
differing by exactly xi.  Abelian squares are the xi = 0 case.  Counts are
obtained by summing products of multinomial coefficients over the weak
compositions of n into d parts; everything here is exact integer arithmetic.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

# Exact counts are plain Python integers (arbitrary precision).
BigCount = int

# below this many composition terms the process-pool overhead is not worth it
_PARALLEL_MIN_TERMS = 4096

# A Parikh vector is the tuple of character multiplicities over [1:d].
ParikhVector = tuple


class SignSplit(NamedTuple):
    """Componentwise positive/negative parts of an integer vector."""

    plus: tuple
    minus: tuple


@dataclass(frozen=True)
class OffsetVector:
    """An integer vector xi in Z^d labelling an offset class.

    Immutable; d >= 1 is enforced (there is no empty alphabet).
    """

    components: tuple

    def __post_init__(self):
        comps = tuple(int(c) for c in self.components)
        if len(comps) < 1:
            raise ValueError("offset vector must have dimension d >= 1")
        object.__setattr__(self, "components", comps)

    @property
    def d(self) -> int:
        return len(self.components)

    @property
    def one_norm(self) -> int:
        return sum(abs(c) for c in self.components)

    @property
    def total(self) -> int:
        return sum(self.components)

    def abs(self) -> tuple:
        return tuple(abs(c) for c in self.components)

    def is_constant(self) -> bool:
        return all(c == self.components[0] for c in self.components)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.components)

    def divisible_by(self, r: int) -> bool:
        return all(c % r == 0 for c in self.components)

    def __neg__(self) -> "OffsetVector":
        return OffsetVector(tuple(-c for c in self.components))

    def __mul__(self, k: int) -> "OffsetVector":
        return OffsetVector(tuple(k * c for c in self.components))

    __rmul__ = __mul__

    def scale_down(self, r: int) -> "OffsetVector":
        if not self.divisible_by(r):
            raise ValueError(f"{r} does not divide {self.components}")
        return OffsetVector(tuple(c // r for c in self.components))

    def __iter__(self):
        return iter(self.components)


class SplitLabel(NamedTuple):
    """Order/offset pair carried by a string: the string has length 2n + ||xi||_1."""

    order: int
    offset: OffsetVector


def as_offset(xi) -> OffsetVector:
    """Coerce an int sequence (or OffsetVector) to an OffsetVector."""
    if isinstance(xi, OffsetVector):
        return xi
    return OffsetVector(tuple(xi))


def sign_split(xi) -> SignSplit:
    """Split xi componentwise into (max(xi_j,0), max(-xi_j,0)); plus - minus = xi."""
    xi = as_offset(xi)
    plus = tuple(max(c, 0) for c in xi.components)
    minus = tuple(max(-c, 0) for c in xi.components)
    return SignSplit(plus, minus)


def multinomial(alpha: Sequence[int]) -> BigCount:
    """|alpha|! / prod(alpha_j!), computed as a product of binomials C(prefix sum, a_j).

    Factorization-free and exact; no factorial tables are kept.
    """
    total = 0
    out = 1
    for a in alpha:
        if a < 0:
            raise ValueError(f"multinomial parts must be nonnegative, got {a}")
        total += a
        out *= math.comb(total, a)
    return out


def weak_compositions(n: int, d: int) -> Iterator[tuple]:
    """All nu in N_0^d with sum nu = n, in colexicographic order.

    Emits exactly C(n+d-1, d-1) vectors.  Colex order (last coordinate most
    significant) is fixed so that streams are deterministic and chunkable by
    the value of the last coordinate.
    """
    if d < 1:
        raise ValueError("need d >= 1")
    if n < 0:
        raise ValueError("need n >= 0")
    if d == 1:
        yield (n,)
        return
    nu = [n] + [0] * (d - 1)
    while True:
        yield tuple(nu)
        # successor: move one unit to the lowest position with mass before it
        acc = 0
        t = -1
        for j in range(d - 1):
            acc += nu[j]
            if acc > 0:
                t = j + 1
                break
        if t < 0:
            return
        for j in range(t):
            nu[j] = 0
        nu[0] = acc - 1
        nu[t] += 1


def parikh(word: Sequence[int], d: int) -> tuple:
    """Multiplicity vector of the characters 1..d within ``word``."""
    counts = [0] * d
    for c in word:
        if not 1 <= c <= d:
            raise ValueError(f"character {c!r} outside alphabet [1:{d}]")
        counts[c - 1] += 1
    return tuple(counts)


def mutuality(p: Sequence[int], q: Sequence[int]) -> tuple:
    """Componentwise minimum of two Parikh vectors."""
    if len(p) != len(q):
        raise ValueError(f"dimension mismatch: {len(p)} vs {len(q)}")
    return tuple(min(a, b) for a, b in zip(p, q))


def classify_splits(word: Sequence[int], d: int) -> list:
    """Label ``word`` at every split point k = 0..len(word).

    At split k the offset is rho(prefix) - rho(suffix) and the order is
    (len(word) - ||offset||_1) / 2, which is always an integer: the length and
    the one-norm of the offset have the same parity.
    """
    suffix = list(parikh(word, d))
    prefix = [0] * d
    length = len(word)
    labels = []
    for k in range(length + 1):
        xi = tuple(a - b for a, b in zip(prefix, suffix))
        norm = sum(abs(c) for c in xi)
        order2 = length - norm
        assert order2 % 2 == 0 and order2 >= 0
        labels.append(SplitLabel(order2 // 2, OffsetVector(xi)))
        if k < length:
            c = word[k] - 1
            prefix[c] += 1
            suffix[c] -= 1
    return labels


def _composition_term(nu: tuple, plus: tuple, minus: tuple) -> BigCount:
    a = multinomial(tuple(v + p for v, p in zip(nu, plus)))
    b = multinomial(tuple(v + m for v, m in zip(nu, minus)))
    return a * b


def _chunk_sum(args) -> BigCount:
    """Partial sum over the compositions whose last coordinate equals t."""
    n, t, plus, minus = args
    d = len(plus)
    total = 0
    for head in weak_compositions(n - t, d - 1):
        total += _composition_term(head + (t,), plus, minus)
    return total


def _partitions_at_most(n: int, parts: int, cap: int | None = None) -> Iterator[tuple]:
    """Partitions of n into at most ``parts`` parts, largest-first tuples."""
    if cap is None:
        cap = n
    if n == 0:
        yield ()
        return
    if parts == 0:
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions_at_most(n - first, parts - 1, first):
            yield (first,) + rest


def _count_constant_offset(n: int, d: int, m: int) -> BigCount:
    """count_offset_words for xi = m * 1_d, regrouping the composition sum by
    the orbit of nu under coordinate permutations (the summand only depends on
    the multiset of parts when the offset is constant)."""
    am = abs(m)
    total = 0
    fact_d = math.factorial(d)
    for part in _partitions_at_most(n, d):
        padded = part + (0,) * (d - len(part))
        orbit = fact_d
        run = 1
        for i in range(1, d):
            if padded[i] == padded[i - 1]:
                run += 1
            else:
                orbit //= math.factorial(run)
                run = 1
        orbit //= math.factorial(run)
        base = multinomial(padded)
        if am == 0:
            total += orbit * base * base
        else:
            total += orbit * base * multinomial(tuple(v + am for v in padded))
    return total


def count_offset_words(n: int, xi, workers: int = 1) -> BigCount:
    """Number of order-n words offset by xi: the exact sum over weak
    compositions nu of n of multinomial(nu + xi^+) * multinomial(nu + xi^-).

    ``workers`` > 1 chunks the composition stream by its most significant
    coordinate and reduces in parallel; integer addition makes the result
    identical to the sequential sum.
    """
    if n < 0:
        raise ValueError("order n must be nonnegative")
    xi = as_offset(xi)
    if xi.is_constant():
        return _count_constant_offset(n, xi.d, xi.components[0])
    plus, minus = sign_split(xi)
    d = xi.d
    if workers is None or workers < 1:
        workers = os.cpu_count() or 1
    if workers > 1 and d > 1 and math.comb(n + d - 1, d - 1) > _PARALLEL_MIN_TERMS:
        jobs = [(n, t, plus, minus) for t in range(n + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(_chunk_sum, jobs, chunksize=8))
    total = 0
    for nu in weak_compositions(n, d):
        total += _composition_term(nu, plus, minus)
    return total
