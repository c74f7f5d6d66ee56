"""Brute-force ground truth: count offset words straight from the definition.

Nothing here touches the multinomial formula.  Strings are generated
exhaustively (as tuples of ints over [1:d]) and counted by comparing actual
Parikh vectors, so these routines serve as the independent oracle for the
closed-form counting paths.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .core import BigCount, as_offset, classify_splits, parikh, sign_split
from .errors import BudgetExceededError


@dataclass(frozen=True)
class OracleBudget:
    """Hard limits for exhaustive enumeration; exceeding them raises, never truncates."""

    max_total_length: int = 24
    max_alphabet: int = 8
    max_strings: int = 10_000_000

    def check(self, d: int, total_length: int) -> None:
        if d > self.max_alphabet:
            raise BudgetExceededError(f"alphabet size {d} exceeds cap {self.max_alphabet}")
        if total_length > self.max_total_length:
            raise BudgetExceededError(
                f"total length {total_length} exceeds cap {self.max_total_length}"
            )
        if d**total_length > self.max_strings:
            raise BudgetExceededError(
                f"d^length = {d**total_length} exceeds cap {self.max_strings} strings"
            )


DEFAULT_BUDGET = OracleBudget()


def _parikh_census(d: int, length: int) -> Counter:
    """Histogram of Parikh vectors over all d^length strings, by generation."""
    census: Counter = Counter()
    for word in product(range(1, d + 1), repeat=length):
        census[parikh(word, d)] += 1
    return census


def oracle_count(n: int, xi, budget: OracleBudget = DEFAULT_BUDGET) -> BigCount:
    """Count strings ww' with |w| = n+|xi^+|, |w'| = n+|xi^-| and
    rho(w) - rho(w') = xi, by exhaustively generating both halves."""
    if n < 0:
        raise ValueError("order n must be nonnegative")
    xi = as_offset(xi)
    d = xi.d
    plus, minus = sign_split(xi)
    total_length = 2 * n + xi.one_norm
    budget.check(d, total_length)
    left = _parikh_census(d, n + sum(plus))
    right = _parikh_census(d, n + sum(minus))
    total = 0
    for rho_w, cnt in left.items():
        rho_wp = tuple(a - c for a, c in zip(rho_w, xi.components))
        if all(v >= 0 for v in rho_wp):
            total += cnt * right.get(rho_wp, 0)
    return total


def oracle_words(n: int, xi, budget: OracleBudget = DEFAULT_BUDGET, limit: int | None = None) -> Iterator[tuple]:
    """Yield the actual offset words ww' (capped listing for the CLI)."""
    xi = as_offset(xi)
    d = xi.d
    plus, minus = sign_split(xi)
    budget.check(d, 2 * n + xi.one_norm)
    emitted = 0
    for w in product(range(1, d + 1), repeat=n + sum(plus)):
        rho_w = parikh(w, d)
        for wp in product(range(1, d + 1), repeat=n + sum(minus)):
            if tuple(a - b for a, b in zip(rho_w, parikh(wp, d))) == xi.components:
                yield w + wp
                emitted += 1
                if limit is not None and emitted >= limit:
                    return


def is_abelian_square(word: Sequence[int]) -> bool:
    """True iff the word has even length and its halves are anagrams."""
    if len(word) % 2:
        return False
    half = len(word) // 2
    return Counter(word[:half]) == Counter(word[half:])


def enumerate_pairs_by_length(
    d: int, total_length: int, budget: OracleBudget = DEFAULT_BUDGET
) -> BigCount:
    """Size of the length-``total_length`` slice of the disjoint union over all
    offsets xi of (words offset by xi) x (words offset by xi).

    A pair (u, v) is counted once for every xi under which both u and v carry
    an offset-xi labelling; labellings come from classify_splits so the
    membership test is the definitional one.
    """
    if total_length < 0 or total_length % 2:
        raise ValueError("combined length must be even and nonnegative")
    if d < 1:
        raise ValueError("need d >= 1")
    budget.check(d, total_length)
    label_census: dict[int, Counter] = {}
    for length in range(total_length + 1):
        census: Counter = Counter()
        for word in product(range(1, d + 1), repeat=length):
            for label in classify_splits(word, d):
                census[label.offset.components] += 1
        label_census[length] = census
    total = 0
    for left_len in range(total_length + 1):
        left = label_census[left_len]
        right = label_census[total_length - left_len]
        for offset, cnt in left.items():
            total += cnt * right.get(offset, 0)
    return total
