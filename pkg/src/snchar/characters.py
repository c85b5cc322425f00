"""Character values of symmetric groups by rim-hook recursion, exact and mod p.

The value of the irreducible character indexed by alpha on the class with
cycle parts beta expands over removable rim hooks:

    chi(alpha, beta) = sum over rim hooks H of length beta_1 removable
                       from alpha of (-1)**leg(H) * chi(alpha - H, beta')

where beta' drops the consumed part and chi((), ()) = 1.  Parts of beta are
consumed largest first: if alpha has no hook of that length the whole branch
dies immediately, which is where the zeros this package censuses come from.
Rim-hook search runs on beta-sets (a hook of length t is a bead x with x - t
vacant), so each probe is linear in the number of parts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cores import _rim_hook_options
from .padic import is_prime
from .partitions import Partition, enumerate_partitions, hook_lengths

_MISSING = object()


class MemoCache:
    """Memo table for (partition, parts-consumed) states of one evaluation.

    Keys are scoped to a fixed class partition, so the stage index identifies
    the remaining suffix.  Lookups never change results; the statistics exist
    for instrumentation only.
    """

    __slots__ = ("table", "hits", "misses")

    def __init__(self):
        self.table: dict = {}
        self.hits = 0
        self.misses = 0

    @property
    def entries(self) -> int:
        return len(self.table)


def _mn_eval(alpha: tuple, beta: tuple, modulus: int | None, cache: MemoCache | None) -> int:
    """Evaluate the rim-hook recursion; cache may be shared across alphas
    (same beta) or None to disable memoization entirely."""

    def rec(parts: tuple, stage: int) -> int:
        if stage == len(beta):
            return 1  # sizes track, so parts is () here
        if cache is not None:
            key = (parts, stage)
            value = cache.table.get(key, _MISSING)
            if value is not _MISSING:
                cache.hits += 1
                return value
            cache.misses += 1
        total = 0
        for child, leg in _rim_hook_options(parts, beta[stage]):
            v = rec(child, stage + 1)
            total += -v if leg & 1 else v
        if modulus is not None:
            total %= modulus
        if cache is not None:
            cache.table[key] = total
        return total

    return rec(alpha, 0)


@dataclass(frozen=True, eq=False)
class CharColumn:
    """All character values on one conjugacy class, keyed by irreducible label.

    values holds one entry per partition of n, inserted in canonical
    enumeration order; with a modulus set, every value lies in [0, p - 1].
    """

    n: int
    mu: Partition
    values: dict[Partition, int]
    modulus: int | None

    def zero_count(self) -> int:
        return sum(1 for v in self.values.values() if v == 0)

    def value_list(self) -> list[int]:
        return list(self.values.values())

    def reduced(self, p: int) -> "CharColumn":
        """Residues mod p of an exact column (identity on an already-reduced one)."""
        if self.modulus is not None and self.modulus != p:
            raise ValueError("column already reduced with a different modulus")
        return CharColumn(
            self.n, self.mu, {a: v % p for a, v in self.values.items()}, p
        )


def mn_character(alpha, beta) -> int:
    """Exact character value chi^alpha on the class with cycle parts beta."""
    alpha = Partition(alpha)
    beta = Partition(beta)
    if alpha.n != beta.n:
        raise ValueError(f"|alpha| = {alpha.n} and |beta| = {beta.n} differ")
    return _mn_eval(tuple(alpha), tuple(beta), None, MemoCache())

def mn_character_mod(alpha, beta, p: int) -> int:
    """chi^alpha_beta reduced mod p, computed natively in modular arithmetic
    so large columns never build big integers."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    alpha = Partition(alpha)
    beta = Partition(beta)
    if alpha.n != beta.n:
        raise ValueError(f"|alpha| = {alpha.n} and |beta| = {beta.n} differ")
    return _mn_eval(tuple(alpha), tuple(beta), p, MemoCache())


def compute_column(n: int, mu, modulus: int | None = None) -> CharColumn:
    """Character values for every partition of n on the class mu, in canonical
    order, sharing one memo cache across the whole column."""
    mu = Partition(mu)
    if n < 0:
        raise ValueError("n must be non-negative")
    if mu.n != n:
        raise ValueError(f"{mu} is not a partition of {n}")
    if modulus is not None and not is_prime(modulus):
        raise ValueError(f"modulus must be prime, got {modulus!r}")
    cache = MemoCache()
    beta = tuple(mu)
    values: dict[Partition, int] = {}
    for alpha in enumerate_partitions(n):
        values[alpha] = _mn_eval(tuple(alpha), beta, modulus, cache)
    return CharColumn(n=n, mu=mu, values=values, modulus=modulus)


def dimension(alpha) -> int:
    """Dimension of the irreducible indexed by alpha: n! over the product of
    all hook lengths.  The division is asserted exact."""
    alpha = Partition(alpha)
    denom = math.prod(hook_lengths(alpha).values())
    q, r = divmod(math.factorial(alpha.n), denom)
    if r:
        raise ArithmeticError(f"hook product does not divide {alpha.n}! for {alpha}")
    return q
