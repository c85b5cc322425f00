"""Partition data model: enumeration, exact counting, hooks, and beta-sets.

Everything here is exact integer arithmetic; counting never touches floats.
Partitions serialize as comma-separated decreasing part lists ("4,1"), with
"-" for the empty partition.  That textual form is the one used in CLI
arguments, CSV cells, and cache keys.
"""

from __future__ import annotations

import math
import threading
from typing import Iterator

EMPTY_TEXT = "-"


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The empty partition is the unique partition of 0.  Instances are
    immutable and compare/hash exactly like plain tuples, so canonical
    (reverse-lexicographic) order is ordinary descending tuple order.
    """

    def __new__(cls, parts=()):
        parts = tuple(parts)
        for i, a in enumerate(parts):
            if not isinstance(a, int) or a < 1:
                raise ValueError(f"parts must be positive integers, got {a!r}")
            if i and parts[i - 1] < a:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        self = tuple.__new__(cls, parts)
        self._n = sum(parts)
        return self

    @classmethod
    def _unchecked(cls, parts: tuple) -> "Partition":
        # Fast path for internally produced, already-canonical tuples.
        self = tuple.__new__(cls, parts)
        self._n = sum(parts)
        return self

    @property
    def n(self) -> int:
        """Sum of the parts."""
        return self._n

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse the serialized form: "4,1" for (4, 1), "-" for the empty partition."""
        text = text.strip()
        if text in (EMPTY_TEXT, ""):
            return cls(())
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse partition from {text!r}") from exc
        return cls(parts)

    def to_text(self) -> str:
        return ",".join(str(a) for a in self) if self else EMPTY_TEXT

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __reduce__(self):
        return (Partition, (tuple(self),))


class BetaSet(tuple):
    """Strictly decreasing tuple of distinct non-negative integers.

    Encodes a partition as bead positions on a one-runner abacus: a set of
    size r built from ``lam`` has entries ``lam[i] + (r - 1 - i)`` (missing
    parts read as 0).
    """

    def __new__(cls, entries=()):
        entries = tuple(entries)
        for i, x in enumerate(entries):
            if not isinstance(x, int) or x < 0:
                raise ValueError(f"entries must be non-negative integers, got {x!r}")
            if i and entries[i - 1] <= x:
                raise ValueError(f"entries must be strictly decreasing, got {entries}")
        return tuple.__new__(cls, entries)

    @property
    def size(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"BetaSet({tuple(self)!r})"


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in reverse-lexicographic order.

    The stream starts at (n) and ends at (1, ..., 1); its length is
    partition_count(n).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    for parts in _iter_partition_tuples(n):
        yield Partition._unchecked(parts)


def _iter_partition_tuples(n: int) -> Iterator[tuple]:
    # Hot path shared by the counting sweeps: raw tuples, no validation.
    if n == 0:
        yield ()
        return
    parts = [n]
    while True:
        yield tuple(parts)
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        val = parts[i] - 1
        rem = len(parts) - i  # trailing ones plus the unit taken from parts[i]
        parts[i] = val
        del parts[i + 1:]
        while rem > 0:
            t = val if val < rem else rem
            parts.append(t)
            rem -= t


_count_memo = [1]
_count_lock = threading.Lock()


def partition_count(n: int) -> int:
    """Number of partitions of n, via Euler's pentagonal-number recurrence.

    Exact arbitrary precision; the memo table is process-global and grows on
    demand (lock-free reads, serialized extension).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < len(_count_memo):
        return _count_memo[n]
    with _count_lock:
        while len(_count_memo) <= n:
            m = len(_count_memo)
            total = 0
            j = 1
            while True:
                g = j * (3 * j - 1) // 2
                if g > m:
                    break
                term = _count_memo[m - g]
                g2 = g + j
                if g2 <= m:
                    term += _count_memo[m - g2]
                total += term if j & 1 else -term
                j += 1
            _count_memo.append(total)
    return _count_memo[n]


def conjugate(lam) -> Partition:
    """Transpose of the Young diagram; an involution."""
    parts = tuple(lam)
    if not parts:
        return Partition._unchecked(())
    cols = tuple(sum(1 for a in parts if a > j) for j in range(parts[0]))
    return Partition._unchecked(cols)


def hook_lengths(lam) -> dict[tuple[int, int], int]:
    """Hook length of every cell, keyed by 1-based (row, column).

    The hook of a cell is itself plus the cells to its right and below, so
    the entry at (i, j) is arm + leg + 1; there are exactly |lam| entries.
    """
    parts = tuple(lam)
    conj = tuple(conjugate(lam))
    out = {}
    for i, row_len in enumerate(parts, start=1):
        for j in range(1, row_len + 1):
            out[(i, j)] = (row_len - j) + (conj[j - 1] - i) + 1
    return out


def exponent_form(lam) -> tuple[tuple[int, int], ...]:
    """Distinct parts with multiplicities, largest part first: ((a_1, b_1), ...)."""
    out: list[tuple[int, int]] = []
    for a in lam:
        if out and out[-1][0] == a:
            out[-1] = (a, out[-1][1] + 1)
        else:
            out.append((a, 1))
    return tuple(out)


def centralizer_order(mu) -> int:
    """Order of the centralizer of a permutation with cycle type mu.

    Equals prod_i i**m_i * m_i! over part values i with multiplicity m_i;
    the class of cycle type mu therefore has n!/centralizer_order(mu)
    elements.
    """
    z = 1
    for part, mult in exponent_form(mu):
        z *= part ** mult * math.factorial(mult)
    return z


def to_beta_set(lam, size: int) -> BetaSet:
    """Beta-set of the given size; requires size >= number of parts."""
    parts = tuple(lam)
    if size < len(parts):
        raise ValueError(
            f"beta-set size {size} is smaller than the number of parts {len(parts)}"
        )
    entries = tuple(
        (parts[i] if i < len(parts) else 0) + size - 1 - i for i in range(size)
    )
    return BetaSet(entries)


def from_beta_set(beta) -> Partition:
    """Decode a beta-set back to its partition, stripping trailing zero parts."""
    if not isinstance(beta, BetaSet):
        beta = BetaSet(beta)
    return Partition._unchecked(_parts_from_beads(tuple(beta)))


def _parts_from_beads(beads_desc: tuple) -> tuple:
    # beads_desc: strictly decreasing bead positions; inverse of the beta map.
    r = len(beads_desc)
    parts = []
    for i, x in enumerate(beads_desc):
        a = x - (r - 1 - i)
        if a <= 0:
            break  # parts are weakly decreasing, so the rest are zeros
        parts.append(a)
    return tuple(parts)


def _beta_mask(parts: tuple) -> int:
    # Bead bitmask with exactly len(parts) beads (bit x set iff x is a bead).
    r = len(parts)
    mask = 0
    shift = r - 1
    for a in parts:
        mask |= 1 << (a + shift)
        shift -= 1
    return mask
