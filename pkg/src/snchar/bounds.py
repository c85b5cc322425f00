"""Exact checkers for the counting inequalities, plus diagnostic growth reports.

Every comparison here is exact big-integer or rational arithmetic; floats
appear only in diagnostic output fields.  The core-count side is enumeration
backed, so these sweeps double as the strongest cross-validation between the
counting paths (pentagonal recurrence, abacus core filter, series
convolution).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cores import count_k_cores, multipartition_count
from .padic import C_MIN
from .partitions import partition_count

# Enumeration-backed core counts stay tractable up to here; reports beyond
# this omit the exact core ratio instead of grinding through ~1e6 partitions.
CORE_ENUM_LIMIT = 60


@dataclass(frozen=True)
class BoundReport:
    """One checked comparison: lhs (relation) rhs, with exact slack lhs/rhs.

    lhs and holds are None when the report intentionally skips the exact
    core-count side (n beyond CORE_ENUM_LIMIT with core ratio not requested).
    """

    check: str
    params: dict[str, object]
    lhs: Fraction | int | None
    rhs: Fraction | int
    relation: str  # "<=" or "=="
    holds: bool | None
    slack: Fraction | None


def _slack(lhs, rhs) -> Fraction | None:
    if lhs is None or rhs == 0:
        return None
    return Fraction(lhs, rhs)


def check_multipartition_growth(k: int, m: int) -> BoundReport:
    """Exact check that p_k(m) <= (k + 1) * p_k(m - 1)."""
    if k < 1:
        raise ValueError("k must be positive")
    if m < 1:
        raise ValueError("m must be positive")
    lhs = multipartition_count(k, m)
    rhs = (k + 1) * multipartition_count(k, m - 1)
    return BoundReport(
        check="multipartition-growth",
        params={"k": k, "m": m},
        lhs=lhs,
        rhs=rhs,
        relation="<=",
        holds=lhs <= rhs,
        slack=_slack(lhs, rhs),
    )


def check_core_deficit(n: int, k: int) -> BoundReport:
    """Exact check that p(n) - c_k(n) <= (k + 1) * p(n - k), for 1 <= k <= n."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    lhs = partition_count(n) - count_k_cores(n, k)
    rhs = (k + 1) * partition_count(n - k)
    return BoundReport(
        check="core-deficit",
        params={"n": n, "k": k},
        lhs=lhs,
        rhs=rhs,
        relation="<=",
        holds=lhs <= rhs,
        slack=_slack(lhs, rhs),
    )


def check_core_fiber_identity(n: int, k: int) -> BoundReport:
    """Exact equality p(n) - c_k(n) = sum over m >= 1 of c_k(n - m k) * p_k(m).

    Both sides count partitions of n that are not k-cores: the right side
    classifies them by core and quotient.  This is the cross-check tying the
    three counting paths together.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if k < 1:
        raise ValueError("k must be positive")
    lhs = partition_count(n) - count_k_cores(n, k)
    rhs = sum(
        count_k_cores(n - m * k, k) * multipartition_count(k, m)
        for m in range(1, n // k + 1)
    )
    return BoundReport(
        check="fiber-identity",
        params={"n": n, "k": k},
        lhs=lhs,
        rhs=rhs,
        relation="==",
        holds=lhs == rhs,
        slack=_slack(lhs, rhs),
    )


def core_density_report(
    n: int, k: int, c: float, include_core_ratio: bool | None = None
) -> BoundReport:
    """Diagnostic report on the k-core share of partitions of n.

    lhs is the exact non-core share 1 - c_k(n)/p(n); rhs is the decay bound
    (k + 1) p(n - k) / p(n) it never exceeds.  params carry whether k clears
    the scale threshold c * sqrt(n) * ln(n).  The limiting decay rate behind
    this diagnostic involves a constant with no effective value, so nothing
    asymptotic is asserted here; only the exact ratios are.

    include_core_ratio defaults to n <= CORE_ENUM_LIMIT; when the core count
    is skipped, lhs and holds are None and only the decay side is reported.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if k < 1:
        raise ValueError("k must be positive")
    if not c > C_MIN:
        raise ValueError(f"c must exceed sqrt(3/2)/pi = {C_MIN:.9f}, got {c}")
    if include_core_ratio is None:
        include_core_ratio = n <= CORE_ENUM_LIMIT
    pn = partition_count(n)
    rhs = Fraction((k + 1) * partition_count(n - k), pn) if k <= n else Fraction(0)
    k_meets = k >= c * math.sqrt(n) * math.log(n)
    if include_core_ratio:
        lhs = 1 - Fraction(count_k_cores(n, k), pn)
        holds = lhs <= rhs
    else:
        lhs = None
        holds = None
    return BoundReport(
        check="core-density",
        params={"n": n, "k": k, "c": c, "k_meets_threshold": k_meets},
        lhs=lhs,
        rhs=rhs,
        relation="<=",
        holds=holds,
        slack=_slack(lhs, rhs),
    )


@dataclass(frozen=True)
class GrowthEnvelopeReport:
    """p(m) against the exponential growth scale exp(pi * sqrt(2m/3)) / m.

    ratio = p(m) * m / exp(pi * sqrt(2m/3)); sweeping m and reading off the
    envelope of the ratio gives empirical bracketing constants.  Purely
    diagnostic, nothing asserted.
    """

    m: int
    count: int
    ratio: float


def growth_envelope_report(m: int) -> GrowthEnvelopeReport:
    if m < 1:
        raise ValueError("m must be positive")
    count = partition_count(m)
    # exp(log ...) keeps huge counts inside float range
    ratio = math.exp(math.log(count) + math.log(m) - math.pi * math.sqrt(2 * m / 3))
    return GrowthEnvelopeReport(m=m, count=count, ratio=ratio)
