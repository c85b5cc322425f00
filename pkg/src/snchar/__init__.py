"""Exact toolkit for partition combinatorics, k-cores, symmetric-group
character columns, and mod-p divisibility censuses."""

from .bounds import (
    BoundReport,
    GrowthEnvelopeReport,
    check_core_deficit,
    check_core_fiber_identity,
    check_multipartition_growth,
    core_density_report,
    growth_envelope_report,
)
from .census import (
    CensusRecord,
    CensusResult,
    ColumnCacheEntry,
    ColumnChecksumError,
    ColumnDivisibilityRecord,
    ColumnStore,
    ColumnVersionError,
    CoreVanishReport,
    FiberCongruenceReport,
    check_core_vanishing,
    check_fiber_congruence,
    column_divisibility,
    load_column,
    save_column,
    table_census,
    threshold_experiment,
)
from .characters import (
    CharColumn,
    MemoCache,
    compute_column,
    dimension,
    mn_character,
    mn_character_mod,
)
from .cores import (
    CoreResult,
    Multipartition,
    count_k_cores,
    enumerate_multipartitions,
    from_core_and_quotient,
    is_k_core,
    k_core,
    k_quotient,
    multipartition_count,
    node_addition_cover,
    random_greedy_core,
    remove_rim_hook,
)
from .padic import (
    PAdicDecomposition,
    PowerBlockWitness,
    ThresholdParams,
    digit_representative,
    few_distinct_parts,
    fiber_partitions,
    fiber_size,
    is_p_regular,
    is_prime,
    p_adic_digits,
    p_prime_part,
    p_regular_partitions,
    power_block_witness,
)
from .partitions import (
    BetaSet,
    Partition,
    centralizer_order,
    conjugate,
    enumerate_partitions,
    exponent_form,
    from_beta_set,
    hook_lengths,
    partition_count,
    to_beta_set,
)
