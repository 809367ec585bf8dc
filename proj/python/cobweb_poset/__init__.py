"""Exact F-nomials, connection constants and cobweb poset incidence matrices."""

from ._core import (
    CobwebError,
    Sequence,
    bell,
    bell_identity_check,
    ccc_rowsum,
    count_max_chains,
    count_max_chains_closed,
    cumulative_sum,
    f_factorial,
    f_term,
    fnomial,
    is_admissible,
    lah,
    lah_row_sums,
    mobius,
    partition_theorem,
    render_la_scala,
    run_cli,
    shift_power,
    solve_roots,
    stirling1_unsigned,
    stirling2,
    triangle,
    zeta,
)

__all__ = [
    "CobwebError",
    "Sequence",
    "bell",
    "bell_identity_check",
    "ccc_rowsum",
    "count_max_chains",
    "count_max_chains_closed",
    "cumulative_sum",
    "f_factorial",
    "f_term",
    "fnomial",
    "is_admissible",
    "lah",
    "lah_row_sums",
    "mobius",
    "partition_theorem",
    "render_la_scala",
    "run_cli",
    "shift_power",
    "solve_roots",
    "stirling1_unsigned",
    "stirling2",
    "triangle",
    "zeta",
]
