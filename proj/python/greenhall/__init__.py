"""Exact-arithmetic toolkit for Kostka-Foulkes, Hall and Green polynomials,
Whittaker trace values, local Hecke identities and DVR elementary divisors.

All rational values cross the boundary as canonical "p/q" strings; partitions
are lists of weakly decreasing positive integers; Laurent polynomials are
{exponent: "p/q"} dicts.
"""

from greenhall._core import (
    aut_order_poly,
    character_table,
    character_value,
    charge,
    conjugate,
    count_submodules,
    dominance_leq,
    elementary_divisors_closed,
    enumerate_partitions,
    extension_count,
    green_polynomial,
    hall_polynomial,
    hecke_check,
    hom_order,
    kostka_foulkes,
    kostka_tilde,
    lr_coefficient,
    multiplicities,
    n_stat,
    run_suite,
    schur_eval,
    snf_check,
    suite_names,
    union_partition,
    whittaker_global,
    whittaker_local,
    whittaker_local_top,
    x_polynomial,
)

__all__ = [
    "aut_order_poly",
    "character_table",
    "character_value",
    "charge",
    "conjugate",
    "count_submodules",
    "dominance_leq",
    "elementary_divisors_closed",
    "enumerate_partitions",
    "extension_count",
    "green_polynomial",
    "hall_polynomial",
    "hecke_check",
    "hom_order",
    "kostka_foulkes",
    "kostka_tilde",
    "lr_coefficient",
    "multiplicities",
    "n_stat",
    "run_suite",
    "schur_eval",
    "snf_check",
    "suite_names",
    "union_partition",
    "whittaker_global",
    "whittaker_local",
    "whittaker_local_top",
    "x_polynomial",
]
