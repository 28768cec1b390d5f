"""Effective extremal-length and entropy bounds for 3-braids."""

from ._braid3 import (
    audit_block_constants,
    audit_upper_bound_arithmetic,
    audit_vsl_bounds,
    bounds,
    braid_bounds,
    braid_entropy_exact,
    braids_equal,
    class_check,
    cyclic_reduce,
    ellip_K,
    entropy_exact,
    enumerate_words,
    glue_word,
    half_slalom_extremal,
    normal_form,
    reduce_word,
    script_L,
    slalom_extremal_bounds,
    slalom_extremal_exact,
    syllables,
)

__all__ = [
    "audit_block_constants",
    "audit_upper_bound_arithmetic",
    "audit_vsl_bounds",
    "bounds",
    "braid_bounds",
    "braid_entropy_exact",
    "braids_equal",
    "class_check",
    "cyclic_reduce",
    "ellip_K",
    "entropy_exact",
    "enumerate_words",
    "glue_word",
    "half_slalom_extremal",
    "normal_form",
    "reduce_word",
    "script_L",
    "slalom_extremal_bounds",
    "slalom_extremal_exact",
    "syllables",
]
