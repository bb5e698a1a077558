"""Degrees of self-maps of smooth projective surfaces."""

from ._selfmaps import (
    SCHEMA_VERSION,
    DescriptorError,
    __version__,
    admits_all_degrees,
    build_semidirect,
    classify_file,
    classify_text,
    conjugate,
    degree_two_table,
    elements_of_norm,
    legendre,
    norm,
    rho_bar_surjective,
    run_claims,
    scan,
    split_type,
    toric_verdict,
)

__all__ = [
    "SCHEMA_VERSION",
    "DescriptorError",
    "__version__",
    "admits_all_degrees",
    "build_semidirect",
    "classify_file",
    "classify_text",
    "conjugate",
    "degree_two_table",
    "elements_of_norm",
    "legendre",
    "norm",
    "rho_bar_surjective",
    "run_claims",
    "scan",
    "split_type",
    "toric_verdict",
]
