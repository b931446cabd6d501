"""Exact verification of the major-index grading of two-row tableaux, the fusion
product of (C^2)^N, and the symmetric-function realisation of the charge-zero
sector of the basic sl2-hat module."""

from .fusion import EvaluationParams, GradedCharTable, apply_e, build_filtration, multiplicity_qcharacters_from_table, verify_theorem1
from .qseries import QPoly, box_partition_gf, gauss_binomial, kostka_foulkes_column, maj_gf, multiplicity_qcharacter, qhook_maj_gf
from .symfunc import MultivariatePoly, SymFunc, convert, hall_inner, kostka_number, modified_inner, schur_poly, z_lambda
from .tableaux import (Partition, StableTableau, TwoRowSYT, charge, descent_set, embed, enumerate_level, enumerate_syt,
                       maj, principal_tableau, stable_major_index)

__version__ = "0.1.0"
