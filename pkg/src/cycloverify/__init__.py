"""Numerical verification of L(1, chi), L_E(1, chi), and cyclotomic-unit regulators."""

from .characters import (
    DirichletCharacter,
    RationalAngle,
    character_group,
    conductor,
    evaluate,
    even_nontrivial,
    induce_primitive,
    parity,
    parse_label,
    primitive_characters,
    trivial_character,
)
from .lfunctions import (
    ConvergenceError,
    euler_factor_two,
    gauss_sum,
    l_e_one_closed,
    l_e_one_series,
    l_one_closed,
    l_one_series,
)
from .modular import crt_split, euler_phi, factorize, primitive_root
from .regulators import (
    conductor_descent_check,
    dedekind_det_check,
    eta_factor,
    h_plus_formula_check,
    log_unit,
    regulator,
    regulator_via_characters,
    verify_index_relation,
)
from .unitgroups import dlog, half_group, minus_one_two_generate, unit_group

__version__ = "0.1.0"
