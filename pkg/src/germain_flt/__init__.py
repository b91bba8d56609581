"""Computational toolkit for Sophie Germain's approach to Case 1 of
Fermat's Last Theorem."""
from .core_arith import factorize, fermat_number, is_prime, mod_pow, sieve_primes, wilson_check
from .errors import InvalidArgument, NotFound, OutOfRange
from .germain import (
    AuxiliaryCertificate,
    GermainPair,
    LegendreRow,
    case1_certificate,
    find_auxiliaries,
    germain_primes,
    is_germain_prime,
    legendre_table,
)
from .grand_plan import SizeBound, SurveyRow, full_survey, libri_scan, nc_survey, size_lower_bound
from .historical import (
    Case,
    CyclotomicWitness,
    FermatTriple,
    FormWitness,
    claim1807_counterexample,
    classify_case,
    cyclotomic_form_witness,
    flt_search,
    reduce_exponent,
    represent,
)
from .residues import ConsecutiveWitness, ResidueSet, is_pth_power, nc_condition, pth_residues, qualifies

__version__ = "0.1.0"
