"""Exact verification of Hopf-algebra identities, quantum families and cocentralizers."""
from .adjoint import (
    AlgebraMorphism,
    CocommuteMode,
    ad_as_family,
    adjoint_coaction,
    center,
    check_ad_identities,
    cocentralizer,
    cocommute,
    induced_bialgebra,
    is_ad_homomorphism,
)
from .examples import corpus, function_algebra, group_algebra, sweedler_h4, taft
from .family import (
    QuantumFamilyData,
    build_U,
    check_alchar,
    check_antipode_intertwining,
    check_counit_preservation,
    check_leg_commutation,
    check_simeq,
    is_quantum_family,
    theorem_report,
)
from .hopf import AlgebraData, HopfAlgebraData, check_pentagon, multiplicative_unitary, verify_algebra, verify_hopf
from .linalg import GF, QQ, Field, Matrix
from .report import Check, Report

__version__ = "0.1.0"
