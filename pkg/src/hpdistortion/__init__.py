"""Generalized elliptic integrals and the distortion functions phi_K^a."""

__version__ = "0.1.0"

from .classical import ellipe, ellipk, grotzsch_mu, hubner_m
from .distortion import (
    DistortionCoeff,
    Image,
    ModularSolution,
    dm_dr,
    dmu_dr,
    dphi_dK,
    dphi_dK_alt,
    log_phi,
    m_fn,
    modular_residual,
    mu,
    mu_inv,
    phi,
    phi_image,
    solve_modular,
)
from .elliptic import (
    E,
    K,
    EllipticPair,
    Modulus,
    dE_dr,
    dK_dr,
    e_minus_comp2_k,
    ellint_E,
    ellint_K,
    elliptic_pair,
    k_minus_e,
    kd_combo,
)
from .errors import ConvergenceError, DistortionError, DomainError, PoleError
from .special import (
    EvalResult,
    HypergeomParams,
    SignatureParam,
    digamma,
    gamma,
    hyp2f1,
    ramanujan_R,
)
from .verifier import (
    NamedFn,
    VerificationReport,
    check_monotone,
    check_range,
    check_theorem_mult,
    check_theorem_power,
    eval_named,
    find_sign_change,
    sharp_exp_mult,
    sharp_exp_power,
)
