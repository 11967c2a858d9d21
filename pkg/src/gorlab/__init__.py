"""Exact Gorenstein homological algebra for finite algebras over Q, F_p and Z.

The package computes with finite-dimensional (or finite-rank) associative
algebras given by structure constants, and with finitely generated modules
over them.  All arithmetic is exact: rationals use fractions.Fraction,
finite fields reduce mod p, integer work runs over Z with Smith normal
form.  On top of the linear layer sit projective resolutions, Ext and Tor,
Gorenstein and dualizing-module checks, complete resolutions with Tate
cohomology, Gorenstein projective approximations, localization at primes,
and a duality verification harness with a command line front end.
"""

from gorlab.rings import QQ, ZZ, GF
from gorlab.matrix import Matrix, smith_normal_form
from gorlab.algebra import AlgebraValidationError, FiniteAlgebra
from gorlab.modules import (
    AlgebraModule,
    ModuleError,
    ModuleMap,
    cancel_free_summands,
    direct_sum,
    dual_over_base,
    hom_module,
    kernel_module,
    module_iso,
    normalize_module,
    quotient_module,
    simple_modules,
    submodule,
    tensor_over_algebra,
)
from gorlab.presets import (
    commutative_fat_point,
    group_algebra,
    quantum_exterior,
    truncated_poly,
    upper_triangular,
)
from gorlab.resolutions import (
    FinitenessVerdict,
    Resolution,
    ext,
    free_resolution_of,
    injective_resolution_artin,
    proj_dim,
    resolution_of,
    syzygy,
    tor,
)
from gorlab.complexes import ChainComplex, total_complex
from gorlab.rmodules import GradedGroups, ModuleInvariants, PresentedRModule
from gorlab.gorenstein import (
    DualizingBimodule,
    GorensteinVerdict,
    OmegaHat,
    OmegaHatError,
    conakayama,
    dualizing_bimodule,
    gorenstein_check,
    nakayama,
    omega_hat,
    verify_adjunction,
    verify_tilting,
)
from gorlab.tate import (
    CompleteResolution,
    GProjectiveVerdict,
    NotGProjectiveError,
    complete_resolution,
    is_gprojective,
    stable_hom,
    stable_syzygy,
    stably_isomorphic,
    tate_ext,
    total_acyclicity_probe,
)
from gorlab.approximation import (
    ApproximationError,
    ApproximationTriple,
    CoapproximationTriple,
    ginjective_approximation_artin,
    gprojective_approximation,
    serre_operator,
    verify_nakayama_square,
)
from gorlab.localization import (
    GradedWithSupport,
    PrimeSite,
    SingularSite,
    local_cohomology_graded,
    localize,
    matlis_dual_finite,
    prime_sites,
    singular_locus,
    torsion_submodule,
)
from gorlab.duality import (
    DualityReport,
    report,
    trace_pairing_probe,
    verify_local_duality_integer,
    verify_serre_duality_field,
)
from gorlab.serialize import (
    algebra_from_json,
    algebra_to_json,
    dump_json,
    module_from_json,
    module_to_json,
    resolve_algebra,
    resolve_module,
    trivial_module,
)

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "ZZ",
    "GF",
    "Matrix",
    "smith_normal_form",
    "AlgebraValidationError",
    "FiniteAlgebra",
    "AlgebraModule",
    "ModuleError",
    "ModuleMap",
    "cancel_free_summands",
    "direct_sum",
    "dual_over_base",
    "hom_module",
    "kernel_module",
    "module_iso",
    "normalize_module",
    "quotient_module",
    "simple_modules",
    "submodule",
    "tensor_over_algebra",
    "commutative_fat_point",
    "group_algebra",
    "quantum_exterior",
    "truncated_poly",
    "upper_triangular",
    "FinitenessVerdict",
    "Resolution",
    "ext",
    "free_resolution_of",
    "injective_resolution_artin",
    "proj_dim",
    "resolution_of",
    "syzygy",
    "tor",
    "ChainComplex",
    "total_complex",
    "GradedGroups",
    "ModuleInvariants",
    "PresentedRModule",
    "DualizingBimodule",
    "GorensteinVerdict",
    "OmegaHat",
    "OmegaHatError",
    "conakayama",
    "dualizing_bimodule",
    "gorenstein_check",
    "nakayama",
    "omega_hat",
    "verify_adjunction",
    "verify_tilting",
    "CompleteResolution",
    "GProjectiveVerdict",
    "NotGProjectiveError",
    "complete_resolution",
    "is_gprojective",
    "stable_hom",
    "stable_syzygy",
    "stably_isomorphic",
    "tate_ext",
    "total_acyclicity_probe",
    "ApproximationError",
    "ApproximationTriple",
    "CoapproximationTriple",
    "ginjective_approximation_artin",
    "gprojective_approximation",
    "serre_operator",
    "verify_nakayama_square",
    "GradedWithSupport",
    "PrimeSite",
    "SingularSite",
    "local_cohomology_graded",
    "localize",
    "matlis_dual_finite",
    "prime_sites",
    "singular_locus",
    "torsion_submodule",
    "DualityReport",
    "report",
    "trace_pairing_probe",
    "verify_local_duality_integer",
    "verify_serre_duality_field",
    "algebra_from_json",
    "algebra_to_json",
    "dump_json",
    "module_from_json",
    "module_to_json",
    "resolve_algebra",
    "resolve_module",
    "trivial_module",
]
