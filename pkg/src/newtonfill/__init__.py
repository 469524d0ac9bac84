"""Newton polytope fingerprints for F2 Laurent polynomials and augmentation orbits."""
from .errors import (
    DimensionPolicyError,
    NotUnimodularError,
    PolySyntaxError,
    UnknownVariableError,
    VariableMismatchError,
    VerificationError,
    ZeroPolynomialError,
)
from .intlinalg import IntMatrix, det_bareiss, hnf, rank, snf
from .laurent import (
    LaurentPoly,
    MonomialSubstitution,
    VariableList,
    extend_with_pinch_variable,
    monomial_count,
    parse_poly,
    poly_add,
    poly_mul,
    poly_pow,
    render,
    substitute,
)
from .matrix import LaurentMatrix, conjugate, factor_monomial, mat_mul, mat_pow, orbit_value
from .polytope import (
    Fingerprint,
    LatticePolytope,
    apply_unimodular,
    count_lattice_points,
    embed,
    fingerprint,
    is_simplex_unimodular_standard,
    newton_polytope,
    polytope_fingerprint,
)
from .scenarios import (
    OrbitRow,
    Scenario,
    TorusInstance,
    alpha_sequence,
    distinctness_verdict,
    get_scenario,
    orbit_table,
    scenario_beta11,
    scenario_lambda1,
    torus_simplex_check,
    torus_value,
)

__version__ = "0.1.0"
