"""Minkowski sums, Hadamard products and Hadamard ranks of varieties and matrices."""

from .arith import DEFAULT_PRIME, GF, QQ, Scalar, canonicalize, field_inverse
from .groebner import (
    GroebnerBasis,
    HilbertData,
    buchberger,
    degree,
    dimension,
    eliminate,
    hilbert_data,
    hilbert_numerator,
    ideal_equal,
    normal_form,
)
from .hrank import (
    expected_dim,
    expected_generic_rank,
    generic_rank,
    power_tangent_rank,
    random_point,
    rank_table,
    tangent_basis,
)
from .matham import (
    HadamardDecomposition,
    Matrix,
    decompose_blocks,
    decompose_two_factors_3xn,
    hadamard,
    hadamard_inverse,
    hrank_bounds,
    kronecker_restriction_check,
    rank,
    scramble,
)
from .parsing import ParseError, parse_ideal_file, parse_polynomial
from .poly import GREVLEX, LEX, MonomialOrder, Polynomial, PolynomialRing, compare, elim
from .variety import (
    VarietyIdeal,
    cayley_lift,
    dilate,
    disjoint_at_infinity,
    hadamard_affine,
    hadamard_power,
    hadamard_projective,
    join,
    minkowski_sum,
    projective_closure,
    random_linear_transform,
)

__version__ = "0.1.0"
