"""Exact characterization of coincidence site lattices of planar lattices.

Everything is computed in arbitrary-precision rational arithmetic: lattice
shapes are given by their rational Gram invariants, reflections and
rotations are exact rational matrices, and coincidence indices come from
integer lattice intersections with an independent coset-counting oracle.
"""

__version__ = "0.1.0"

from .errors import DomainError, RecompositionError, UsageError
from .exact import Mat2Q, Mat2Z, Rational, denominator, hnf2, intersect_integer_lattices
from .lattice import (
    LatticeClass,
    LatticeParams,
    LatticeVector,
    classify,
    decompose_diagonal,
    diagonal_sublattice,
    dual_shape,
    gram,
    make_lattice,
)
from .isometry import (
    IsometryMatrix,
    axis_e2_vector,
    cartan_decompose,
    is_coincidence_reflection_condition,
    is_gram_orthogonal,
    reflection_matrix,
    rotation_general,
    rotation_rect,
)
from .csl import (
    CoincidenceReport,
    EnumerationEntry,
    ReflectionEntry,
    csl_basis,
    element_order,
    enumerate_reflections,
    enumerate_rotations,
    oracle_order,
)
from .verify import run_verification

__all__ = [
    "__version__",
    "DomainError",
    "RecompositionError",
    "UsageError",
    "Rational",
    "Mat2Q",
    "Mat2Z",
    "hnf2",
    "intersect_integer_lattices",
    "denominator",
    "LatticeClass",
    "LatticeParams",
    "LatticeVector",
    "make_lattice",
    "gram",
    "classify",
    "diagonal_sublattice",
    "decompose_diagonal",
    "dual_shape",
    "IsometryMatrix",
    "reflection_matrix",
    "rotation_rect",
    "rotation_general",
    "axis_e2_vector",
    "cartan_decompose",
    "is_gram_orthogonal",
    "is_coincidence_reflection_condition",
    "CoincidenceReport",
    "EnumerationEntry",
    "ReflectionEntry",
    "csl_basis",
    "oracle_order",
    "element_order",
    "enumerate_rotations",
    "enumerate_reflections",
    "run_verification",
]
