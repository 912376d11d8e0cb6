"""Knot and 4-manifold invariants for deciding simple Z_d-sliceness."""

__version__ = "0.1.0"

from .errors import (
    CertificationFailed,
    DimensionMismatch,
    InvalidForm,
    InvalidSeifertMatrix,
    NotCharacteristic,
    NotDivisibleBy8,
    SingularAtRoot,
    SliceEngineError,
)
from .polynomial import IntPolynomial, LaurentPolynomial, cyclotomic, quotient_cyclotomic_like, resultant
from .knot import (
    RootOfUnityAngle,
    SeifertMatrix,
    alexander_polynomial,
    arf_invariant,
    branched_cover_h1_order,
    knot_determinant,
    levine_tristram_signature,
    mirror,
)
from .form import (
    IntersectionForm,
    connected_sum,
    divisibility,
    find_primitive_ordinary_class,
    from_descriptor,
    is_characteristic,
    preset,
    self_intersection,
    signature,
    stabilize,
)
from .slice import (
    Answer,
    Exactness,
    SliceQuery,
    SliceVerdict,
    StabilizingResult,
    arf_condition,
    decide_simple_slice,
    decide_stably_slice,
    genus_lower_bound,
    is_prime_power,
    max_signature_bound,
    sigma_j,
    stabilizing_number,
    stable_genus_representable,
)
from .corpus import KnotRecord, get_knot, load_knot_table
