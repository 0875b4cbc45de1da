"""Exact decision procedures for quartic biquadratic extensions X^4 + uX^2 + w.

Supported base fields are Q, F_p for odd p, and one quadratic extension of either.
"""

from .biquadratic import (
    C2,
    C4,
    V4,
    AutKind,
    BiquadPoly,
    SubfieldSet,
    analyze,
    aut_type,
    is_galois,
    is_irreducible_biquadratic,
    quadratic_subfields,
)
from .descent import (
    Closure,
    DescentVerdict,
    DescentWitness,
    ElemKey,
    NonGaloisKey,
    NoneCyclic,
    Trivial,
    class_key,
    closure_iso,
    delta_embed,
    descent_search,
    elem_abelian_closure,
    noncyclic_iso,
    nongalois_class_key,
)
from .elem_abelian import (
    ElemAbelianExt,
    IsoVerdict,
    NoClosure,
    ThreeClosures,
    TrivialClosure,
    canonical_ab,
    compose_elem_abelian,
    elem_iso,
    is_biquadratic_generator,
    radical_closure_analysis,
    radical_elem_iso,
    subfield_iso,
)
from .errors import BiquadError
from .field import (
    PrimeField,
    QuadExt,
    Rationals,
    SquareClass,
    is_square,
    parse_field,
    quad_ext_iso,
    square_class,
)
from .moduli import (
    OrbitKey,
    PairClass,
    enumerate_elem_abelian_classes,
    in_excluded_S,
    orbit,
    s3_act,
    sim1_equal,
    sim_equal,
)
from .normal_forms import QuarticPoly, TaylorData, normalize, taylor_at_quarter
from .ring import QuotientRing, minimal_polynomial, quotient_arith

Q = Rationals()

__version__ = "0.1.0"
